#include "doctest.h"

#include "orthocoord/error.hpp"
#include "orthocoord/json_io.hpp"
#include "orthocoord/models.hpp"

using namespace orthocoord;
using io::Json;

TEST_CASE("scalars are exact strings") {
    Field q = Field::rationals();
    CHECK(io::scalar_to_json(q, q.parse("-6/4")) == "-3/2");
    CHECK(io::scalar_from_json(q, "7/21") == q.parse("1/3"));
    CHECK(io::scalar_from_json(q, 5) == q.from_int(5));
    Field g5 = Field::galois(5);
    CHECK(io::scalar_from_json(g5, 7) == g5.from_int(2));
    CHECK_THROWS_AS(io::scalar_from_json(q, true), Error);
    CHECK_THROWS_AS(io::scalar_from_json(q, "x/2"), Error);
    // big rationals survive unchanged
    Scalar big = q.parse("123456789012345678901234567890/7");
    CHECK(io::scalar_from_json(q, io::scalar_to_json(q, big)) == big);
}

TEST_CASE("fields and matrices") {
    CHECK(io::field_from_json("Q").is_rational());
    CHECK(io::field_from_json(Json{{"p", 2}, {"k", 2}}).order() == 4);
    CHECK(io::field_from_json(Json{{"p", 7}}).order() == 7);
    CHECK_THROWS_AS(io::field_from_json("R"), Error);
    Field q = Field::rationals();
    Matrix m = Matrix::from_ints(q, {{1, 2}, {3, 4}}).scaled(q.parse("1/3"));
    CHECK(io::matrix_from_json(q, io::to_json(m)) == m);
    CHECK_THROWS_AS(io::matrix_from_json(q, Json::parse("[[1,2],[3]]")), Error);
}

TEST_CASE("lattices round-trip") {
    auto mo3 = models::mo_n(3);
    auto back = io::ortholattice_from_json(io::to_json(mo3));
    CHECK(back.size() == mo3.size());
    CHECK(back.perp_table() == mo3.perp_table());
    CHECK(back.base().order() == mo3.base().order());
    auto via_leq = io::lattice_from_json(Json{{"n", 2}, {"leq", {{true, true}, {false, true}}}});
    CHECK(via_leq.size() == 2);
    CHECK_THROWS_WITH_AS(io::lattice_from_json(Json{{"n", 2}}), doctest::Contains("covers"), Error);
    CHECK_THROWS_AS(io::lattice_from_json(Json{{"n", 2}, {"covers", {{0, 5}}}}), Error);
    // a perp that is not an involution is a contract violation, not bad input
    Json bad = io::to_json(models::mo_n(2));
    bad["perp"] = {5, 1, 1, 3, 4, 0};
    try {
        io::ortholattice_from_json(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() != ErrorKind::MalformedInput);
    }
}

TEST_CASE("frames, spaces, rings round-trip") {
    auto f = models::mo2_frame();
    auto f2 = io::frame_from_json(io::to_json(f));
    CHECK(f2.a == f.a);
    CHECK(f2.a0 == f.a0);
    CHECK(f2.kind == f.kind);

    Field q = Field::rationals();
    auto phi = models::canonical_frame(3, q);
    auto phi2 = io::frame_from_json(io::to_json(phi), q, 3);
    CHECK(phi2.a == phi.a);
    CHECK(phi2.a0 == phi.a0);

    auto space = validate_space(q, 2, Matrix::from_ints(q, {{1, 0}, {0, 2}}));
    auto space2 = io::space_from_json(io::to_json(space));
    CHECK(space2.gram == space.gram);
    CHECK_THROWS_WITH_AS(io::space_from_json(Json{{"field", {{"p", 5}}}, {"dim", 2}}), doctest::Contains("Isotropic"), Error);
    CHECK_NOTHROW(io::space_from_json(Json{{"field", {{"p", 5}}}, {"dim", 2}}, false));

    auto table = models::finite_matrix_ring(2, 2);
    auto doc = io::ring_from_json(io::to_json(table));
    REQUIRE(std::holds_alternative<TableRing>(doc));
    CHECK(std::get<TableRing>(doc).mul_table() == table.mul_table());
    auto mr = models::matrix_star_ring(q, 2, Matrix::identity(q, 2));
    auto doc2 = io::ring_from_json(io::to_json(mr));
    REQUIRE(std::holds_alternative<MatrixRing>(doc2));
    CHECK(std::get<MatrixRing>(doc2).has_star());
}

TEST_CASE("representations and eta documents") {
    Field q = Field::rationals();
    auto r = models::matrix_star_ring(q, 2, Matrix::identity(q, 2));
    auto rep = conjugation_rep(r, validate_space(q, 2, Matrix::identity(q, 2)), Matrix::from_ints(q, {{1, 1}, {0, 1}}));
    Json j = io::to_json(rep);
    CHECK(j["images"].contains("E_12"));
    auto back = io::rep_from_json(j);
    CHECK(back.unit_images == rep.unit_images);
    // alternative key spelling
    Json alt = j;
    alt["images"]["E_1_2"] = alt["images"]["E_12"];
    alt["images"].erase("E_12");
    CHECK(io::rep_from_json(alt).unit_images == rep.unit_images);
    Json missing = j;
    missing["images"].erase("E_21");
    CHECK_THROWS_WITH_AS(io::rep_from_json(missing), doctest::Contains("E_21"), Error);

    auto r3 = models::matrix_star_ring(q, 3, Matrix::identity(q, 3));
    auto v3 = validate_space(q, 3, Matrix::identity(q, 3));
    auto eta = frame_eta_from_matrix(r3, Matrix::from_ints(q, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    Json e = io::to_json(r3, v3, eta);
    CHECK(e["eta"].contains("E_11-E_21"));
    auto doc = io::eta_from_json(e);
    CHECK(doc.eta.diagonal == eta.diagonal);
    CHECK(doc.eta.axes == eta.axes);
    REQUIRE(doc.eta.extension.has_value());
    CHECK(*doc.eta.extension == *eta.extension);
}

TEST_CASE("reports") {
    Report r;
    CHECK(io::to_json(r)["verdict"] == "pass");
    r.add("PerpViolation", "a=E_11");
    Json j = io::to_json(r);
    CHECK(j["verdict"] == "fail");
    CHECK(j["violations"][0]["claim"] == "PerpViolation");
    CHECK_THROWS_WITH_AS(io::parse_text("{\"a\": }", "x.json"), doctest::Contains("x.json"), Error);
}
