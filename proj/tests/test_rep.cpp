#include "doctest.h"

#include <random>

#include "orthocoord/error.hpp"
#include "orthocoord/models.hpp"
#include "orthocoord/rep.hpp"

using namespace orthocoord;

namespace {

Field Q() { return Field::rationals(); }

Matrix ints(const Field& f, std::vector<std::vector<long>> rows) { return Matrix::from_ints(f, rows); }

Matrix rational(std::vector<std::vector<std::string>> rows) {
    std::vector<std::vector<Scalar>> out;
    for (auto& r : rows) {
        std::vector<Scalar> row;
        for (auto& t : r) row.push_back(Q().parse(t));
        out.push_back(row);
    }
    return Matrix::from_rows(Q(), out);
}

// 3-4-5 rotation on the first two coordinates.
Matrix rotation3() { return rational({{"3/5", "4/5", "0"}, {"-4/5", "3/5", "0"}, {"0", "0", "1"}}); }

MatrixRing transpose_ring(const Field& f, std::size_t n) { return models::matrix_star_ring(f, n, Matrix::identity(f, n)); }

IPSpace euclid(std::size_t n) { return validate_space(Q(), n, Matrix::identity(Q(), n)); }

FrameWitness<Subspace> semiframe_for(const MatrixRing& r) {
    const auto& b = r.blocks().front();
    return build_orthogonal_semiframe(SubspaceOrtho(b.space()), models::canonical_frame(static_cast<int>(b.dim), b.field));
}

// <x, y> computed entry by entry.
Scalar naive_form(const IPSpace& s, const Matrix& x, const Matrix& y) {
    Scalar acc = s.field.zero();
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j)
            acc = s.field.add(acc, s.field.mul(s.field.mul(s.field.conj(x(i, 0), s.sigma), s.gram(i, j)), y(j, 0)));
    return acc;
}

// psi = phi* checked on all pairs of standard basis vectors.
bool naive_is_adjoint(const IPSpace& s, const Matrix& phi, const Matrix& psi) {
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) {
            Matrix x = Matrix::unit(s.field, s.dim, i, 0).block(0, 0, s.dim, 1);
            Matrix y = Matrix::unit(s.field, s.dim, j, 0).block(0, 0, s.dim, 1);
            if (naive_form(s, phi * x, y) != naive_form(s, x, psi * y)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("ring representations") {
    auto r = transpose_ring(Q(), 2);
    auto id = conjugation_rep(r, euclid(2), Matrix::identity(Q(), 2));
    CHECK(verify_ring_rep(id).pass());
    auto shear = conjugation_rep(r, euclid(2), ints(Q(), {{1, 1}, {0, 1}}));
    CHECK(verify_ring_rep(shear).pass());

    // E_11 -> 0 breaks the unit and injectivity
    std::vector<Matrix> images = id.unit_images;
    images[0] = Matrix(Q(), 2, 2);
    auto broken = make_ring_rep(r, euclid(2), images);
    auto rep = verify_ring_rep(broken);
    CHECK_FALSE(rep.pass());
    bool unit = false, inj = false;
    for (auto& v : rep.violations) {
        unit |= v.claim == "unit";
        inj |= v.claim == "injectivity";
    }
    CHECK(unit);
    CHECK(inj);

    CHECK_THROWS_AS(make_ring_rep(r, euclid(3), id.unit_images), Error);
    CHECK_THROWS_AS(conjugation_rep(r, euclid(2), ints(Q(), {{1, 1}, {1, 1}})), Error);
}

TEST_CASE("induced lattice and ortholattice representations") {
    auto r = transpose_ring(Q(), 2);
    auto id = conjugation_rep(r, euclid(2), Matrix::identity(Q(), 2));
    CHECK(eta(id, BlockMatrix{Matrix::unit(Q(), 2, 0, 0)}) == Subspace::column_space(Matrix::unit(Q(), 2, 0, 0)));
    CHECK(induce_lattice_rep(id).pass());
    CHECK(verify_ortho_rep(id).pass());

    auto shear = conjugation_rep(r, euclid(2), ints(Q(), {{1, 1}, {0, 1}}));
    CHECK(induce_lattice_rep(shear).pass());
    auto ortho = verify_ortho_rep(shear);
    REQUIRE_FALSE(ortho.pass());
    CHECK(ortho.violations.front().claim == "PerpViolation");

    // finite case is exhaustive: M_2(GF(3)) has 6 principal right ideals
    Field g3 = Field::galois(3);
    auto rf = transpose_ring(g3, 2);
    auto idf = conjugation_rep(rf, validate_space(g3, 2, Matrix::identity(g3, 2)), Matrix::identity(g3, 2));
    CHECK(induce_lattice_rep(idf).pass());
    CHECK(verify_ortho_rep(idf).pass());
}

TEST_CASE("orthogonality criterion examples") {
    auto v = euclid(2);
    Subspace u = Subspace::column_space(Matrix::unit(Q(), 2, 0, 0));
    Subspace w = Subspace::column_space(Matrix::unit(Q(), 2, 1, 1));
    for (long c : {1L, 2L, -3L}) {
        Matrix phi = Matrix::unit(Q(), 2, 1, 0).scaled(Q().from_int(c));
        auto same = claim1_test(v, u, w, phi, Matrix::unit(Q(), 2, 0, 1).scaled(Q().from_int(c)));
        CHECK(same.adjoint_side);
        CHECK(same.orthogonal_side);
        auto other = claim1_test(v, u, w, phi, Matrix::unit(Q(), 2, 0, 1).scaled(Q().from_int(c + 1)));
        CHECK_FALSE(other.adjoint_side);
        CHECK_FALSE(other.orthogonal_side);
    }
    auto zero = claim1_test(v, u, w, Matrix(Q(), 2, 2), Matrix(Q(), 2, 2));
    CHECK((zero.adjoint_side && zero.orthogonal_side));
    CHECK_THROWS_AS(claim1_test(v, u, u, Matrix(Q(), 2, 2), Matrix(Q(), 2, 2)), Error);
    CHECK_THROWS_AS(claim1_test(v, u, w, Matrix::unit(Q(), 2, 0, 1), Matrix(Q(), 2, 2)), Error);
}

TEST_CASE("orthogonality criterion randomized") {
    std::vector<IPSpace> spaces{euclid(3), validate_space(Q(), 3, ints(Q(), {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})),
                                validate_space(Field::galois(3), 2, Matrix::identity(Field::galois(3), 2))};
    std::mt19937_64 rng(7);
    for (const auto& v : spaces) {
        int positives = 0, negatives = 0;
        for (int t = 0; t < 100; ++t) {
            Subspace u = Subspace::column_space(random_matrix(v.field, v.dim, 1, rng));
            if (u.is_zero()) continue;
            Subspace rest = orthogonal(v, u);
            Subspace w = Subspace::column_space(rest.basis_columns() * random_matrix(v.field, rest.dim(), 1, rng));
            Matrix pu = ortho_projection(v, u), pw = ortho_projection(v, w);
            Matrix phi = pw * random_matrix(v.field, v.dim, v.dim, rng) * pu;
            Matrix psi = adjoint(v, phi);
            auto good = claim1_test(v, u, w, phi, psi);
            CHECK(good.agree());
            CHECK(good.adjoint_side == naive_is_adjoint(v, phi, psi));
            CHECK(good.orthogonal_side);
            ++positives;
            Matrix bump = pu * random_matrix(v.field, v.dim, v.dim, rng) * pw;
            if (bump.is_zero()) continue;
            auto bad = claim1_test(v, u, w, phi, psi + bump);
            CHECK(bad.agree());
            CHECK_FALSE(bad.orthogonal_side);
            CHECK_FALSE(naive_is_adjoint(v, phi, psi + bump));
            ++negatives;
        }
        CHECK(positives > 80);
        CHECK(negatives > 30);
    }
}

TEST_CASE("cancellator") {
    auto r = transpose_ring(Q(), 2);
    BlockMatrix e{Matrix::unit(Q(), 2, 0, 0)}, f{Matrix::unit(Q(), 2, 1, 1)}, g{ints(Q(), {{1, 0}, {1, 0}})};
    auto can = claim3_cancellator(r, e, f, g);
    Matrix minus_e21 = Matrix::unit(Q(), 2, 1, 0).scaled(Q().from_int(-1));
    CHECK(can.omega_e[0] == minus_e21);
    CHECK(can.c[0] == minus_e21);
    // c lies in fRe
    CHECK(r.mul(r.mul(f, can.c), e) == can.c);

    auto trivial = claim3_cancellator(r, r.zero(), r.zero(), r.zero());
    CHECK(r.is_zero(trivial.c));

    BlockMatrix bad{Matrix::unit(Q(), 2, 0, 0)};
    CHECK_THROWS_WITH_AS(claim3_cancellator(r, e, f, bad), doctest::Contains("NoSolution"), Error);
    CHECK_THROWS_AS(claim3_cancellator(r, e, e, g), Error);
}

TEST_CASE("adjoint recovery succeeds on star representations") {
    for (std::size_t n : {2u, 3u}) {
        auto r = transpose_ring(Q(), n);
        auto rep = conjugation_rep(r, euclid(n), Matrix::identity(Q(), n));
        auto rec = recover_adjoints(rep, semiframe_for(r));
        CHECK(rec.preconditions.pass());
        CHECK(rec.steps.pass());
        CHECK(rec.star_representation());
        CHECK(rec.generators_checked > 0);
        CHECK(rec.random_checked == 50);
    }
    auto r3 = transpose_ring(Q(), 3);
    auto rot = conjugation_rep(r3, euclid(3), rotation3());
    CHECK(recover_adjoints(rot, semiframe_for(r3)).star_representation());

    // different forms on R and V: swap sends diag(1,2) to diag(2,1)
    auto r2 = models::matrix_star_ring(Q(), 2, ints(Q(), {{1, 0}, {0, 2}}));
    auto v2 = validate_space(Q(), 2, ints(Q(), {{2, 0}, {0, 1}}));
    auto swap = conjugation_rep(r2, v2, ints(Q(), {{0, 1}, {1, 0}}));
    CHECK(recover_adjoints(swap, semiframe_for(r2)).star_representation());
    // scaled form, identity map
    auto scaled = conjugation_rep(r2, validate_space(Q(), 2, ints(Q(), {{3, 0}, {0, 6}})), Matrix::identity(Q(), 2));
    CHECK(recover_adjoints(scaled, semiframe_for(r2)).star_representation());

    // finite field, exhaustive ortho check
    Field g3 = Field::galois(3);
    auto rf = transpose_ring(g3, 2);
    auto idf = conjugation_rep(rf, validate_space(g3, 2, Matrix::identity(g3, 2)), Matrix::identity(g3, 2));
    CHECK(recover_adjoints(idf, semiframe_for(rf)).star_representation());
}

TEST_CASE("adjoint recovery rejects non-ortho representations as a precondition") {
    auto r = transpose_ring(Q(), 2);
    auto shear = conjugation_rep(r, euclid(2), ints(Q(), {{1, 1}, {0, 1}}));
    auto rec = recover_adjoints(shear, semiframe_for(r));
    CHECK_FALSE(rec.preconditions.pass());
    CHECK(rec.steps.pass());
    CHECK_FALSE(rec.star_representation());

    // a semiframe whose parts are not orthogonal
    auto id = conjugation_rep(r, euclid(2), Matrix::identity(Q(), 2));
    auto sf = semiframe_for(r);
    sf.a[1] = Subspace::column_space(ints(Q(), {{1, 0}, {1, 0}}));
    CHECK_FALSE(recover_adjoints(id, sf).preconditions.pass());
}

TEST_CASE("coordinatization over Q") {
    auto frame = models::canonical_frame(3, Q());
    auto r0 = coordinatize(frame, Q(), 3);
    CHECK(r0.k == 1);
    for (std::size_t i = 0; i < 3; ++i) CHECK(r0.idempotents[i] == Matrix::unit(Q(), 3, i, i));
    auto rep = verify_coordinatization(r0, std::nullopt, 0, 20);
    CHECK(rep.report.pass());
    CHECK(rep.sampled == 20);

    // doubled space: frame of Q^6 with 2-dim summands, images of a rotated basis
    std::mt19937_64 rng(3);
    Matrix s = random_invertible(Q(), 6, rng);
    FrameWitness<Subspace> big;
    big.kind = FrameKind::Skew;
    big.n = big.m = 3;
    for (std::size_t i = 0; i < 3; ++i) big.a.push_back(Subspace::column_space(s.block(0, 2 * i, 6, 2)));
    for (std::size_t i = 1; i < 3; ++i) {
        big.a0.push_back(Subspace::column_space(s.block(0, 0, 6, 2) - s.block(0, 2 * i, 6, 2)));
        big.b.push_back(big.a[0]);
    }
    auto r6 = coordinatize(big, Q(), 6);
    CHECK(r6.k == 2);
    auto rep6 = verify_coordinatization(r6, std::nullopt, 1, 20);
    CHECK(rep6.report.pass());
    // element(A) acts like A (x) I_2 in the basis s
    Matrix a = ints(Q(), {{1, 2, 0}, {0, 1, -1}, {3, 0, 0}});
    CHECK(r6.coordinates(r6.element(a)) == a);
    CHECK_FALSE(r6.coordinates(Matrix::unit(Q(), 6, 0, 1) + s * Matrix::unit(Q(), 6, 1, 0)).has_value());
}

TEST_CASE("coordinatization over GF(3) is a lattice isomorphism") {
    Field g3 = Field::galois(3);
    auto frame = models::canonical_frame(3, g3);
    auto r0 = coordinatize(frame, g3, 3);
    auto all = enumerate_subspaces(g3, 3);
    CHECK(all.size() == 28);
    auto rep = verify_coordinatization(r0, all, 0, 20);
    CHECK(rep.report.pass());
    CHECK(rep.lattice_size == 28);
}

TEST_CASE("coordinatization rejects bad input") {
    auto frame = models::canonical_frame(3, Q());
    auto zero = frame;
    zero.a[0] = Subspace(Q(), 3);
    CHECK_THROWS_WITH_AS(coordinatize(zero, Q(), 3), doctest::Contains("NotAFrame"), Error);
    auto small = models::canonical_frame(2, Q());
    CHECK_THROWS_WITH_AS(coordinatize(small, Q(), 2), doctest::Contains("NotAFrame"), Error);
    Field g4 = Field::galois(2, 2);
    CHECK_THROWS_WITH_AS(coordinatize(models::canonical_frame(3, g4), g4, 3), doctest::Contains("NonPrimeField"), Error);
    auto axis = frame;
    axis.a0[0] = frame.a[0];
    CHECK_THROWS_WITH_AS(coordinatize(axis, Q(), 3), doctest::Contains("NotAFrame"), Error);
}

TEST_CASE("representation pipeline") {
    auto r3 = transpose_ring(Q(), 3);
    for (const Matrix& q : {Matrix::identity(Q(), 3), rotation3()}) {
        auto res = ring_embedding_from_ortho_rep(r3, euclid(3), frame_eta_from_matrix(r3, q));
        CHECK(res.report.pass());
        CHECK(res.star_stage_run);
        REQUIRE(res.iota.has_value());
        auto q_inv = *q.inverse();
        CHECK(res.iota->unit_image(0, 1) == q * Matrix::unit(Q(), 3, 0, 1) * q_inv);
    }

    // GF(3) without involution: lattice half only
    Field g3 = Field::galois(3);
    MatrixRing plain({{g3, 3, Matrix::identity(g3, 3), Involution::Identity}}, false);
    IPSpace bare{g3, 3, Matrix::identity(g3, 3), Involution::Identity};
    std::mt19937_64 rng(5);
    Matrix q = random_invertible(g3, 3, rng);
    auto res = ring_embedding_from_ortho_rep(plain, bare, frame_eta_from_matrix(plain, q));
    CHECK(res.report.pass());
    CHECK_FALSE(res.star_stage_run);

    // a degenerate frame image
    auto eta_bad = frame_eta_from_matrix(r3, Matrix::identity(Q(), 3));
    eta_bad.diagonal[1] = eta_bad.diagonal[0];
    eta_bad.extension.reset();
    auto bad = ring_embedding_from_ortho_rep(r3, euclid(3), eta_bad);
    REQUIRE_FALSE(bad.report.pass());
    CHECK(bad.report.violations.front().claim == "FrameImageDegenerate");
}

TEST_CASE("adjoint recovery never fails a step once its preconditions hold") {
    std::mt19937_64 rng(11);
    int star_reps = 0, rejected = 0;
    for (int t = 0; t < 24; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
        // random positive definite J_R, S arbitrary, J_V = S^{-T} J_R S^{-1}
        Matrix m = random_matrix(Q(), n, n, rng);
        Matrix jr = m.transpose() * m + Matrix::identity(Q(), n);
        auto r = models::matrix_star_ring(Q(), n, jr);
        Matrix s = random_invertible(Q(), n, rng);
        Matrix s_inv = *s.inverse();
        IPSpace v = validate_space(Q(), n, s_inv.transpose() * jr * s_inv);
        auto good = recover_adjoints(conjugation_rep(r, v, s), semiframe_for(r), t, 20);
        CHECK(good.preconditions.pass());
        CHECK(good.steps.pass());
        ++star_reps;

        // the same S against the dot product on V: usually not a star rep
        auto other = recover_adjoints(conjugation_rep(r, euclid(n), s), semiframe_for(r), t, 20);
        if (other.preconditions.pass()) CHECK(other.steps.pass());
        else ++rejected;
    }
    CHECK(star_reps == 24);
    CHECK(rejected > 0);
}

TEST_CASE("Cayley orthogonal matrices give star representations") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 3;
        Matrix a = random_matrix(Q(), n, n, rng);
        Matrix skew = a - a.transpose();
        Matrix id = Matrix::identity(Q(), n);
        Matrix q = (id - skew) * *(id + skew).inverse();
        REQUIRE(q.transpose() * q == id);
        auto r = transpose_ring(Q(), n);
        auto res = ring_embedding_from_ortho_rep(r, euclid(n), frame_eta_from_matrix(r, q), t, 20);
        CHECK(res.report.pass());
        CHECK(res.star_stage_run);
    }
}

TEST_CASE("every ring representation induces a lattice embedding") {
    std::mt19937_64 rng(13);
    Field g3 = Field::galois(3);
    for (int t = 0; t < 6; ++t) {
        MatrixRing rf({{g3, 2, Matrix::identity(g3, 2), Involution::Identity}}, false);
        IPSpace bare{g3, 2, Matrix::identity(g3, 2), Involution::Identity};
        auto rep = conjugation_rep(rf, bare, random_invertible(g3, 2, rng));
        CHECK(verify_ring_rep(rep).pass());
        CHECK(induce_lattice_rep(rep, t).pass());
        auto rq = transpose_ring(Q(), 3);
        auto repq = conjugation_rep(rq, euclid(3), random_invertible(Q(), 3, rng));
        CHECK(induce_lattice_rep(repq, t, 20).pass());
    }
}
