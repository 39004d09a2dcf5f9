#include "doctest.h"

#include "orthocoord/error.hpp"
#include "orthocoord/field.hpp"
#include "orthocoord/matrix.hpp"

using namespace orthocoord;

TEST_CASE("prime field arithmetic matches integer residues") {
    Field f = Field::galois(7);
    for (long a = 0; a < 7; ++a)
        for (long b = 0; b < 7; ++b) {
            CHECK(f.add(a, b) == (a + b) % 7);
            CHECK(f.mul(a, b) == (a * b) % 7);
            if (b) CHECK(f.mul(f.div(a, b), b) == a);
        }
    CHECK(f.reduce(Scalar(1, 3)) == 5);  // 3 * 5 = 15 = 1 mod 7
    CHECK(f.from_int(-1) == 6);
}

TEST_CASE("extension fields satisfy the field axioms") {
    for (auto [p, k] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {5u, 2u}}) {
        Field f = Field::galois(p, k);
        auto els = f.elements();
        REQUIRE(els.size() == f.order());
        for (const auto& a : els) {
            if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.add(a, f.neg(a)) == f.zero());
            for (const auto& b : els) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (const auto& c : els) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

TEST_CASE("frobenius is an involutive field automorphism on GF(p^2)") {
    Field f = Field::galois(3, 2);
    REQUIRE(f.supports(Involution::Frobenius));
    std::size_t fixed = 0;
    for (const auto& a : f.elements()) {
        CHECK(f.conj(f.conj(a, Involution::Frobenius), Involution::Frobenius) == a);
        if (f.conj(a, Involution::Frobenius) == a) ++fixed;
        for (const auto& b : f.elements())
            CHECK(f.conj(f.mul(a, b), Involution::Frobenius) ==
                  f.mul(f.conj(a, Involution::Frobenius), f.conj(b, Involution::Frobenius)));
    }
    CHECK(fixed == 3);  // the prime subfield
    CHECK_FALSE(Field::galois(3).supports(Involution::Frobenius));
    CHECK_FALSE(Field::rationals().supports(Involution::Frobenius));
}

TEST_CASE("rational matrices: inverse, nullspace, solve") {
    Field q = Field::rationals();
    Matrix a = Matrix::from_ints(q, {{2, 1}, {1, 1}});
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(q, 2));
    CHECK(a.determinant() == 1);

    Matrix s = Matrix::from_ints(q, {{1, 2, 3}, {2, 4, 6}});
    CHECK(s.rank() == 1);
    Matrix ns = s.nullspace();
    CHECK(ns.cols() == 2);
    CHECK((s * ns).is_zero());
    CHECK_FALSE(s.inverse());

    auto x = a.solve(Matrix::from_ints(q, {{3}, {2}}));
    REQUIRE(x);
    CHECK(*x == Matrix::from_ints(q, {{1}, {1}}));
    CHECK_FALSE(s.solve(Matrix::from_ints(q, {{1}, {0}})));
}

TEST_CASE("kronecker product realizes vec(AXB) = (B^T (x) A) vec(X)") {
    Field q = Field::rationals();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        Matrix a = random_matrix(q, 2, 2, rng), x = random_matrix(q, 2, 2, rng), b = random_matrix(q, 2, 2, rng);
        CHECK((a * x * b).vectorized() == kronecker(b.transpose(), a) * x.vectorized());
    }
}

TEST_CASE("parsing and formatting round-trip") {
    Field q = Field::rationals();
    CHECK(q.parse("-3/4") == Scalar(-3, 4));
    CHECK(q.format(q.parse("5/10")) == "1/2");
    Field f = Field::galois(5);
    CHECK(f.parse("7") == 2);
    CHECK_THROWS_AS(Field::galois(6), Error);
}
