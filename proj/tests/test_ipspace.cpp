#include "doctest.h"

#include <random>

#include "orthocoord/error.hpp"
#include "orthocoord/ipspace.hpp"

using namespace orthocoord;

namespace {

Field Q() { return Field::rationals(); }

Matrix diag(const Field& f, std::vector<long> d) {
    Matrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = f.from_int(d[i]);
    return m;
}

Subspace span(const Field& f, std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Scalar>> v;
    for (auto& r : rows) {
        std::vector<Scalar> row;
        for (long x : r) row.push_back(f.from_int(x));
        v.push_back(row);
    }
    return Subspace::span_of(f, v);
}

// <x, y> straight from the definition, entry by entry.
Scalar naive_form(const IPSpace& s, const Matrix& x, const Matrix& y) {
    Scalar acc = s.field.zero();
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j)
            acc = s.field.add(acc, s.field.mul(s.field.mul(s.field.conj(x(i, 0), s.sigma), s.gram(i, j)), y(j, 0)));
    return acc;
}

std::vector<IPSpace> catalog() {
    Field g3 = Field::galois(3), g4 = Field::galois(2, 2);
    return {validate_space(Q(), 2, Matrix::identity(Q(), 2)), validate_space(Q(), 2, diag(Q(), {1, 2})),
            validate_space(Q(), 3, Matrix::identity(Q(), 3)),
            validate_space(Q(), 3, Matrix::from_ints(Q(), {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})),
            validate_space(g3, 2, Matrix::identity(g3, 2)), validate_space(g4, 1, Matrix::identity(g4, 1), Involution::Frobenius)};
}

}  // namespace

TEST_CASE("space validation") {
    CHECK_NOTHROW(validate_space(Q(), 2, Matrix::identity(Q(), 2)));
    Field g3 = Field::galois(3), g5 = Field::galois(5);
    CHECK_NOTHROW(validate_space(g3, 2, Matrix::identity(g3, 2)));
    // exhaustive oracle: x^2 + y^2 over GF(3)
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y)
            if (x || y) CHECK((x * x + y * y) % 3 != 0);
    CHECK_THROWS_WITH_AS(validate_space(g5, 2, Matrix::identity(g5, 2)), doctest::Contains("Isotropic: v=(1,2)"), Error);
    CHECK_THROWS_WITH_AS(validate_space(Q(), 2, Matrix::from_ints(Q(), {{1, 1}, {1, 1}})),
                         doctest::Contains("NotInvertibleGram"), Error);
    CHECK_THROWS_WITH_AS(validate_space(Q(), 2, Matrix::from_ints(Q(), {{1, 1}, {0, 1}})),
                         doctest::Contains("NotOrthosymmetric"), Error);
    CHECK_THROWS_WITH_AS(validate_space(Q(), 2, diag(Q(), {1, -1})), doctest::Contains("Isotropic"), Error);
    CHECK_THROWS_WITH_AS(validate_space(Q(), 2, diag(Q(), {1, -2})), doctest::Contains("Unsupported"), Error);
    CHECK_NOTHROW(validate_space(Q(), 2, diag(Q(), {-1, -3})));
    Field g4 = Field::galois(2, 2);
    CHECK_THROWS_WITH_AS(validate_space(g4, 2, Matrix::identity(g4, 2), Involution::Frobenius),
                         doctest::Contains("Isotropic"), Error);
}

TEST_CASE("form agrees with the entrywise definition") {
    std::mt19937_64 rng(5);
    for (const auto& s : catalog())
        for (int t = 0; t < 20; ++t) {
            Matrix x = random_matrix(s.field, s.dim, 1, rng), y = random_matrix(s.field, s.dim, 1, rng);
            CHECK(form(s, x, y) == naive_form(s, x, y));
        }
}

TEST_CASE("orthogonal complements") {
    auto dot = validate_space(Q(), 2, Matrix::identity(Q(), 2));
    CHECK(orthogonal(dot, span(Q(), {{1, 0}})) == span(Q(), {{0, 1}}));
    CHECK(orthogonal(dot, Subspace::whole(Q(), 2)).is_zero());
    auto d12 = validate_space(Q(), 2, diag(Q(), {1, 2}));
    CHECK(orthogonal(d12, span(Q(), {{1, 0}})) == span(Q(), {{0, 1}}));
    CHECK(orthogonal(d12, span(Q(), {{1, 1}})) == span(Q(), {{2, -1}}));
    std::mt19937_64 rng(9);
    for (const auto& s : catalog())
        for (int t = 0; t < 10; ++t) {
            auto u = Subspace::column_space(random_matrix(s.field, s.dim, 1 + t % s.dim, rng));
            auto w = orthogonal(s, u);
            CHECK(u.dim() + w.dim() == s.dim);
            CHECK(orthogonal(s, w) == u);
            CHECK(u.meet(w).is_zero());
            for (std::size_t i = 0; i < u.dim(); ++i)
                for (std::size_t j = 0; j < w.dim(); ++j)
                    CHECK(s.field.is_zero(naive_form(s, u.basis().row(i).transpose(), w.basis().row(j).transpose())));
            auto bigger = u.join(Subspace::column_space(random_matrix(s.field, s.dim, 1, rng)));
            CHECK(orthogonal(s, bigger).leq(w));
        }
}

TEST_CASE("orthogonal projections") {
    auto dot = validate_space(Q(), 2, Matrix::identity(Q(), 2));
    CHECK(ortho_projection(dot, span(Q(), {{1, 0}})) == Matrix::unit(Q(), 2, 0, 0));
    Matrix half(Q(), 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) half(i, j) = Scalar(1, 2);
    CHECK(ortho_projection(dot, span(Q(), {{1, 1}})) == half);
    CHECK(ortho_projection(dot, Subspace(Q(), 2)).is_zero());
    std::mt19937_64 rng(13);
    for (const auto& s : catalog())
        for (int t = 0; t < 10; ++t) {
            auto u = Subspace::column_space(random_matrix(s.field, s.dim, 1, rng));
            Matrix p = ortho_projection(s, u);
            CHECK(p * p == p);
            CHECK(adjoint(s, p) == p);
            CHECK(Subspace::column_space(p) == u);
            CHECK(p + ortho_projection(s, orthogonal(s, u)) == Matrix::identity(s.field, s.dim));
            CHECK(is_closed(s, u));
        }
}

TEST_CASE("adjoints") {
    auto dot = validate_space(Q(), 2, Matrix::identity(Q(), 2));
    CHECK(adjoint(dot, Matrix::unit(Q(), 2, 0, 1)) == Matrix::unit(Q(), 2, 1, 0));
    auto d12 = validate_space(Q(), 2, diag(Q(), {1, 2}));
    CHECK(adjoint(d12, Matrix::unit(Q(), 2, 0, 1)) == Matrix::unit(Q(), 2, 1, 0).scaled(Scalar(1, 2)));
    CHECK(adjoint(dot, Matrix::identity(Q(), 2)) == Matrix::identity(Q(), 2));
    std::mt19937_64 rng(17);
    for (const auto& s : catalog())
        for (int t = 0; t < 100; ++t) {
            Matrix phi = random_matrix(s.field, s.dim, s.dim, rng), psi = random_matrix(s.field, s.dim, s.dim, rng);
            CHECK(adjoint(s, adjoint(s, phi)) == phi);
            CHECK(adjoint(s, phi * psi) == adjoint(s, psi) * adjoint(s, phi));
            CHECK(adjoint(s, phi + psi) == adjoint(s, phi) + adjoint(s, psi));
            Matrix x = random_matrix(s.field, s.dim, 1, rng), y = random_matrix(s.field, s.dim, 1, rng);
            CHECK(naive_form(s, phi * x, y) == naive_form(s, x, adjoint(s, phi) * y));
        }
}

TEST_CASE("projections of End*(V) are exactly the orthogonal projections") {
    auto dot = validate_space(Q(), 2, Matrix::identity(Q(), 2));
    auto e11 = fact9_check(dot, Matrix::unit(Q(), 2, 0, 0));
    CHECK(e11.is_star_projection);
    CHECK(e11.equals_image_projection);
    auto skew = fact9_check(dot, Matrix::from_ints(Q(), {{1, 1}, {0, 0}}));
    CHECK_FALSE(skew.is_star_projection);
    CHECK_FALSE(skew.equals_image_projection);
    std::mt19937_64 rng(23);
    for (const auto& s : catalog()) {
        if (!s.field.is_rational()) continue;
        for (int t = 0; t < 30; ++t) {
            Matrix sm = random_invertible(s.field, s.dim, rng);
            Matrix d(s.field, s.dim, s.dim);
            for (std::size_t i = 0; i < s.dim; ++i) d(i, i) = (t >> i) & 1;
            auto v = fact9_check(s, sm * d * *sm.inverse());
            CHECK(v.coincide());
        }
    }
}
