#include "doctest.h"

#include "orthocoord/error.hpp"
#include "orthocoord/frames.hpp"
#include "orthocoord/lattice.hpp"
#include "orthocoord/models.hpp"

using namespace orthocoord;

TEST_CASE("MO_k") {
    CHECK(models::mo_n(1).size() == 4);
    CHECK(models::mo_n(2).size() == 6);
    auto mo3 = models::mo_n(3);
    CHECK(mo3.size() == 8);
    CHECK(height(mo3.base()) == 2);
    for (int k = 1; k <= 4; ++k) {
        auto l = models::mo_n(k);
        CHECK(is_modular(l.base()).modular);
        CHECK(is_simple(l.base()) == (k >= 2));
        // atoms pair up under perp
        for (int i = 0; i < k; ++i) CHECK(l.perp(2 * i + 1) == 2 * i + 2);
    }
    CHECK_THROWS_AS(models::mo_n(0), Error);
}

TEST_CASE("Boolean, chain and pentagon") {
    for (int n = 1; n <= 4; ++n) {
        auto b = models::boolean(n);
        CHECK(b.size() == (1 << n));
        CHECK(is_modular(b.base()).modular);
        CHECK(height(b.base()) == n);
    }
    CHECK(models::chain(3).size() == 3);
    auto n5 = models::pentagon();
    CHECK(n5.size() == 5);
    CHECK_FALSE(is_modular(n5).modular);
    CHECK(find_pentagon(n5).has_value());
}

TEST_CASE("subspace ortholattices") {
    Field g3 = Field::galois(3), g2 = Field::galois(2), g5 = Field::galois(5);
    auto s = models::subspace_ortholattice(g3, 2, Matrix::identity(g3, 2));
    // 0, four lines, whole space: MO_2-like with 4 atoms
    CHECK(s.lattice.size() == 6);
    int atoms = 0;
    for (int i = 0; i < s.lattice.size(); ++i)
        if (s.subspaces[i].dim() == 1) {
            ++atoms;
            CHECK(s.subspaces[s.lattice.perp(i)].dim() == 1);
            CHECK(s.lattice.perp(i) != i);
        }
    CHECK(atoms == 4);
    CHECK(s.index_of(s.subspaces[3]) == 3);
    CHECK(models::subspace_ortholattice(g2, 1, Matrix::identity(g2, 1)).lattice.size() == 2);
    CHECK_THROWS_WITH_AS(models::subspace_ortholattice(g5, 2, Matrix::identity(g5, 2)), doctest::Contains("Isotropic"), Error);
}

TEST_CASE("rings") {
    auto m2 = models::finite_matrix_ring(2, 2);
    CHECK(m2.size() == 16);
    CHECK_FALSE(m2.has_star());
    CHECK(models::finite_matrix_ring(2, 2, true).has_star());
    CHECK(models::field_of_order(9).order() == 9);
    CHECK_THROWS_AS(models::field_of_order(6), Error);
    Field g2 = Field::galois(2);
    MatrixRing a({{g2, 1, Matrix::identity(g2, 1), Involution::Identity}}, false);
    MatrixRing b({{g2, 2, Matrix::identity(g2, 2), Involution::Identity}}, false);
    auto p = models::product(a, b);
    CHECK(p.blocks().size() == 2);
    CHECK(p.cardinality() == 32u);
    auto q = models::matrix_star_ring(Field::rationals(), 2, Matrix::identity(Field::rationals(), 2));
    CHECK(q.has_star());
}

TEST_CASE("canonical frames") {
    Field q = Field::rationals();
    auto phi = models::canonical_frame(3, q);
    CHECK(verify_frame(SubspaceLatticeView(q, 3), phi).valid());
    CHECK(verify_frame(models::mo_n(2), models::mo2_frame()).valid());
    CHECK_THROWS_AS(models::canonical_frame(1, q), Error);
    auto v = validate_space(q, 3, Matrix::identity(q, 3));
    auto sf = models::canonical_semiframe(v);
    CHECK(verify_frame(SubspaceOrtho(v), sf).valid());
}

TEST_CASE("catalog names are unique") {
    auto names = models::catalog_names();
    std::sort(names.begin(), names.end());
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}
