#include "doctest.h"

#include <random>

#include "orthocoord/error.hpp"
#include "orthocoord/frames.hpp"
#include "orthocoord/ipspace.hpp"
#include "orthocoord/models.hpp"

using namespace orthocoord;

namespace {

// MO_2 indices: 0, a=1, a'=2, b=3, b'=4, 1=5
const int A = 1, AP = 2, B = 3, BP = 4;

bool oracle_is_ortho(const FiniteLattice& l, const std::vector<Elem>& perp) {
    for (int a = 0; a < l.size(); ++a) {
        if (perp[perp[a]] != a) return false;
        if (l.join(a, perp[a]) != l.top() || l.meet(a, perp[a]) != l.bottom()) return false;
        for (int b = 0; b < l.size(); ++b)
            if (l.leq(a, b) && !l.leq(perp[b], perp[a])) return false;
    }
    return true;
}

Subspace span(const Field& f, std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Scalar>> v;
    for (auto& r : rows) v.emplace_back(r.begin(), r.end());
    return Subspace::span_of(f, v);
}

SubspaceOrtho dot_space(std::size_t n) {
    Field q = Field::rationals();
    return SubspaceOrtho(validate_space(q, n, Matrix::identity(q, n)));
}

// Skew 2-m frame S(e_block_i) with blocks of size k, axes graphs of -id.
FrameWitness<Subspace> random_skew_frame(std::size_t k, int m, std::mt19937_64& rng) {
    Field q = Field::rationals();
    const std::size_t n = k * static_cast<std::size_t>(m);
    Matrix s = random_invertible(q, n, rng, 2);
    auto cols = [&](std::vector<std::size_t> idx) {
        Matrix b(q, n, idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (std::size_t r = 0; r < n; ++r) b(r, c) = s(r, idx[c]);
        return Subspace::column_space(b);
    };
    FrameWitness<Subspace> phi;
    phi.kind = FrameKind::Skew;
    phi.n = 2;
    phi.m = m;
    for (int i = 0; i < m; ++i) {
        std::vector<std::size_t> idx;
        for (std::size_t t = 0; t < k; ++t) idx.push_back(i * k + t);
        phi.a.push_back(cols(idx));
    }
    for (int i = 1; i < m; ++i) {
        Matrix g(q, n, k);
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t r = 0; r < n; ++r) g(r, t) = s(r, t) - s(r, i * k + t);
        phi.a0.push_back(Subspace::column_space(g));
        phi.b.push_back(phi.a[0]);
    }
    return phi;
}

}  // namespace

TEST_CASE("ortholattice validation") {
    auto mo2 = models::mo_n(2);
    CHECK(mo2.perp(A) == AP);
    CHECK(models::boolean(3).size() == 8);
    const auto& base = mo2.base();
    // a <-> b together with a' <-> b' is again an orthocomplementation
    std::vector<Elem> swap_pairs{5, B, BP, A, AP, 0};
    CHECK(oracle_is_ortho(base, swap_pairs));
    CHECK_NOTHROW(OrthoLattice::validate(base, swap_pairs));
    // a <-> b with a', b' fixed: a'^perp = a'
    std::vector<Elem> swap_only{5, B, AP, A, BP, 0};
    CHECK_FALSE(oracle_is_ortho(base, swap_only));
    CHECK_THROWS_WITH_AS(OrthoLattice::validate(base, swap_only), doctest::Contains("NotComplement"), Error);
    std::vector<Elem> not_invol{5, AP, B, A, BP, 0};
    CHECK_THROWS_WITH_AS(OrthoLattice::validate(base, not_invol), doctest::Contains("NotInvolution"), Error);
    // the 4-chain 0 < x < y < 1 with x <-> y fails order reversal
    CHECK_THROWS_AS(OrthoLattice::validate(models::chain(4), {3, 2, 1, 0}), Error);
}

TEST_CASE("orthogonality is symmetric") {
    for (const auto& l : {models::mo_n(3), models::boolean(3)})
        for (int a = 0; a < l.size(); ++a)
            for (int b = 0; b < l.size(); ++b) CHECK(l.orthogonal(a, b) == l.orthogonal(b, a));
}

TEST_CASE("sections") {
    auto b3 = models::boolean(3);
    CHECK(section(b3, b3.top()).lattice.size() == 8);
    auto s = section(b3, 6);
    CHECK(s.lattice.size() == 4);
    CHECK(is_modular(s.lattice.base()).modular);
    CHECK(height(s.lattice.base()) == 2);
    CHECK(section(b3, 0).lattice.size() == 1);
    for (const auto& l : {models::mo_n(2), models::boolean(3)})
        for (int u = 0; u < l.size(); ++u) {
            auto sec = section(l, u);
            for (int i = 0; i < sec.lattice.size(); ++i)
                for (int j = 0; j < sec.lattice.size(); ++j)
                    CHECK(sec.lattice.orthogonal(i, j) == l.orthogonal(sec.embed[i], sec.embed[j]));
        }
}

TEST_CASE("congruences of modular ortholattices respect perp") {
    Field g3 = Field::galois(3);
    std::vector<OrthoLattice> cat{models::mo_n(1), models::mo_n(2), models::mo_n(3), models::boolean(2), models::boolean(3),
                                  models::subspace_ortholattice(g3, 2, Matrix::identity(g3, 2)).lattice};
    for (const auto& l : cat) {
        REQUIRE(is_modular(l.base()).modular);
        for (const auto& theta : congruences(l.base()).items) CHECK(check_congruence_perp(l, theta).compatible);
        CHECK(check_congruence_perp(l, Congruence::identity(l.size())).compatible);
        CHECK(check_congruence_perp(l, Congruence::all(l.size())).compatible);
    }
}

TEST_CASE("verify_frame on MO_2") {
    auto l = models::mo_n(2);
    auto phi = models::mo2_frame();
    CHECK(verify_frame(l, phi).valid());
    FrameWitness<Elem> semi{FrameKind::OrthoSemiframe, 2, 2, {A, AP}, {}, {AP, A}, {B, B}};
    CHECK(verify_frame(l, semi).valid());
    auto bad = phi;
    bad.a[0] = 0;
    auto r = verify_frame(l, bad);
    CHECK_FALSE(r.valid());
    CHECK(std::find(r.violations.begin(), r.violations.end(), "a_0 != 0") != r.violations.end());
    auto bad_axis = phi;
    bad_axis.a0[0] = AP;
    CHECK_FALSE(verify_frame(l, bad_axis).valid());
}

TEST_CASE("frame search") {
    auto mo2 = models::mo_n(2);
    auto skew = search_frame(mo2, FrameKind::Skew, 2);
    REQUIRE(skew);
    CHECK(verify_frame(mo2, *skew).valid());
    CHECK_FALSE(search_frame(models::boolean(2), FrameKind::LargePartial, 2));
    for (int k = 2; k <= 4; ++k) {
        auto l = models::mo_n(k);
        auto phi = search_frame(l, FrameKind::LargePartial, 2);
        REQUIRE(phi);
        CHECK(verify_frame(l, *phi).valid());
    }
    auto semi = search_frame(mo2, FrameKind::OrthoSemiframe, 2);
    REQUIRE(semi);
    CHECK(verify_frame(mo2, *semi).valid());
    CHECK_THROWS_WITH_AS(search_frame(models::boolean(7), FrameKind::Skew, 2), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("lemma1_step") {
    auto l = models::mo_n(2);
    auto top = lemma1_step(l, l.top(), l.bottom());
    CHECK(top.partner == l.bottom());
    auto s = lemma1_step(l, A, B);
    CHECK(s.partner == A);
    CHECK(s.axis == B);
    CHECK(perspective_via(l, AP, A, B));
    CHECK_THROWS_WITH_AS(lemma1_step(l, A, AP), doctest::Contains("PreconditionFailed"), Error);
}

TEST_CASE("semiframe construction on MO_2") {
    auto l = models::mo_n(2);
    auto out = build_orthogonal_semiframe(l, models::mo2_frame());
    CHECK(out.a == std::vector<Elem>{A, AP});
    CHECK(out.b == std::vector<Elem>{AP, A});
    CHECK(verify_frame(l, out).valid());
}

TEST_CASE("semiframe construction in Q^2 and Q^3") {
    Field q = Field::rationals();
    auto l2 = dot_space(2);
    auto phi = models::canonical_frame(2, q);
    auto out = build_orthogonal_semiframe(l2, phi);
    REQUIRE(out.a.size() == 2);
    CHECK(out.a[0] == span(q, {{1, 0}}));
    CHECK(out.a[1] == span(q, {{0, 1}}));

    auto l3 = dot_space(3);
    FrameWitness<Subspace> skew;
    skew.kind = FrameKind::Skew;
    skew.n = 2;
    skew.m = 3;
    skew.a = {span(q, {{1, 0, 0}}), span(q, {{0, 1, 0}}), span(q, {{0, 0, 1}})};
    skew.a0 = {span(q, {{1, -1, 0}}), span(q, {{1, 0, -1}})};
    skew.b = {skew.a[0], skew.a[0]};
    REQUIRE(verify_frame(l3, skew).valid());
    auto out3 = build_orthogonal_semiframe(l3, skew);
    CHECK(out3.a.size() == 3);
    CHECK(verify_frame(l3, out3).valid());
}

TEST_CASE("semiframe construction splits a non-orthogonal base summand") {
    Field q = Field::rationals();
    auto l4 = dot_space(4);
    FrameWitness<Subspace> skew;
    skew.kind = FrameKind::Skew;
    skew.n = skew.m = 2;
    skew.a = {span(q, {{1, 0, 0, 0}, {0, 1, 0, 0}}), span(q, {{0, 1, 1, 0}, {0, 0, 0, 1}})};
    skew.a0 = {span(q, {{1, -1, -1, 0}, {0, 1, 0, -1}})};
    skew.b = {skew.a[0]};
    REQUIRE(verify_frame(l4, skew).valid());
    // a_1 meets a_0^perp nontrivially
    CHECK_FALSE(l4.meet(skew.a[1], l4.perp(skew.a[0])).is_zero());
    auto out = build_orthogonal_semiframe(l4, skew);
    CHECK(verify_frame(l4, out).valid());
    CHECK(l4.equal(join_family(l4, out.a), l4.top()));
}

TEST_CASE("semiframe construction on random rational skew frames") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        std::size_t k = 1 + t % 2;
        int m = 2 + (t / 2) % 2;
        auto l = dot_space(k * m);
        auto phi = random_skew_frame(k, m, rng);
        REQUIRE(verify_frame(l, phi).valid());
        auto out = build_orthogonal_semiframe(l, phi);
        CHECK(verify_frame(l, out).valid());
    }
}

TEST_CASE("every searched skew 2-frame of a catalog ortholattice yields a semiframe") {
    Field g3 = Field::galois(3);
    std::vector<OrthoLattice> cat{models::mo_n(2), models::mo_n(3), models::mo_n(4),
                                  models::subspace_ortholattice(g3, 2, Matrix::identity(g3, 2)).lattice};
    for (const auto& l : cat) {
        auto phi = search_frame(l, FrameKind::Skew, 2);
        REQUIRE(phi);
        auto out = build_orthogonal_semiframe(l, *phi);
        CHECK(verify_frame(l, out).valid());
    }
}

TEST_CASE("semiframe construction refuses bad input") {
    auto l = models::mo_n(2);
    auto phi = models::mo2_frame();
    phi.a0[0] = AP;
    CHECK_THROWS_WITH_AS(build_orthogonal_semiframe(l, phi), doctest::Contains("PreconditionFailed"), Error);
}
