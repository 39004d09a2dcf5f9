#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "orthocoord/error.hpp"
#include "orthocoord/lattice.hpp"
#include "orthocoord/ortho.hpp"

namespace orthocoord {

inline std::string element_text(Elem x) { return std::to_string(x); }

template <class L>
concept LatticeOps = requires(const L& l, const typename L::Element& x) {
    { l.meet(x, x) } -> std::convertible_to<typename L::Element>;
    { l.join(x, x) } -> std::convertible_to<typename L::Element>;
    { l.leq(x, x) } -> std::convertible_to<bool>;
    { l.equal(x, x) } -> std::convertible_to<bool>;
    { l.is_bottom(x) } -> std::convertible_to<bool>;
    { l.bottom() } -> std::convertible_to<typename L::Element>;
    { l.top() } -> std::convertible_to<typename L::Element>;
};

template <class L>
concept OrthoOps = LatticeOps<L> && requires(const L& l, const typename L::Element& x) {
    { l.perp(x) } -> std::convertible_to<typename L::Element>;
};

inline bool is_modular_lattice(const OrthoLattice& l) { return is_modular(l.base()).modular; }
inline bool is_modular_lattice(const FiniteLattice& l) { return is_modular(l).modular; }

enum class FrameKind { LargePartial, Skew, OrthoSemiframe };

const char* to_string(FrameKind kind);
FrameKind parse_frame_kind(const std::string& text);

/// Certified frame data. For LargePartial/Skew: a has m entries, a0[i-1] is
/// the axis a_{0i} and b[i-1] the partner b_i <= a_0 for 0 < i < m. For an
/// orthogonal semiframe a, b and axes all have k entries and a_i ~_{axes[i]} b_i.
template <class E>
struct FrameWitness {
    FrameKind kind = FrameKind::Skew;
    int n = 0;
    int m = 0;
    std::vector<E> a;
    std::vector<E> a0;
    std::vector<E> b;
    std::vector<E> axes;
};

struct FrameReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

template <LatticeOps L>
typename L::Element join_family(const L& l, const std::vector<typename L::Element>& family) {
    auto acc = l.bottom();
    for (const auto& x : family) acc = l.join(acc, x);
    return acc;
}

/// Incremental independence test (valid in modular lattices).
template <LatticeOps L>
bool independent_family(const L& l, const std::vector<typename L::Element>& family) {
    auto acc = l.bottom();
    for (const auto& x : family) {
        if (!l.is_bottom(l.meet(x, acc))) return false;
        acc = l.join(acc, x);
    }
    return true;
}

/// c is a common complement of a and b inside [0, a + b].
template <LatticeOps L>
bool perspective_via(const L& l, const typename L::Element& a, const typename L::Element& b,
                     const typename L::Element& c) {
    auto ab = l.join(a, b);
    return l.equal(l.join(a, c), ab) && l.equal(l.join(b, c), ab) && l.is_bottom(l.meet(a, c)) &&
           l.is_bottom(l.meet(b, c));
}

template <OrthoOps L>
bool orthogonal_pair(const L& l, const typename L::Element& a, const typename L::Element& b) {
    return l.leq(b, l.perp(a));
}

/// The section [0, top] of an ortholattice, with relative complement.
template <OrthoOps L>
class SectionView {
public:
    using Element = typename L::Element;

    SectionView(const L& parent, Element top) : parent_(parent), top_(std::move(top)) {}

    Element meet(const Element& a, const Element& b) const { return parent_.meet(a, b); }
    Element join(const Element& a, const Element& b) const { return parent_.join(a, b); }
    bool leq(const Element& a, const Element& b) const { return parent_.leq(a, b); }
    bool equal(const Element& a, const Element& b) const { return parent_.equal(a, b); }
    bool is_bottom(const Element& a) const { return parent_.is_bottom(a); }
    Element bottom() const { return parent_.bottom(); }
    Element top() const { return top_; }
    Element perp(const Element& a) const { return parent_.meet(top_, parent_.perp(a)); }
    const L& parent() const { return parent_; }

private:
    const L& parent_;
    Element top_;
};

template <OrthoOps L>
bool is_modular_lattice(const SectionView<L>& s) {
    return is_modular_lattice(s.parent());
}

template <LatticeOps L>
FrameReport verify_frame(const L& l, const FrameWitness<typename L::Element>& phi) {
    FrameReport report;
    auto fail = [&](std::string clause) { report.violations.push_back(std::move(clause)); };
    const auto& a = phi.a;
    if (phi.kind == FrameKind::OrthoSemiframe) {
        const std::size_t k = a.size();
        if (phi.b.size() != k || phi.axes.size() != k) {
            fail("shape: a, b and axes must have the same length");
            return report;
        }
        if (!l.equal(join_family(l, a), l.top())) fail("1 = sum a_i");
        if (!independent_family(l, a)) fail("a_i independent");
        for (std::size_t i = 0; i < k; ++i) {
            if constexpr (OrthoOps<L>) {
                if (!orthogonal_pair(l, a[i], phi.b[i])) fail("b_" + std::to_string(i) + " perp a_" + std::to_string(i));
            } else {
                fail("orthogonal semiframe needs an ortholattice");
                return report;
            }
            if (!perspective_via(l, a[i], phi.b[i], phi.axes[i]))
                fail("a_" + std::to_string(i) + " ~ b_" + std::to_string(i) + " via " + element_text(phi.axes[i]));
        }
        return report;
    }
    const int n = phi.n, m = phi.m;
    if (n < 1 || m < n) {
        fail("shape: need 1 <= n <= m");
        return report;
    }
    if (static_cast<int>(a.size()) != m || static_cast<int>(phi.a0.size()) != m - 1 ||
        static_cast<int>(phi.b.size()) != m - 1) {
        fail("shape: a has m entries, a0 and b have m-1");
        return report;
    }
    if (!l.equal(join_family(l, a), l.top())) fail("1 = sum a_i");
    if (l.is_bottom(a[0])) fail("a_0 != 0");
    std::vector<typename L::Element> head(a.begin(), a.begin() + n);
    if (!independent_family(l, head)) fail("a_0..a_{n-1} independent");
    if (phi.kind == FrameKind::Skew && !independent_family(l, a)) fail("1 = (+) a_i (skew)");
    for (int i = 1; i < m; ++i) {
        const auto& bi = phi.b[i - 1];
        const std::string idx = std::to_string(i);
        if (!l.leq(bi, a[0])) fail("b_" + idx + " <= a_0");
        if (i < n && !l.equal(bi, a[0])) fail("b_" + idx + " = a_0");
        if (!perspective_via(l, a[i], bi, phi.a0[i - 1])) fail("a_" + idx + " ~ b_" + idx + " via a_0" + idx);
    }
    return report;
}

template <class E>
struct PartnerStep {
    E partner;
    E axis;
};

/// From v (+) b = 1 and v^perp meet b = 0, returns v' = v meet (v^perp + b)
/// with v^perp ~_b v' and v' <= v.
template <OrthoOps L>
PartnerStep<typename L::Element> lemma1_step(const L& l, const typename L::Element& v,
                                             const typename L::Element& b) {
    auto vp = l.perp(v);
    if (!l.equal(l.join(v, b), l.top()) || !l.is_bottom(l.meet(v, b)))
        throw Error(ErrorKind::PreconditionFailed, "v (+) b != 1 for v=" + element_text(v) + ", b=" + element_text(b));
    if (!l.is_bottom(l.meet(vp, b)))
        throw Error(ErrorKind::PreconditionFailed, "v^perp meet b != 0 for v=" + element_text(v) + ", b=" + element_text(b));
    auto v_prime = l.meet(v, l.join(vp, b));
    if (!l.leq(v_prime, v) || !orthogonal_pair(l, vp, v_prime) || !perspective_via(l, vp, v_prime, b))
        throw Error(ErrorKind::InternalProofViolation, "v^perp ~_b v meet (v^perp + b) fails for v=" + element_text(v));
    return {v_prime, b};
}

namespace detail {

template <class E>
struct SemiframePart {
    E part;
    E partner;
    E axis;
};

template <OrthoOps L>
void require_identity(bool holds, const char* identity, const typename L::Element& witness) {
    if (!holds) throw Error(ErrorKind::InternalProofViolation, std::string(identity) + " fails at " + element_text(witness));
}

/// Splits u into pairwise orthogonal parts, each with an orthogonal
/// perspective partner, inside the section [0, top], given u (+) a = top
/// and u ~_c a.
template <OrthoOps L>
void partner_decompose(const L& l, const typename L::Element& top, typename L::Element u, typename L::Element a,
                       typename L::Element c, std::vector<SemiframePart<typename L::Element>>& out) {
    using E = typename L::Element;
    if (l.is_bottom(u)) return;
    SectionView<L> s(l, top);
    E d = l.meet(a, s.perp(u));
    if (l.is_bottom(d)) {
        auto step = lemma1_step(s, u, a);
        require_identity<L>(l.equal(step.partner, u), "u^perp ~ u", u);
        out.push_back({u, s.perp(u), a});
        return;
    }
    E d_img = l.meet(l.join(d, c), u);
    E axis = l.meet(c, l.join(d, d_img));
    require_identity<L>(perspective_via(l, d_img, d, axis), "d' ~ d", d);
    require_identity<L>(orthogonal_pair(l, d_img, d), "d' perp d", d);
    out.push_back({d_img, d, axis});
    E w = l.join(d, d_img);
    E rest_top = s.perp(w);
    E r = l.meet(u, s.perp(d_img));
    E a_r = l.meet(l.join(r, c), a);
    E c_r = l.meet(c, l.join(r, a_r));
    E a_s = l.meet(l.join(a_r, w), rest_top);
    E c_s = l.meet(l.join(c_r, w), rest_top);
    require_identity<L>(l.leq(r, rest_top), "r <= (d + d')^perp", r);
    require_identity<L>(l.equal(l.join(r, a_s), rest_top) && l.is_bottom(l.meet(r, a_s)), "r (+) a_S = S", r);
    require_identity<L>(perspective_via(l, r, a_s, c_s), "r ~ a_S", r);
    // recurse into the strictly smaller section [0, S]
    partner_decompose(l, rest_top, r, a_s, c_s, out);
}

/// Step (2) of the construction inside the section [0, top]: given
/// u (+) a = top and a ~_c a' with a' <= u, produces d = a meet u^perp with
/// partner d' <= a' and f = (u + d)^perp with partner f' <= u + d.
template <OrthoOps L>
void orthogonal_extension(const L& l, const typename L::Element& top, const typename L::Element& u,
                          const typename L::Element& a, const typename L::Element& a_prime,
                          const typename L::Element& c, std::vector<SemiframePart<typename L::Element>>& out) {
    using E = typename L::Element;
    SectionView<L> s(l, top);
    E d = l.meet(a, s.perp(u));
    E d_prime = l.meet(l.join(d, c), a_prime);
    E d_axis = l.meet(c, l.join(d, d_prime));
    require_identity<L>(l.leq(d_prime, u) && orthogonal_pair(l, d, d_prime), "d perp d' <= u", d);
    require_identity<L>(perspective_via(l, d, d_prime, d_axis), "d ~ d'", d);
    E v = l.join(u, d);
    require_identity<L>(orthogonal_pair(l, u, d), "v = u (+)perp d", v);
    require_identity<L>(l.is_bottom(l.meet(a, s.perp(v))), "a meet v^perp = 0", a);
    E b = l.meet(a, s.perp(d));
    require_identity<L>(l.equal(l.join(b, d), a) && l.is_bottom(l.meet(b, d)), "b (+) d = a", b);
    require_identity<L>(l.is_bottom(l.meet(b, s.perp(v))), "b meet v^perp = 0", b);
    auto step = lemma1_step(s, v, b);
    E f = s.perp(v);
    require_identity<L>(l.equal(l.join(v, f), top), "1 = u (+)perp d (+)perp f", f);
    out.push_back({d, d_prime, d_axis});
    out.push_back({f, step.partner, step.axis});
}

}  // namespace detail

/// Builds an orthogonal semiframe from a skew 2-m-frame in a modular
/// ortholattice. Summands are processed in frame order; the base summand a_0
/// is refined into parts with orthogonal partners by transporting along the
/// frame axis. Zero parts are dropped. The result is pairwise orthogonal.
template <OrthoOps L>
FrameWitness<typename L::Element> build_orthogonal_semiframe(const L& l, const FrameWitness<typename L::Element>& phi) {
    using E = typename L::Element;
    if (phi.kind != FrameKind::Skew || phi.n < 2)
        throw Error(ErrorKind::PreconditionFailed, "expected a skew 2-m-frame");
    auto report = verify_frame(l, phi);
    if (!report.valid()) throw Error(ErrorKind::PreconditionFailed, "frame invalid: " + report.violations.front());
    if (!is_modular_lattice(l)) throw Error(ErrorKind::PreconditionFailed, "lattice is not modular");

    std::vector<detail::SemiframePart<E>> parts;
    E top = l.join(phi.a[0], phi.a[1]);
    detail::partner_decompose(l, top, phi.a[0], phi.a[1], phi.a0[0], parts);
    detail::orthogonal_extension(l, top, phi.a[0], phi.a[1], phi.a[0], phi.a0[0], parts);
    E u = top;
    for (int i = 2; i < phi.m; ++i) {
        E next = l.join(u, phi.a[i]);
        detail::orthogonal_extension(l, next, u, phi.a[i], phi.b[i - 1], phi.a0[i - 1], parts);
        u = next;
    }

    FrameWitness<E> out;
    out.kind = FrameKind::OrthoSemiframe;
    for (auto& p : parts) {
        if (l.is_bottom(p.part)) continue;
        out.a.push_back(p.part);
        out.b.push_back(p.partner);
        out.axes.push_back(p.axis);
    }
    out.n = out.m = static_cast<int>(out.a.size());
    auto check = verify_frame(l, out);
    if (!check.valid())
        throw Error(ErrorKind::InternalProofViolation, "semiframe output violates " + check.violations.front());
    for (std::size_t i = 0; i < out.a.size(); ++i)
        for (std::size_t j = i + 1; j < out.a.size(); ++j)
            if (!orthogonal_pair(l, out.a[i], out.a[j]))
                throw Error(ErrorKind::InternalProofViolation, "semiframe parts " + std::to_string(i) + "," +
                                                                   std::to_string(j) + " not orthogonal");
    return out;
}

/// Exhaustive backtracking frame search in index order (deterministic).
/// For OrthoSemiframe, n is the number of summands k. m defaults to n.
std::optional<FrameWitness<Elem>> search_frame(const OrthoLattice& l, FrameKind kind, int n, int m = 0);
std::optional<FrameWitness<Elem>> search_frame(const FiniteLattice& l, FrameKind kind, int n, int m = 0);

/// Guard on |L| for frame search; ORTHO_COORD_GUARD overrides.
std::size_t frame_search_guard();

}  // namespace orthocoord
