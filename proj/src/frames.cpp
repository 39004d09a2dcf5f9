#include "orthocoord/frames.hpp"

#include <cstdlib>
#include <functional>

namespace orthocoord {

const char* to_string(FrameKind kind) {
    switch (kind) {
        case FrameKind::LargePartial: return "large-partial";
        case FrameKind::Skew: return "skew";
        case FrameKind::OrthoSemiframe: return "ortho-semiframe";
    }
    return "unknown";
}

FrameKind parse_frame_kind(const std::string& text) {
    if (text == "large-partial" || text == "LargePartial" || text == "partial") return FrameKind::LargePartial;
    if (text == "skew" || text == "Skew") return FrameKind::Skew;
    if (text == "ortho-semiframe" || text == "OrthoSemiframe" || text == "semiframe") return FrameKind::OrthoSemiframe;
    throw Error(ErrorKind::MalformedInput, "unknown frame kind '" + text + "'");
}

std::size_t frame_search_guard() {
    if (const char* env = std::getenv("ORTHO_COORD_GUARD")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 64;
}

namespace {

std::optional<Elem> first_axis(const FiniteLattice& l, Elem a, Elem b) {
    for (int c = 0; c < l.size(); ++c)
        if (is_axis(l, a, b, c)) return c;
    return std::nullopt;
}

std::optional<FrameWitness<Elem>> search_coordinate_frame(const FiniteLattice& l, FrameKind kind, int n, int m) {
    if (m == 0) m = n;
    if (n < 1 || m < n) throw Error(ErrorKind::PreconditionFailed, "need 1 <= n <= m");
    FrameWitness<Elem> phi;
    phi.kind = kind;
    phi.n = n;
    phi.m = m;
    phi.a.assign(m, l.bottom());
    phi.a0.assign(m - 1, l.bottom());
    phi.b.assign(m - 1, l.bottom());

    std::function<bool(int, Elem)> extend = [&](int i, Elem acc) -> bool {
        if (i == m) return acc == l.top();
        for (int x = 0; x < l.size(); ++x) {
            if (i == 0 && x == l.bottom()) continue;
            bool must_be_independent = i < n || kind == FrameKind::Skew;
            if (must_be_independent && l.meet(x, acc) != l.bottom()) continue;
            phi.a[i] = x;
            if (i == 0) {
                if (extend(1, x)) return true;
                continue;
            }
            for (int bi = 0; bi < l.size(); ++bi) {
                if (i < n ? bi != phi.a[0] : !l.leq(bi, phi.a[0])) continue;
                auto axis = first_axis(l, x, bi);
                if (!axis) continue;
                phi.b[i - 1] = bi;
                phi.a0[i - 1] = *axis;
                if (extend(i + 1, l.join(acc, x))) return true;
            }
        }
        return false;
    };
    if (extend(0, l.bottom())) return phi;
    return std::nullopt;
}

}  // namespace

std::optional<FrameWitness<Elem>> search_frame(const FiniteLattice& l, FrameKind kind, int n, int m) {
    if (static_cast<std::size_t>(l.size()) > frame_search_guard())
        throw Error(ErrorKind::TooLarge, "frame search on " + std::to_string(l.size()) + " elements exceeds guard");
    if (kind == FrameKind::OrthoSemiframe)
        throw Error(ErrorKind::PreconditionFailed, "orthogonal semiframes need an ortholattice");
    return search_coordinate_frame(l, kind, n, m);
}

std::optional<FrameWitness<Elem>> search_frame(const OrthoLattice& l, FrameKind kind, int n, int m) {
    if (static_cast<std::size_t>(l.size()) > frame_search_guard())
        throw Error(ErrorKind::TooLarge, "frame search on " + std::to_string(l.size()) + " elements exceeds guard");
    if (kind != FrameKind::OrthoSemiframe) return search_coordinate_frame(l.base(), kind, n, m);

    const int k = n;
    if (k < 1) throw Error(ErrorKind::PreconditionFailed, "need k >= 1 summands");
    const auto& base = l.base();
    FrameWitness<Elem> phi;
    phi.kind = kind;
    phi.n = phi.m = k;
    phi.a.assign(k, base.bottom());
    phi.b.assign(k, base.bottom());
    phi.axes.assign(k, base.bottom());
    std::function<bool(int, Elem)> extend = [&](int i, Elem acc) -> bool {
        if (i == k) return acc == base.top();
        for (int x = 0; x < base.size(); ++x) {
            if (x == base.bottom() || base.meet(x, acc) != base.bottom()) continue;
            for (int partner = 0; partner < base.size(); ++partner) {
                if (!l.orthogonal(x, partner)) continue;
                auto axis = first_axis(base, x, partner);
                if (!axis) continue;
                phi.a[i] = x;
                phi.b[i] = partner;
                phi.axes[i] = *axis;
                if (extend(i + 1, base.join(acc, x))) return true;
                break;  // another partner for the same x cannot change feasibility of the rest
            }
        }
        return false;
    };
    if (extend(0, base.bottom())) return phi;
    return std::nullopt;
}

}  // namespace orthocoord
