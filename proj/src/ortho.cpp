#include "orthocoord/ortho.hpp"

#include <string>

#include "orthocoord/error.hpp"

namespace orthocoord {

OrthoLattice OrthoLattice::validate(FiniteLattice base, std::vector<Elem> perp) {
    const int n = base.size();
    if (static_cast<int>(perp.size()) != n)
        throw Error(ErrorKind::MalformedInput, "perp map has " + std::to_string(perp.size()) + " entries, expected " +
                                                   std::to_string(n));
    for (Elem x : perp)
        if (x < 0 || x >= n) throw Error(ErrorKind::MalformedInput, "perp value " + std::to_string(x) + " out of range");
    for (int a = 0; a < n; ++a)
        if (perp[perp[a]] != a) throw Error(ErrorKind::NotInvolution, "a=" + std::to_string(a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (base.leq(a, b) && !base.leq(perp[b], perp[a]))
                throw Error(ErrorKind::NotOrderReversing, "a=" + std::to_string(a) + ", b=" + std::to_string(b));
    for (int a = 0; a < n; ++a)
        if (base.join(a, perp[a]) != base.top() || base.meet(a, perp[a]) != base.bottom())
            throw Error(ErrorKind::NotComplement, "a=" + std::to_string(a));
    return OrthoLattice(std::move(base), std::move(perp));
}

Section section(const OrthoLattice& l, Elem u) {
    std::vector<Elem> embed;
    std::vector<int> index(l.size(), -1);
    for (int x = 0; x < l.size(); ++x)
        if (l.leq(x, u)) {
            index[x] = static_cast<int>(embed.size());
            embed.push_back(x);
        }
    const int m = static_cast<int>(embed.size());
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) leq[i][j] = l.leq(embed[i], embed[j]);
    std::vector<Elem> perp(m);
    for (int i = 0; i < m; ++i) perp[i] = index[l.meet(u, l.perp(embed[i]))];
    auto lattice = OrthoLattice::validate(FiniteLattice::from_order(std::move(leq)), std::move(perp));
    return {std::move(lattice), std::move(embed)};
}

CongruencePerpVerdict check_congruence_perp(const OrthoLattice& l, const Congruence& theta) {
    for (int a = 0; a < l.size(); ++a) {
        Elem r = theta.label(a);
        if (r != a && !theta.related(l.perp(a), l.perp(r))) return {false, std::make_pair(a, r)};
    }
    return {};
}

}  // namespace orthocoord
