#include "orthocoord/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "orthocoord/error.hpp"

namespace orthocoord {

namespace {

std::string pair_text(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::vector<bool>> leq) {
    const int n = static_cast<int>(leq.size());
    if (n == 0) throw Error(ErrorKind::NoBounds, "empty carrier");
    for (const auto& row : leq)
        if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::MalformedInput, "order relation is not square");
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[i][k])
                for (int j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq[i][j] && leq[j][i]) throw Error(ErrorKind::NotAPartialOrder, "cycle through " + pair_text(i, j));

    FiniteLattice l;
    l.n_ = n;
    int bot = -1, top = -1;
    for (int i = 0; i < n; ++i) {
        bool below_all = true, above_all = true;
        for (int j = 0; j < n; ++j) {
            below_all = below_all && leq[i][j];
            above_all = above_all && leq[j][i];
        }
        if (below_all) bot = i;
        if (above_all) top = i;
    }
    if (bot < 0 || top < 0) throw Error(ErrorKind::NoBounds, bot < 0 ? "no least element" : "no greatest element");
    l.bot_ = bot;
    l.top_ = top;
    l.meet_.assign(n, std::vector<Elem>(n, -1));
    l.join_.assign(n, std::vector<Elem>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            int glb = -1, lub = -1;
            for (int c = 0; c < n; ++c) {
                if (leq[c][a] && leq[c][b] && (glb < 0 || leq[glb][c])) glb = c;
                if (leq[a][c] && leq[b][c] && (lub < 0 || leq[c][lub])) lub = c;
            }
            // glb/lub are maximal/minimal candidates; confirm they bound every other candidate
            for (int c = 0; c < n; ++c) {
                if (leq[c][a] && leq[c][b] && !leq[c][glb])
                    throw Error(ErrorKind::NotALattice, "no infimum for " + pair_text(a, b));
                if (leq[a][c] && leq[b][c] && !leq[lub][c])
                    throw Error(ErrorKind::NotALattice, "no supremum for " + pair_text(a, b));
            }
            l.meet_[a][b] = l.meet_[b][a] = glb;
            l.join_[a][b] = l.join_[b][a] = lub;
        }
    l.leq_ = std::move(leq);
    return l;
}

FiniteLattice FiniteLattice::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n <= 0) throw Error(ErrorKind::NoBounds, "empty carrier");
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (auto [lo, hi] : covers) {
        if (lo < 0 || hi < 0 || lo >= n || hi >= n)
            throw Error(ErrorKind::MalformedInput, "cover " + pair_text(lo, hi) + " out of range");
        leq[lo][hi] = true;
    }
    return from_order(std::move(leq));
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (a == b || !leq_[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < n_ && cover; ++c)
                if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
    const int na = a.size(), nb = b.size(), n = na * nb;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) leq[x][y] = a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb);
    return FiniteLattice::from_order(std::move(leq));
}

ModularityVerdict is_modular(const FiniteLattice& l) {
    const int n = l.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!l.leq(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (l.join(a, l.meet(c, b)) != l.meet(l.join(a, c), b))
                    return {false, std::array<Elem, 3>{a, b, c}};
        }
    return {};
}

std::optional<std::array<Elem, 5>> find_pentagon(const FiniteLattice& l) {
    const int n = l.size();
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (a == c || !l.leq(a, c)) continue;
            for (int b = 0; b < n; ++b) {
                if (l.leq(b, c) || l.leq(c, b) || l.leq(a, b) || l.leq(b, a)) continue;
                Elem lo = l.meet(a, b), hi = l.join(a, b);
                if (l.meet(c, b) == lo && l.join(c, b) == hi) return std::array<Elem, 5>{lo, a, c, b, hi};
            }
        }
    return std::nullopt;
}

std::vector<Elem> complements(const FiniteLattice& l, Elem a) {
    std::vector<Elem> out;
    for (int b = 0; b < l.size(); ++b)
        if (l.join(a, b) == l.top() && l.meet(a, b) == l.bottom()) out.push_back(b);
    return out;
}

bool is_complemented(const FiniteLattice& l) {
    for (int a = 0; a < l.size(); ++a)
        if (complements(l, a).empty()) return false;
    return true;
}

namespace {

std::vector<int> longest_from_bottom(const FiniteLattice& l) {
    const int n = l.size();
    // Sort by down-set size: a linear extension of the order.
    std::vector<int> down(n, 0), order(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (l.leq(b, a)) ++down[a];
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return down[x] < down[y]; });
    std::vector<int> dist(n, -1);
    dist[l.bottom()] = 0;
    auto cov = l.covers();
    std::vector<std::vector<int>> up(n);
    for (auto [lo, hi] : cov) up[lo].push_back(hi);
    for (int a : order) {
        if (dist[a] < 0) continue;
        for (int b : up[a]) dist[b] = std::max(dist[b], dist[a] + 1);
    }
    return dist;
}

}  // namespace

int height(const FiniteLattice& l) { return longest_from_bottom(l)[l.top()]; }

int height_of(const FiniteLattice& l, Elem a) { return longest_from_bottom(l)[a]; }

Elem join_all(const FiniteLattice& l, const std::vector<Elem>& family) {
    Elem acc = l.bottom();
    for (Elem x : family) acc = l.join(acc, x);
    return acc;
}

bool independent(const FiniteLattice& l, const std::vector<Elem>& family) {
    Elem acc = l.bottom();
    for (Elem x : family) {
        if (l.meet(x, acc) != l.bottom()) return false;
        acc = l.join(acc, x);
    }
    return true;
}

bool is_axis(const FiniteLattice& l, Elem a, Elem b, Elem c) {
    Elem ab = l.join(a, b);
    return l.join(a, c) == ab && l.join(b, c) == ab && l.meet(a, c) == l.bottom() && l.meet(b, c) == l.bottom();
}

std::vector<Elem> perspectivity_axes(const FiniteLattice& l, Elem a, Elem b) {
    std::vector<Elem> out;
    for (int c = 0; c < l.size(); ++c)
        if (is_axis(l, a, b, c)) out.push_back(c);
    return out;
}

std::optional<SubPerspective> sub_perspective(const FiniteLattice& l, Elem a_sub, Elem b) {
    for (int candidate = 0; candidate < l.size(); ++candidate) {
        if (!l.leq(candidate, b)) continue;
        for (int c = 0; c < l.size(); ++c)
            if (is_axis(l, a_sub, candidate, c)) return SubPerspective{candidate, c};
    }
    return std::nullopt;
}

Congruence::Congruence(std::vector<Elem> labels) : label_(std::move(labels)) {
    // normalize: label = least member of the block
    std::vector<Elem> least(label_.size(), -1);
    for (std::size_t i = 0; i < label_.size(); ++i) {
        auto& slot = least[label_[i]];
        if (slot < 0) slot = static_cast<Elem>(i);
    }
    for (auto& x : label_) x = least[x];
}

Congruence Congruence::identity(int n) {
    std::vector<Elem> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return Congruence(std::move(labels));
}

Congruence Congruence::all(int n) { return Congruence(std::vector<Elem>(n, 0)); }

int Congruence::block_count() const {
    int count = 0;
    for (std::size_t i = 0; i < label_.size(); ++i)
        if (label_[i] == static_cast<Elem>(i)) ++count;
    return count;
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
    std::vector<std::vector<Elem>> out;
    std::vector<int> slot(label_.size(), -1);
    for (std::size_t i = 0; i < label_.size(); ++i) {
        if (slot[label_[i]] < 0) {
            slot[label_[i]] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[label_[i]]].push_back(static_cast<Elem>(i));
    }
    return out;
}

bool Congruence::refines(const Congruence& other) const {
    for (std::size_t i = 0; i < label_.size(); ++i)
        if (!other.related(static_cast<Elem>(i), label_[i])) return false;
    return true;
}

bool is_congruence(const FiniteLattice& l, const Congruence& theta) {
    const int n = l.size();
    if (theta.size() != n) return false;
    for (int x = 0; x < n; ++x) {
        Elem r = theta.label(x);
        if (r == x) continue;
        for (int z = 0; z < n; ++z) {
            if (!theta.related(l.join(x, z), l.join(r, z))) return false;
            if (!theta.related(l.meet(x, z), l.meet(r, z))) return false;
        }
    }
    return true;
}

Congruence generated_congruence(const FiniteLattice& l, const std::vector<std::pair<Elem, Elem>>& pairs) {
    const int n = l.size();
    UnionFind uf(n);
    for (auto [a, b] : pairs) uf.unite(a, b);
    // Compatibility with the block representative suffices by transitivity.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            int r = uf.find(x);
            if (r == x) continue;
            for (int z = 0; z < n; ++z) {
                changed |= uf.unite(l.join(x, z), l.join(r, z));
                changed |= uf.unite(l.meet(x, z), l.meet(r, z));
            }
        }
    }
    std::vector<Elem> labels(n);
    for (int x = 0; x < n; ++x) labels[x] = uf.find(x);
    return Congruence(std::move(labels));
}

Congruence principal_congruence(const FiniteLattice& l, Elem a, Elem b) { return generated_congruence(l, {{a, b}}); }

Congruence congruence_join(const FiniteLattice& l, const Congruence& x, const Congruence& y) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (int i = 0; i < l.size(); ++i) {
        pairs.emplace_back(i, x.label(i));
        pairs.emplace_back(i, y.label(i));
    }
    return generated_congruence(l, pairs);
}

std::size_t congruence_guard() {
    if (const char* env = std::getenv("ORTHO_COORD_GUARD")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 24;
}

CongruenceLattice congruences(const FiniteLattice& l) { return congruences(l, congruence_guard()); }

CongruenceLattice congruences(const FiniteLattice& l, std::size_t guard) {
    const int n = l.size();
    if (static_cast<std::size_t>(n) > guard)
        throw Error(ErrorKind::TooLarge, "congruence enumeration on " + std::to_string(n) + " elements exceeds guard " +
                                             std::to_string(guard));
    std::set<Congruence> found{Congruence::identity(n)};
    for (auto [a, b] : l.covers()) found.insert(principal_congruence(l, a, b));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Congruence> items(found.begin(), found.end());
        for (std::size_t i = 0; i < items.size(); ++i)
            for (std::size_t j = i + 1; j < items.size(); ++j)
                if (found.insert(congruence_join(l, items[i], items[j])).second) grew = true;
    }
    std::vector<Congruence> items(found.begin(), found.end());
    const int m = static_cast<int>(items.size());
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) leq[i][j] = items[i].refines(items[j]);
    return {std::move(items), FiniteLattice::from_order(std::move(leq))};
}

bool is_simple(const FiniteLattice& l) { return congruences(l).items.size() == 2; }

bool is_subdirectly_irreducible(const FiniteLattice& l) {
    auto con = congruences(l);
    if (con.items.size() < 2) return false;
    const auto& cl = con.lattice;
    int atoms = 0;
    for (auto [lo, hi] : cl.covers())
        if (lo == cl.bottom()) ++atoms;
    return atoms == 1;
}

}  // namespace orthocoord
