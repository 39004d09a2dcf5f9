#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orthocoord {

using Elem = int;

/// Finite bounded lattice given by explicit tables. Immutable once built;
/// every constructor cross-checks meet and join against the order.
class FiniteLattice {
public:
    using Element = Elem;

    /// Empty placeholder; only the factories produce usable lattices.
    FiniteLattice() = default;

    /// From a full order relation (reflexive-transitive closure is taken).
    static FiniteLattice from_order(std::vector<std::vector<bool>> leq);
    /// From a cover (Hasse) relation given as (lower, upper) pairs.
    static FiniteLattice from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    int size() const { return n_; }
    Elem bottom() const { return bot_; }
    Elem top() const { return top_; }
    bool leq(Elem a, Elem b) const { return leq_[a][b]; }
    Elem meet(Elem a, Elem b) const { return meet_[a][b]; }
    Elem join(Elem a, Elem b) const { return join_[a][b]; }
    bool is_bottom(Elem a) const { return a == bot_; }
    bool equal(Elem a, Elem b) const { return a == b; }

    const std::vector<std::vector<bool>>& order() const { return leq_; }
    /// Cover pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<Elem, Elem>> covers() const;

private:
    int n_ = 0;
    Elem bot_ = 0;
    Elem top_ = 0;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<Elem>> meet_;
    std::vector<std::vector<Elem>> join_;
};

/// Product lattice; element (i, j) has index i * |b| + j.
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

struct ModularityVerdict {
    bool modular = true;
    /// (a, b, c) with a <= b and a + (c meet b) != (a + c) meet b.
    std::optional<std::array<Elem, 3>> witness;
};

ModularityVerdict is_modular(const FiniteLattice& l);

/// Independent route: search for a pentagon N5 sublattice {0', a, b, c, 1'}
/// with a < c, b incomparable to both; returns it as (bottom, a, c, b, top).
std::optional<std::array<Elem, 5>> find_pentagon(const FiniteLattice& l);

std::vector<Elem> complements(const FiniteLattice& l, Elem a);
bool is_complemented(const FiniteLattice& l);

/// Longest chain length from bottom to top in the cover graph.
int height(const FiniteLattice& l);
int height_of(const FiniteLattice& l, Elem a);

/// True when a_0, ..., a_{k-1} are independent, tested incrementally:
/// a_i meet (a_0 + ... + a_{i-1}) = 0 for each i.
bool independent(const FiniteLattice& l, const std::vector<Elem>& family);
Elem join_all(const FiniteLattice& l, const std::vector<Elem>& family);

/// Every c with a + c = b + c = a + b and a meet c = b meet c = 0.
std::vector<Elem> perspectivity_axes(const FiniteLattice& l, Elem a, Elem b);
bool is_axis(const FiniteLattice& l, Elem a, Elem b, Elem c);

struct SubPerspective {
    Elem element;
    Elem axis;
};

/// For a' <= a with a ~ b, the least-index b' <= b with a' ~ b' (and the
/// least-index axis). nullopt when none exists.
std::optional<SubPerspective> sub_perspective(const FiniteLattice& l, Elem a_sub, Elem b);

/// Lattice congruence as a partition; label[x] is the least element of x's block.
class Congruence {
public:
    explicit Congruence(std::vector<Elem> labels);
    static Congruence identity(int n);
    static Congruence all(int n);

    int size() const { return static_cast<int>(label_.size()); }
    bool related(Elem a, Elem b) const { return label_[a] == label_[b]; }
    Elem label(Elem a) const { return label_[a]; }
    int block_count() const;
    std::vector<std::vector<Elem>> blocks() const;
    /// Refinement: every pair related here is related in other.
    bool refines(const Congruence& other) const;
    bool operator==(const Congruence& other) const { return label_ == other.label_; }
    bool operator<(const Congruence& other) const { return label_ < other.label_; }

private:
    std::vector<Elem> label_;
};

/// Block-wise substitution test against meet and join.
bool is_congruence(const FiniteLattice& l, const Congruence& theta);
/// Least congruence identifying every given pair.
Congruence generated_congruence(const FiniteLattice& l, const std::vector<std::pair<Elem, Elem>>& pairs);
Congruence principal_congruence(const FiniteLattice& l, Elem a, Elem b);
Congruence congruence_join(const FiniteLattice& l, const Congruence& x, const Congruence& y);

struct CongruenceLattice {
    std::vector<Congruence> items;  // items[i] is element i of lattice
    FiniteLattice lattice;          // ordered by refinement
};

/// Default guard on |L| for congruence enumeration; ORTHO_COORD_GUARD overrides.
std::size_t congruence_guard();

CongruenceLattice congruences(const FiniteLattice& l);
CongruenceLattice congruences(const FiniteLattice& l, std::size_t guard);
bool is_simple(const FiniteLattice& l);
bool is_subdirectly_irreducible(const FiniteLattice& l);

}  // namespace orthocoord
