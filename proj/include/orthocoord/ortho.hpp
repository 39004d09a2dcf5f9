#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orthocoord/lattice.hpp"

namespace orthocoord {

/// Finite lattice with a checked orthocomplementation.
class OrthoLattice {
public:
    using Element = Elem;

    /// Checks involution, order reversal and a + a^perp = 1, a meet a^perp = 0
    /// exhaustively; throws NotInvolution / NotOrderReversing / NotComplement.
    static OrthoLattice validate(FiniteLattice base, std::vector<Elem> perp);

    const FiniteLattice& base() const { return base_; }
    const std::vector<Elem>& perp_table() const { return perp_; }
    int size() const { return base_.size(); }

    Elem perp(Elem a) const { return perp_[a]; }
    Elem meet(Elem a, Elem b) const { return base_.meet(a, b); }
    Elem join(Elem a, Elem b) const { return base_.join(a, b); }
    bool leq(Elem a, Elem b) const { return base_.leq(a, b); }
    bool equal(Elem a, Elem b) const { return a == b; }
    Elem bottom() const { return base_.bottom(); }
    Elem top() const { return base_.top(); }
    bool is_bottom(Elem a) const { return a == base_.bottom(); }
    /// a perp b iff b <= a^perp.
    bool orthogonal(Elem a, Elem b) const { return leq(b, perp(a)); }

private:
    OrthoLattice(FiniteLattice base, std::vector<Elem> perp) : base_(std::move(base)), perp_(std::move(perp)) {}
    FiniteLattice base_;
    std::vector<Elem> perp_;
};

/// The section [0, u] with relative complement a -> u meet a^perp.
struct Section {
    OrthoLattice lattice;
    std::vector<Elem> embed;  // section index -> index in the parent
};

Section section(const OrthoLattice& l, Elem u);

struct CongruencePerpVerdict {
    bool compatible = true;
    std::optional<std::pair<Elem, Elem>> witness;  // a theta b but not a^perp theta b^perp
};

CongruencePerpVerdict check_congruence_perp(const OrthoLattice& l, const Congruence& theta);

}  // namespace orthocoord
