#pragma once

#include <optional>
#include <string>

#include "orthocoord/matrix.hpp"
#include "orthocoord/subspace.hpp"

namespace orthocoord {

/// Finite-dimensional space F^n with form <x, y> = x^{sigma T} J y.
struct IPSpace {
    Field field;
    std::size_t dim = 0;
    Matrix gram;
    Involution sigma = Involution::Identity;
};

/// Checks that J is invertible, hermitian w.r.t. sigma and anisotropic.
/// Over Q anisotropy is certified for definite forms by leading minors;
/// indefinite forms get a bounded search for an isotropic vector and are
/// otherwise refused as Unsupported.
IPSpace validate_space(const Field& field, std::size_t dim, const Matrix& gram,
                       Involution sigma = Involution::Identity);

/// A nonzero v with <v, v> = 0, or nullopt when the form is anisotropic.
/// Exhaustive over finite fields; over Q definite forms return nullopt and
/// indefinite forms are searched on small integer vectors, else Unsupported.
std::optional<Matrix> isotropic_vector(const IPSpace& v);

Scalar form(const IPSpace& v, const Matrix& x, const Matrix& y);

Subspace orthogonal(const IPSpace& v, const Subspace& x);
bool is_closed(const IPSpace& v, const Subspace& u);
/// pi_U = B (B^{sigma T} J B)^{-1} B^{sigma T} J for a basis B of U.
Matrix ortho_projection(const IPSpace& v, const Subspace& u);
/// phi* = J^{-1} phi^{sigma T} J, checked against the defining identity.
Matrix adjoint(const IPSpace& v, const Matrix& phi);
bool is_self_adjoint(const IPSpace& v, const Matrix& phi);

struct Fact9Verdict {
    bool is_star_projection = false;  // phi^2 = phi = phi*
    bool equals_image_projection = false;  // phi = pi_{im phi}
    bool coincide() const { return is_star_projection == equals_image_projection; }
};

Fact9Verdict fact9_check(const IPSpace& v, const Matrix& phi);

/// The ortholattice of all subspaces of an inner product space, kept
/// symbolic so it also works over Q.
class SubspaceOrtho {
public:
    using Element = Subspace;

    explicit SubspaceOrtho(IPSpace space) : space_(std::move(space)) {}

    const IPSpace& space() const { return space_; }
    Subspace meet(const Subspace& a, const Subspace& b) const { return a.meet(b); }
    Subspace join(const Subspace& a, const Subspace& b) const { return a.join(b); }
    bool leq(const Subspace& a, const Subspace& b) const { return a.leq(b); }
    bool equal(const Subspace& a, const Subspace& b) const { return a == b; }
    bool is_bottom(const Subspace& a) const { return a.is_zero(); }
    Subspace bottom() const { return Subspace(space_.field, space_.dim); }
    Subspace top() const { return Subspace::whole(space_.field, space_.dim); }
    Subspace perp(const Subspace& a) const { return orthogonal(space_, a); }

private:
    IPSpace space_;
};

/// Subspace lattices are modular.
inline bool is_modular_lattice(const SubspaceOrtho&) { return true; }

std::string to_string(Involution sigma);

}  // namespace orthocoord
