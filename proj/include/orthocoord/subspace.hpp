#pragma once

#include <string>
#include <vector>

#include "orthocoord/matrix.hpp"

namespace orthocoord {

/// Linear subspace of F^n stored as the nonzero rows of its reduced row
/// echelon basis, so equality is matrix equality.
class Subspace {
public:
    Subspace(Field field, std::size_t ambient_dim);  // zero subspace
    static Subspace whole(Field field, std::size_t n);
    /// Span of the given row vectors.
    static Subspace from_rows(const Matrix& rows);
    /// Span of the columns, i.e. the image of a matrix.
    static Subspace column_space(const Matrix& m);
    static Subspace span_of(const Field& field, const std::vector<std::vector<Scalar>>& vectors);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_whole() const { return dim() == ambient_dim(); }

    /// RREF basis, one vector per row.
    const Matrix& basis() const { return basis_; }
    /// Same basis as an ambient_dim x dim matrix.
    Matrix basis_columns() const { return basis_.transpose(); }

    bool contains(const Matrix& column) const;
    bool leq(const Subspace& other) const;
    Subspace join(const Subspace& other) const;
    Subspace meet(const Subspace& other) const;
    /// {y : sum_i x_i y_i = 0 for all x} with the plain bilinear pairing.
    Subspace annihilator() const;
    /// Image under a linear map.
    Subspace image_under(const Matrix& map) const;

    bool operator==(const Subspace& other) const { return basis_ == other.basis_; }
    bool operator!=(const Subspace& other) const { return !(*this == other); }
    /// Total order on canonical forms (for use as a map key).
    bool operator<(const Subspace& other) const;

    std::string to_string() const;

private:
    explicit Subspace(Matrix rref_rows) : basis_(std::move(rref_rows)) {}
    Matrix basis_;
};

inline std::string element_text(const Subspace& s) { return s.to_string(); }

/// Lattice operations on the subspaces of F^n (no orthocomplement).
class SubspaceLatticeView {
public:
    using Element = Subspace;

    SubspaceLatticeView(Field field, std::size_t n) : field_(std::move(field)), n_(n) {}

    Subspace meet(const Subspace& a, const Subspace& b) const { return a.meet(b); }
    Subspace join(const Subspace& a, const Subspace& b) const { return a.join(b); }
    bool leq(const Subspace& a, const Subspace& b) const { return a.leq(b); }
    bool equal(const Subspace& a, const Subspace& b) const { return a == b; }
    bool is_bottom(const Subspace& a) const { return a.is_zero(); }
    Subspace bottom() const { return Subspace(field_, n_); }
    Subspace top() const { return Subspace::whole(field_, n_); }

private:
    Field field_;
    std::size_t n_;
};

/// All subspaces of F^n for a finite field, ordered by dimension then by
/// canonical form. Throws TooLarge when the count would exceed the guard.
std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t guard = 4096);

/// Matrix whose column space equals U (basis columns padded with zeros to n x n).
Matrix generator_matrix(const Subspace& u);

}  // namespace orthocoord
