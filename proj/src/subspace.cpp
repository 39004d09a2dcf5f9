#include "orthocoord/subspace.hpp"

#include <algorithm>
#include <set>

#include "orthocoord/error.hpp"

namespace orthocoord {

namespace {

Matrix nonzero_rref_rows(const Matrix& rows) {
    std::vector<std::size_t> pivots;
    Matrix r = rows.rref(&pivots);
    return r.block(0, 0, pivots.size(), rows.cols());
}

}  // namespace

Subspace::Subspace(Field field, std::size_t ambient_dim) : basis_(std::move(field), 0, ambient_dim) {}

Subspace Subspace::whole(Field field, std::size_t n) { return Subspace(Matrix::identity(std::move(field), n)); }

Subspace Subspace::from_rows(const Matrix& rows) { return Subspace(nonzero_rref_rows(rows)); }

Subspace Subspace::column_space(const Matrix& m) { return from_rows(m.transpose()); }

Subspace Subspace::span_of(const Field& field, const std::vector<std::vector<Scalar>>& vectors) {
    if (vectors.empty()) throw Error(ErrorKind::MalformedInput, "span_of needs at least one vector to fix the dimension");
    return from_rows(Matrix::from_rows(field, vectors));
}

bool Subspace::contains(const Matrix& column) const {
    if (column.rows() != ambient_dim() || column.cols() != 1)
        throw Error(ErrorKind::MalformedInput, "vector dimension mismatch");
    return basis_.vconcat(column.transpose()).rank() == dim();
}

bool Subspace::leq(const Subspace& other) const {
    if (dim() > other.dim()) return false;
    return other.basis_.vconcat(basis_).rank() == other.dim();
}

Subspace Subspace::join(const Subspace& other) const { return from_rows(basis_.vconcat(other.basis_)); }

Subspace Subspace::annihilator() const {
    if (dim() == 0) return whole(field(), ambient_dim());
    return column_space(basis_.nullspace());
}

Subspace Subspace::meet(const Subspace& other) const {
    if (leq(other)) return *this;
    if (other.leq(*this)) return other;
    return annihilator().join(other.annihilator()).annihilator();
}

Subspace Subspace::image_under(const Matrix& map) const {
    if (dim() == 0) return Subspace(field(), map.rows());
    return column_space(map * basis_columns());
}

bool Subspace::operator<(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim()) return ambient_dim() < other.ambient_dim();
    if (dim() != other.dim()) return dim() < other.dim();
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_dim(); ++j) {
            int c = cmp(basis_(i, j), other.basis_(i, j));
            if (c != 0) return c < 0;
        }
    return false;
}

std::string Subspace::to_string() const {
    std::string out = "span{";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) out += ", ";
        out += "(";
        for (std::size_t j = 0; j < ambient_dim(); ++j) {
            if (j) out += ",";
            out += field().format(basis_(i, j));
        }
        out += ")";
    }
    return out + "}";
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t guard) {
    if (field.is_rational()) throw Error(ErrorKind::InfiniteLattice, "Q^" + std::to_string(n) + " has infinitely many subspaces");
    // Breadth-first closure: every subspace is a span of some vectors.
    std::vector<Matrix> vectors;
    auto elems = field.elements();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= elems.size();
        if (total > 1u << 20) throw Error(ErrorKind::TooLarge, "vector space too large to enumerate");
    }
    for (std::size_t code = 1; code < total; ++code) {
        Matrix v(field, 1, n);
        std::size_t c = code;
        for (std::size_t j = 0; j < n; ++j) {
            v(0, j) = elems[c % elems.size()];
            c /= elems.size();
        }
        // keep only normalized representatives (leading entry 1)
        std::size_t lead = 0;
        while (field.is_zero(v(0, lead))) ++lead;
        if (v(0, lead) == 1) vectors.push_back(std::move(v));
    }
    std::set<Subspace> seen;
    std::vector<Subspace> frontier{Subspace(field, n)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const auto& s : frontier) {
            if (s.is_whole()) continue;
            for (const auto& v : vectors) {
                if (s.contains(v.transpose())) continue;
                Subspace t = Subspace::from_rows(s.basis().vconcat(v));
                if (seen.insert(t).second) {
                    if (seen.size() > guard) throw Error(ErrorKind::TooLarge, "subspace lattice exceeds guard");
                    next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Matrix generator_matrix(const Subspace& u) {
    Matrix g(u.field(), u.ambient_dim(), u.ambient_dim());
    for (std::size_t k = 0; k < u.dim(); ++k)
        for (std::size_t i = 0; i < u.ambient_dim(); ++i) g(i, k) = u.basis()(k, i);
    return g;
}

}  // namespace orthocoord
