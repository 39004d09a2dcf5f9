#include "orthocoord/ipspace.hpp"

#include <cmath>

#include "orthocoord/error.hpp"

namespace orthocoord {

std::string to_string(Involution sigma) { return sigma == Involution::Identity ? "id" : "frobenius"; }

namespace {

Matrix unit_vector(const Field& f, std::size_t n, std::size_t i) {
    Matrix v(f, n, 1);
    v(i, 0) = f.one();
    return v;
}

std::string vector_text(const Matrix& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.rows(); ++i) {
        if (i) out += ",";
        out += v.field().format(v(i, 0));
    }
    return out + ")";
}

// Looks for v, w with <v,w> = 0 != <w,v> among basis vectors and pair sums.
void find_orthosymmetry_witness(const IPSpace& s) {
    std::vector<Matrix> probes;
    for (std::size_t i = 0; i < s.dim; ++i) probes.push_back(unit_vector(s.field, s.dim, i));
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = i + 1; j < s.dim; ++j) probes.push_back(probes[i] + probes[j]);
    for (const auto& v : probes) {
        // {w : <v, w> = 0}
        Matrix row = v.conj_transpose(s.sigma) * s.gram;
        Matrix kernel = row.nullspace();
        for (std::size_t c = 0; c < kernel.cols(); ++c) {
            Matrix w = kernel.column(c);
            if (!s.field.is_zero(form(s, w, v)))
                throw Error(ErrorKind::NotOrthosymmetric, "v=" + vector_text(v) + ", w=" + vector_text(w));
        }
    }
}

bool is_hermitian(const Matrix& j, Involution sigma) { return j.conj_transpose(sigma) == j; }

// Calls visit on every normalized nonzero vector of F^n (finite field);
// stops when visit returns true.
template <class Visit>
void for_each_projective_point(const Field& f, std::size_t n, Visit visit) {
    auto elems = f.elements();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= elems.size();
        if (total > (1u << 22)) throw Error(ErrorKind::TooLarge, "too many vectors for exhaustive anisotropy check");
    }
    for (std::size_t code = 1; code < total; ++code) {
        Matrix v(f, n, 1);
        std::size_t c = code, lead = n;
        for (std::size_t j = 0; j < n; ++j) {
            v(j, 0) = elems[c % elems.size()];
            c /= elems.size();
            if (lead == n && !f.is_zero(v(j, 0))) lead = j;
        }
        if (v(lead, 0) != 1) continue;
        if (visit(v)) return;
    }
}

bool definite(const Matrix& gram) {
    const std::size_t n = gram.rows();
    bool positive = true, negative = true;
    for (std::size_t k = 1; k <= n; ++k) {
        int sign = sgn(gram.block(0, 0, k, k).determinant());
        if (sign <= 0) positive = false;
        if (sign != (k % 2 == 1 ? -1 : 1)) negative = false;
    }
    return positive || negative;
}

std::optional<Matrix> small_isotropic_vector(const IPSpace& s) {
    const std::size_t n = s.dim;
    long bound = std::max(1L, static_cast<long>((std::pow(2.0e5, 1.0 / static_cast<double>(n)) - 1) / 2));
    std::vector<long> coords(n, -bound);
    for (;;) {
        Matrix v(s.field, n, 1);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            v(i, 0) = coords[i];
            nonzero = nonzero || coords[i] != 0;
        }
        if (nonzero && s.field.is_zero(form(s, v, v))) return v;
        std::size_t i = 0;
        while (i < n && coords[i] == bound) coords[i++] = -bound;
        if (i == n) break;
        ++coords[i];
    }
    return std::nullopt;
}

}  // namespace

Scalar form(const IPSpace& v, const Matrix& x, const Matrix& y) {
    return (x.conj_transpose(v.sigma) * v.gram * y)(0, 0);
}

IPSpace validate_space(const Field& field, std::size_t dim, const Matrix& gram, Involution sigma) {
    if (gram.rows() != dim || gram.cols() != dim)
        throw Error(ErrorKind::MalformedInput, "gram must be " + std::to_string(dim) + "x" + std::to_string(dim));
    if (!field.supports(sigma)) throw Error(ErrorKind::Unsupported, "involution " + to_string(sigma) + " on " + field.name());
    IPSpace s{field, dim, gram, sigma};
    if (!gram.inverse()) throw Error(ErrorKind::NotInvertibleGram, gram.to_string());
    if (!is_hermitian(gram, sigma)) {
        find_orthosymmetry_witness(s);
        throw Error(ErrorKind::NotOrthosymmetric, "gram is not hermitian: " + gram.to_string());
    }
    if (auto v = isotropic_vector(s)) throw Error(ErrorKind::Isotropic, "v=" + vector_text(*v));
    return s;
}

std::optional<Matrix> isotropic_vector(const IPSpace& s) {
    if (s.dim == 0) return std::nullopt;
    if (s.field.is_rational()) {
        if (definite(s.gram)) return std::nullopt;
        if (auto v = small_isotropic_vector(s)) return v;
        throw Error(ErrorKind::Unsupported, "indefinite rational form: anisotropy not decided");
    }
    std::optional<Matrix> found;
    for_each_projective_point(s.field, s.dim, [&](const Matrix& v) {
        if (s.field.is_zero(form(s, v, v))) found = v;
        return found.has_value();
    });
    return found;
}

Subspace orthogonal(const IPSpace& v, const Subspace& x) {
    if (x.is_zero()) return Subspace::whole(v.field, v.dim);
    Matrix conditions = x.basis_columns().conj_transpose(v.sigma) * v.gram;
    return Subspace::column_space(conditions.nullspace());
}

bool is_closed(const IPSpace& v, const Subspace& u) { return orthogonal(v, orthogonal(v, u)) == u; }

Matrix ortho_projection(const IPSpace& v, const Subspace& u) {
    if (!is_closed(v, u)) throw Error(ErrorKind::NotClosed, u.to_string());
    if (u.is_zero()) return Matrix(v.field, v.dim, v.dim);
    Matrix b = u.basis_columns();
    Matrix bh = b.conj_transpose(v.sigma);
    auto inner = (bh * v.gram * b).inverse();
    if (!inner) throw Error(ErrorKind::NotClosed, "restricted form degenerate on " + u.to_string());
    return b * *inner * bh * v.gram;
}

Matrix adjoint(const IPSpace& v, const Matrix& phi) {
    auto jinv = v.gram.inverse();
    if (!jinv) throw Error(ErrorKind::NotInvertibleGram, v.gram.to_string());
    Matrix star = *jinv * phi.conj_transpose(v.sigma) * v.gram;
    // <phi e_i, e_j> = <e_i, phi* e_j> for all basis pairs
    if (phi.conj_transpose(v.sigma) * v.gram != v.gram * star)
        throw Error(ErrorKind::InternalProofViolation, "adjoint identity fails for " + phi.to_string());
    return star;
}

bool is_self_adjoint(const IPSpace& v, const Matrix& phi) { return adjoint(v, phi) == phi; }

Fact9Verdict fact9_check(const IPSpace& v, const Matrix& phi) {
    Fact9Verdict out;
    out.is_star_projection = phi * phi == phi && is_self_adjoint(v, phi);
    out.equals_image_projection = phi == ortho_projection(v, Subspace::column_space(phi));
    return out;
}

}  // namespace orthocoord
