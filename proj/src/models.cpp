#include "orthocoord/models.hpp"

#include <algorithm>

#include "orthocoord/error.hpp"

namespace orthocoord::models {

OrthoLattice mo_n(int k) {
    if (k < 1) throw Error(ErrorKind::PreconditionFailed, "MO_k needs k >= 1");
    const int top = 2 * k + 1;
    std::vector<std::pair<int, int>> covers;
    std::vector<Elem> perp(top + 1);
    perp[0] = top;
    perp[top] = 0;
    for (int i = 0; i < k; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        covers.push_back({0, a});
        covers.push_back({0, b});
        covers.push_back({a, top});
        covers.push_back({b, top});
        perp[a] = b;
        perp[b] = a;
    }
    return OrthoLattice::validate(FiniteLattice::from_covers(top + 1, covers), std::move(perp));
}

OrthoLattice boolean(int n) {
    if (n < 0 || n > 10) throw Error(ErrorKind::TooLarge, "boolean lattice size");
    const int size = 1 << n;
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
    std::vector<Elem> perp(size);
    for (int a = 0; a < size; ++a) {
        perp[a] = (size - 1) & ~a;
        for (int b = 0; b < size; ++b) leq[a][b] = (a & b) == a;
    }
    return OrthoLattice::validate(FiniteLattice::from_order(std::move(leq)), std::move(perp));
}

FiniteLattice chain(int n) {
    if (n < 1) throw Error(ErrorKind::PreconditionFailed, "chain needs n >= 1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
    return FiniteLattice::from_covers(n, covers);
}

FiniteLattice pentagon() { return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

int SubspaceLattice::index_of(const Subspace& s) const {
    auto it = std::lower_bound(subspaces.begin(), subspaces.end(), s);
    if (it == subspaces.end() || *it != s) throw Error(ErrorKind::MalformedInput, "subspace not in lattice: " + s.to_string());
    return static_cast<int>(it - subspaces.begin());
}

SubspaceLattice subspace_ortholattice(const Field& field, std::size_t dim, const Matrix& gram, Involution sigma) {
    IPSpace space = validate_space(field, dim, gram, sigma);
    auto subs = enumerate_subspaces(field, dim);
    std::sort(subs.begin(), subs.end());
    const int n = static_cast<int>(subs.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) leq[i][j] = subs[i].leq(subs[j]);
    auto base = FiniteLattice::from_order(std::move(leq));
    std::vector<Elem> perp(n);
    for (int i = 0; i < n; ++i) {
        auto o = orthogonal(space, subs[i]);
        perp[i] = static_cast<Elem>(std::lower_bound(subs.begin(), subs.end(), o) - subs.begin());
    }
    auto lattice = OrthoLattice::validate(std::move(base), std::move(perp));
    return {std::move(space), std::move(subs), std::move(lattice)};
}

MatrixRing matrix_star_ring(const Field& field, std::size_t dim, const Matrix& gram, Involution sigma) {
    return MatrixRing({{field, dim, gram, sigma}}, true);
}

Field field_of_order(std::uint32_t q) {
    if (q < 2) throw Error(ErrorKind::MalformedInput, "field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t k = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw Error(ErrorKind::MalformedInput, std::to_string(q) + " is not a prime power");
    return Field::galois(p, k);
}

TableRing finite_matrix_ring(std::uint32_t q, std::size_t n, bool with_transpose) {
    Field f = field_of_order(q);
    return to_table(MatrixRing({{f, n, Matrix::identity(f, n), Involution::Identity}}, with_transpose));
}

MatrixRing product(const MatrixRing& a, const MatrixRing& b) {
    auto blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
    return MatrixRing(std::move(blocks), a.has_star() && b.has_star());
}

FrameWitness<Subspace> canonical_frame(int n, const Field& field) {
    if (n < 2) throw Error(ErrorKind::PreconditionFailed, "canonical frame needs n >= 2");
    const auto dim = static_cast<std::size_t>(n);
    auto e = [&](std::size_t i) {
        std::vector<Scalar> v(dim, field.zero());
        v[i] = field.one();
        return v;
    };
    FrameWitness<Subspace> phi;
    phi.kind = FrameKind::Skew;
    phi.n = phi.m = n;
    for (std::size_t i = 0; i < dim; ++i) phi.a.push_back(Subspace::span_of(field, {e(i)}));
    for (std::size_t i = 1; i < dim; ++i) {
        auto v = e(0);
        v[i] = field.neg(field.one());
        phi.a0.push_back(Subspace::span_of(field, {v}));
        phi.b.push_back(phi.a[0]);
    }
    return phi;
}

FrameWitness<Subspace> canonical_semiframe(const IPSpace& space) {
    const std::size_t n = space.dim;
    if (n < 2) throw Error(ErrorKind::PreconditionFailed, "canonical semiframe needs dim >= 2");
    const Field& f = space.field;
    auto e = [&](std::size_t i) {
        std::vector<Scalar> v(n, f.zero());
        v[i] = f.one();
        return v;
    };
    FrameWitness<Subspace> phi;
    phi.kind = FrameKind::OrthoSemiframe;
    phi.n = phi.m = static_cast<int>(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        auto d = e(i);
        d[j] = f.neg(f.one());
        phi.a.push_back(Subspace::span_of(f, {e(i)}));
        phi.b.push_back(Subspace::span_of(f, {e(j)}));
        phi.axes.push_back(Subspace::span_of(f, {d}));
    }
    return phi;
}

FrameWitness<Elem> mo2_frame() {
    FrameWitness<Elem> phi;
    phi.kind = FrameKind::Skew;
    phi.n = phi.m = 2;
    phi.a = {1, 2};
    phi.a0 = {3};
    phi.b = {1};
    return phi;
}

std::vector<std::string> catalog_names() {
    return {"mo",          "boolean",      "chain",           "pentagon",  "subspace",     "matrix-star-ring",
            "matrix-ring", "product-ring", "canonical-frame", "mo2-frame", "identity-rep", "shear-rep",
            "rotation-rep", "rotation-eta", "gf3-eta"};
}

}  // namespace orthocoord::models
