#include "orthocoord/rep.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "orthocoord/error.hpp"

namespace orthocoord {

namespace {

std::string unit_name(std::size_t i, std::size_t j) { return "E_" + std::to_string(i + 1) + std::to_string(j + 1); }

const MatrixBlock& only_block(const MatrixRing& r) {
    if (r.blocks().size() != 1) throw Error(ErrorKind::Unsupported, "representations need a single-block ring");
    return r.blocks().front();
}

// Rank of a family of matrices viewed as vectors.
std::size_t family_rank(const std::vector<Matrix>& family) {
    if (family.empty()) return 0;
    Matrix m = family.front().vectorized();
    for (std::size_t i = 1; i < family.size(); ++i) m = m.hconcat(family[i].vectorized());
    return m.rank();
}

// Random n x n matrix of rank at most r (r random in [0, n]).
Matrix random_low_rank(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    if (r == 0) return Matrix(f, n, n);
    return random_matrix(f, n, r, rng) * random_matrix(f, r, n, rng);
}

// Generators of principal right ideals used for the lattice and ortho checks.
std::vector<Subspace> probe_subspaces(const RingRep& rep, std::uint64_t seed, int samples) {
    const auto& b = only_block(rep.ring);
    if (b.field.is_finite()) {
        auto all = enumerate_subspaces(b.field, b.dim);
        return all;
    }
    std::vector<Subspace> out{Subspace(b.field, b.dim), Subspace::whole(b.field, b.dim)};
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) out.push_back(Subspace::column_space(Matrix::unit(b.field, b.dim, i, j)));
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = i + 1; j < b.dim; ++j)
            out.push_back(Subspace::column_space(Matrix::unit(b.field, b.dim, i, i) + Matrix::unit(b.field, b.dim, j, j)));
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) out.push_back(Subspace::column_space(random_low_rank(b.field, b.dim, rng)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BlockMatrix as_block(const Matrix& m) { return BlockMatrix{m}; }

}  // namespace

Matrix RingRep::apply(const BlockMatrix& a) const {
    const std::size_t n = this->n();
    const Field& f = space.field;
    Matrix out(f, space.dim, space.dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!f.is_zero(a[0](i, j))) out = out + unit_image(i, j).scaled(a[0](i, j));
    return out;
}

RingRep make_ring_rep(MatrixRing ring, IPSpace space, std::vector<Matrix> unit_images) {
    const auto& b = only_block(ring);
    if (b.field != space.field) throw Error(ErrorKind::MalformedInput, "ring and space fields differ");
    if (unit_images.size() != b.dim * b.dim)
        throw Error(ErrorKind::MalformedInput, "need images of all " + std::to_string(b.dim * b.dim) + " matrix units");
    for (const auto& m : unit_images)
        if (m.rows() != space.dim || m.cols() != space.dim)
            throw Error(ErrorKind::MalformedInput, "image matrices must be " + std::to_string(space.dim) + "x" +
                                                       std::to_string(space.dim));
    return RingRep{std::move(ring), std::move(space), std::move(unit_images)};
}

RingRep conjugation_rep(MatrixRing ring, IPSpace space, const Matrix& s) {
    auto s_inv = s.inverse();
    if (!s_inv) throw Error(ErrorKind::PreconditionFailed, "conjugating matrix is singular");
    const auto& b = only_block(ring);
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) images.push_back(s * Matrix::unit(b.field, b.dim, i, j) * *s_inv);
    return make_ring_rep(std::move(ring), std::move(space), std::move(images));
}

Report verify_ring_rep(const RingRep& rep) {
    Report report;
    const std::size_t n = rep.n();
    const Field& f = rep.space.field;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Matrix lhs = rep.unit_image(i, j) * rep.unit_image(k, l);
                    Matrix rhs = j == k ? rep.unit_image(i, l) : Matrix(f, rep.space.dim, rep.space.dim);
                    if (lhs != rhs) report.add("multiplicativity", unit_name(i, j) + " * " + unit_name(k, l));
                }
    Matrix one(f, rep.space.dim, rep.space.dim);
    for (std::size_t i = 0; i < n; ++i) one = one + rep.unit_image(i, i);
    if (one != Matrix::identity(f, rep.space.dim)) report.add("unit", "sum iota(E_ii) = " + one.to_string());
    if (family_rank(rep.unit_images) != n * n) {
        Matrix m = rep.unit_images.front().vectorized();
        for (std::size_t i = 1; i < rep.unit_images.size(); ++i) m = m.hconcat(rep.unit_images[i].vectorized());
        Matrix ker = m.nullspace();
        Matrix a(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = ker(i * n + j, 0);
        report.add("injectivity", "iota(" + a.to_string() + ") = 0");
    }
    return report;
}

Subspace eta(const RingRep& rep, const BlockMatrix& a) { return Subspace::column_space(rep.apply(a)); }

Report induce_lattice_rep(const RingRep& rep, std::uint64_t seed, int samples) {
    Report report;
    const auto& b = only_block(rep.ring);
    auto probes = probe_subspaces(rep, seed, samples);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<Subspace> images;
    for (const auto& s : probes) {
        Matrix gen = generator_matrix(s);
        Subspace img = eta(rep, as_block(gen));
        // another generator of the same right ideal: gen * u with u invertible
        Matrix other = gen * random_invertible(b.field, b.dim, rng);
        if (eta(rep, as_block(other)) != img)
            report.add("WellDefinednessViolation", "a=" + gen.to_string() + ", b=" + other.to_string());
        images.push_back(std::move(img));
    }
    const Subspace zero(b.field, b.dim), whole = Subspace::whole(b.field, b.dim);
    if (!eta(rep, as_block(Matrix(b.field, b.dim, b.dim))).is_zero()) report.add("eta(0) = 0", "");
    if (!eta(rep, as_block(Matrix::identity(b.field, b.dim))).is_whole()) report.add("eta(1) = V", "");
    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = i + 1; j < probes.size(); ++j) {
            const auto& s = probes[i];
            const auto& t = probes[j];
            if (images[i] == images[j]) report.add("injectivity", s.to_string() + " vs " + t.to_string());
            Subspace sum = eta(rep, as_block(generator_matrix(s.join(t))));
            if (sum != images[i].join(images[j])) report.add("join", s.to_string() + " + " + t.to_string());
            Subspace meet = eta(rep, as_block(generator_matrix(s.meet(t))));
            if (meet != images[i].meet(images[j])) report.add("meet", s.to_string() + " meet " + t.to_string());
        }
    return report;
}

Report verify_ortho_rep(const RingRep& rep, std::uint64_t seed, int samples) {
    Report report;
    if (!rep.ring.has_star()) {
        report.add("PreconditionFailed", "ring has no involution");
        return report;
    }
    for (const auto& s : probe_subspaces(rep, seed, samples)) {
        BlockMatrix a = as_block(generator_matrix(s));
        BlockMatrix e = projection_generator(rep.ring, a);
        Subspace lhs = eta(rep, rep.ring.sub(rep.ring.one(), e));
        Subspace rhs = orthogonal(rep.space, eta(rep, a));
        if (lhs != rhs)
            report.add("PerpViolation", "a=" + a[0].to_string() + ": eta((aR)^perp)=" + lhs.to_string() +
                                            ", eta(aR)^perp=" + rhs.to_string());
    }
    return report;
}

bool subspaces_orthogonal(const IPSpace& v, const Subspace& x, const Subspace& y) {
    if (x.is_zero() || y.is_zero()) return true;
    return (x.basis_columns().conj_transpose(v.sigma) * v.gram * y.basis_columns()).is_zero();
}

Claim1Verdict claim1_test(const IPSpace& v, const Subspace& u, const Subspace& w, const Matrix& phi, const Matrix& psi) {
    if (!subspaces_orthogonal(v, u, w)) throw Error(ErrorKind::PreconditionFailed, "U not orthogonal to W");
    Matrix pu = ortho_projection(v, u), pw = ortho_projection(v, w);
    if (pw * phi * pu != phi) throw Error(ErrorKind::PreconditionFailed, "phi != pi_W phi pi_U");
    if (pu * psi * pw != psi) throw Error(ErrorKind::PreconditionFailed, "psi != pi_U psi pi_W");
    Claim1Verdict out;
    out.adjoint_side = adjoint(v, phi) == psi;
    out.orthogonal_side = subspaces_orthogonal(v, Subspace::column_space(pu - phi), Subspace::column_space(pw + psi));
    return out;
}

Cancellator claim3_cancellator(const MatrixRing& r, const BlockMatrix& e, const BlockMatrix& f, const BlockMatrix& g) {
    if (!projections_orthogonal(r, e, f)) throw Error(ErrorKind::PreconditionFailed, "e and f are not orthogonal");
    Cancellator out;
    for (std::size_t k = 0; k < r.blocks().size(); ++k) {
        const Field& fld = r.blocks()[k].field;
        const std::size_t n = r.blocks()[k].dim;
        auto es = Subspace::column_space(e[k]), fs = Subspace::column_space(f[k]), gs = Subspace::column_space(g[k]);
        auto ef = es.join(fs);
        if (es.join(gs) != ef || fs.join(gs) != ef || !es.meet(gs).is_zero() || !fs.meet(gs).is_zero())
            throw Error(ErrorKind::NoSolution, "gR is not a common complement of eR and fR in block " + std::to_string(k));
        Matrix y(fld, n, n);
        if (!fs.is_zero()) {
            Matrix fb = fs.basis_columns();
            Matrix m = gs.is_zero() ? fb : fb.hconcat(gs.basis_columns());
            for (std::size_t c = 0; c < n; ++c) {
                auto sol = m.solve(e[k].column(c));
                if (!sol) throw Error(ErrorKind::NoSolution, "column " + std::to_string(c) + " of e outside fR + gR");
                Matrix yc = fb * sol->block(0, 0, fs.dim(), 1);
                for (std::size_t i = 0; i < n; ++i) y(i, c) = yc(i, 0);
            }
        } else if (!es.is_zero()) {
            throw Error(ErrorKind::NoSolution, "fR = 0 but eR != 0");
        }
        if (!Subspace::column_space(e[k] - y).leq(gs)) throw Error(ErrorKind::InternalProofViolation, "e - omega(e) not in gR");
        out.omega_e.push_back(std::move(y));
    }
    out.c = r.mul(out.omega_e, e);
    if (r.mul(r.mul(f, out.c), e) != out.c) throw Error(ErrorKind::InternalProofViolation, "c not in fRe");
    // left cancellation on the spanning set e E_kl e of eRe
    std::vector<Matrix> xs, cxs;
    for (const auto& u : r.matrix_units()) {
        BlockMatrix x = r.mul(r.mul(e, u), e);
        BlockMatrix cx = r.mul(out.c, x);
        Matrix xv = x[0].vectorized(), cv = cx[0].vectorized();
        for (std::size_t k = 1; k < x.size(); ++k) {
            xv = xv.vconcat(x[k].vectorized());
            cv = cv.vconcat(cx[k].vectorized());
        }
        xs.push_back(std::move(xv));
        cxs.push_back(std::move(cv));
    }
    if (family_rank(xs) != family_rank(cxs)) throw Error(ErrorKind::CancellationFailure, "x -> c x not injective on eRe");
    return out;
}

// ---------------------------------------------------------------- adjoint recovery

namespace {

struct Recovery {
    const RingRep& rep;
    const MatrixRing& r;
    Report& steps;
    int& generators;

    Matrix iota(const BlockMatrix& a) const { return rep.apply(a); }
    Matrix star_v(const Matrix& m) const { return adjoint(rep.space, m); }

    // a in fRe with e perp f: the orthogonality route to iota(a*) = iota(a)*.
    void off_diagonal(const BlockMatrix& e, const BlockMatrix& f, const BlockMatrix& a, const std::string& tag) {
        ++generators;
        BlockMatrix b = r.star(a);
        if (!r.is_zero(r.mul(r.star(r.sub(e, a)), r.add(f, b))))
            steps.add("(e-a)*(f+a*) = 0", tag + ": a=" + to_string(a));
        Subspace left = eta(rep, r.sub(e, a)), right = eta(rep, r.add(f, b));
        if (!subspaces_orthogonal(rep.space, left, right)) {
            steps.add("eta(e-a) perp eta(f+a*)", tag + ": a=" + to_string(a));
            return;
        }
        Subspace u = eta(rep, e), w = eta(rep, f);
        try {
            auto v = claim1_test(rep.space, u, w, iota(a), iota(b));
            if (!v.orthogonal_side || !v.agree()) steps.add("orthogonality criterion", tag + ": a=" + to_string(a));
        } catch (const Error& err) {
            steps.add("orthogonality criterion precondition", tag + ": " + err.what());
        }
    }
};

}  // namespace

AdjointRecovery recover_adjoints(const RingRep& rep, const FrameWitness<Subspace>& semiframe, std::uint64_t seed,
                                 int samples) {
    AdjointRecovery out;
    const MatrixRing& r = rep.ring;
    const auto& blk = only_block(r);
    if (!r.has_star()) {
        out.preconditions.add("PreconditionFailed", "ring has no involution");
        return out;
    }
    IPSpace ring_space = blk.space();
    out.preconditions.append(verify_ring_rep(rep));
    for (auto& v : verify_ortho_rep(rep, seed, samples).violations) out.preconditions.violations.push_back(v);
    SubspaceOrtho lat(ring_space);
    if (semiframe.kind != FrameKind::OrthoSemiframe) out.preconditions.add("semiframe", "kind is not ortho-semiframe");
    else
        for (auto& v : verify_frame(lat, semiframe).violations) out.preconditions.add("semiframe", v);
    for (std::size_t i = 0; i < semiframe.a.size(); ++i)
        for (std::size_t j = i + 1; j < semiframe.a.size(); ++j)
            if (!subspaces_orthogonal(ring_space, semiframe.a[i], semiframe.a[j]))
                out.preconditions.add("semiframe parts pairwise orthogonal", std::to_string(i) + "," + std::to_string(j));
    if (!out.preconditions.pass()) return out;

    Recovery rc{rep, r, out.steps, out.generators_checked};
    const std::size_t k = semiframe.a.size();
    std::vector<BlockMatrix> e(k), f(k), g(k);
    for (std::size_t i = 0; i < k; ++i) {
        e[i] = as_block(ortho_projection(ring_space, semiframe.a[i]));
        f[i] = as_block(ortho_projection(ring_space, semiframe.b[i]));
        g[i] = as_block(generator_matrix(semiframe.axes[i]));
        Subspace u = eta(rep, e[i]);
        if (rep.apply(e[i]) != ortho_projection(rep.space, u)) out.steps.add("iota(e_i) = pi_U", std::to_string(i));
    }
    auto units = r.matrix_units();

    // off-diagonal corners e_j R e_i
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            for (const auto& u : units) {
                BlockMatrix a = r.mul(r.mul(e[j], u), e[i]);
                if (!r.is_zero(a)) rc.off_diagonal(e[i], e[j], a, "corner " + std::to_string(j) + std::to_string(i));
            }
        }

    // diagonal corners e_i R e_i through the cancellator
    for (std::size_t i = 0; i < k; ++i) {
        const std::string tag = "corner " + std::to_string(i) + std::to_string(i);
        Cancellator can;
        try {
            can = claim3_cancellator(r, e[i], f[i], g[i]);
        } catch (const Error& err) {
            out.steps.add("cancellator", tag + ": " + err.what());
            continue;
        }
        rc.off_diagonal(e[i], f[i], can.c, tag + " c");
        Matrix pu = ortho_projection(rep.space, eta(rep, e[i]));
        Matrix eps = rc.iota(can.c);
        // eps must cancel on pi_U End(V) pi_U
        std::vector<Matrix> xi, eps_xi;
        for (std::size_t p = 0; p < rep.space.dim; ++p)
            for (std::size_t q = 0; q < rep.space.dim; ++q) {
                Matrix x = pu * Matrix::unit(rep.space.field, rep.space.dim, p, q) * pu;
                eps_xi.push_back(eps * x);
                xi.push_back(std::move(x));
            }
        if (family_rank(xi) != family_rank(eps_xi)) out.steps.add("iota(c) cancels on pi_U End pi_U", tag);
        for (const auto& u : units) {
            BlockMatrix a = r.mul(r.mul(e[i], u), e[i]);
            if (r.is_zero(a)) continue;
            ++out.generators_checked;
            BlockMatrix b = r.star(a);
            BlockMatrix ca = r.mul(can.c, a);
            if (!r.is_zero(ca)) rc.off_diagonal(e[i], f[i], ca, tag + " ca");
            Matrix phi = rc.iota(a), psi = rc.iota(b);
            if (pu * phi * pu != phi || pu * psi * pu != psi) out.steps.add("iota(a), iota(a*) in pi_U End pi_U", tag);
            Matrix lhs = psi * rc.star_v(eps);
            Matrix rhs = rc.star_v(eps * phi);
            if (lhs != rhs) out.steps.add("iota(b) iota(c)* = (iota(c) iota(a))*", tag + ": a=" + to_string(a));
            if (rc.star_v(phi) != psi) out.steps.add("iota(a*) = iota(a)* on the corner", tag + ": a=" + to_string(a));
        }
    }

    // reassembly
    BlockMatrix sum = r.zero();
    for (const auto& ei : e) sum = r.add(sum, ei);
    if (sum != r.one()) out.steps.add("sum e_i = 1", to_string(sum));
    std::mt19937_64 rng(seed);
    std::vector<BlockMatrix> checks = units;
    for (int s = 0; s < samples; ++s) checks.push_back(r.random_element(rng));
    for (std::size_t t = 0; t < checks.size(); ++t) {
        const auto& a = checks[t];
        if (rc.star_v(rc.iota(a)) != rc.iota(r.star(a))) out.steps.add("iota(a*) = iota(a)*", to_string(a));
        if (t >= units.size()) ++out.random_checked;
    }
    return out;
}

// ---------------------------------------------------------------- coordinatization

Matrix CoordRing::element(const Matrix& a) const { return p * kronecker(a, Matrix::identity(field, k)) * p_inv; }

std::optional<Matrix> CoordRing::coordinates(const Matrix& x) const {
    Matrix y = p_inv * x * p;
    Matrix a(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = y(i * k, j * k);
    if (kronecker(a, Matrix::identity(field, k)) != y) return std::nullopt;
    return a;
}

Subspace CoordRing::omega(const Subspace& s) const { return Subspace::column_space(element(generator_matrix(s))); }

CoordRing coordinatize(const FrameWitness<Subspace>& frame, const Field& field, std::size_t dim) {
    if (!field.is_rational() && !field.is_prime_field())
        throw Error(ErrorKind::NonPrimeField, field.name() + " is not a prime field");
    if (frame.kind == FrameKind::OrthoSemiframe || frame.n != frame.m || frame.n < 3)
        throw Error(ErrorKind::NotAFrame, "need a genuine n-frame with n >= 3");
    const std::size_t n = static_cast<std::size_t>(frame.n);
    if (frame.a.size() != n || frame.a0.size() != n - 1 || frame.b.size() != n - 1)
        throw Error(ErrorKind::NotAFrame, "frame shape");
    if (frame.a[0].is_zero()) throw Error(ErrorKind::NotAFrame, "a_0 = 0");
    SubspaceLatticeView lat(field, dim);
    auto report = verify_frame(lat, frame);
    if (!report.valid()) throw Error(ErrorKind::NotAFrame, report.violations.front());
    if (!independent_family(lat, frame.a)) throw Error(ErrorKind::NotAFrame, "1 != (+) a_i");

    CoordRing r0{field, n, frame.a[0].dim(), Matrix(field, 0, 0), Matrix(field, 0, 0), {}, {}};
    if (r0.k * n != dim) throw Error(ErrorKind::NotAFrame, "summands do not have equal dimension");
    Matrix beta = frame.a[0].basis_columns();
    Matrix p = beta;
    std::vector<Matrix> images{beta};
    for (std::size_t i = 1; i < n; ++i) {
        Matrix ai = frame.a[i].basis_columns();
        Matrix m = ai.hconcat(frame.a0[i - 1].basis_columns());
        auto sol = m.solve(beta);
        if (!sol) throw Error(ErrorKind::NotAFrame, "a_0 not inside a_" + std::to_string(i) + " + a_0" + std::to_string(i));
        Matrix t = ai * sol->block(0, 0, ai.cols(), beta.cols());
        images.push_back(t);
        p = p.hconcat(t);
    }
    auto p_inv = p.inverse();
    if (!p_inv) throw Error(ErrorKind::NotAFrame, "transported bases are dependent");
    r0.p = p;
    r0.p_inv = *p_inv;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix pi = r0.element(Matrix::unit(field, n, i, i));
        if (pi * pi != pi || Subspace::column_space(pi) != frame.a[i])
            throw Error(ErrorKind::InternalProofViolation, "frame idempotent " + std::to_string(i));
        r0.idempotents.push_back(std::move(pi));
        if (i > 0) {
            Matrix tau = r0.element(Matrix::unit(field, n, i, 0));
            if (tau * beta != images[i]) throw Error(ErrorKind::InternalProofViolation, "transport " + std::to_string(i));
            r0.transports.push_back(std::move(tau));
        }
    }
    return r0;
}

CoordReport verify_coordinatization(const CoordRing& r0, const std::optional<std::vector<Subspace>>& lattice,
                                    std::uint64_t seed, int samples) {
    CoordReport out;
    const Field& f = r0.field;
    const std::size_t n = r0.n;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Matrix a = random_low_rank(f, n, rng), b = random_low_rank(f, n, rng);
        Matrix x = r0.element(a), y = r0.element(b);
        auto prod = r0.coordinates(x * y);
        auto sum = r0.coordinates(x - y);
        if (!prod || *prod != a * b) out.report.add("ClosureFailure", "product of " + a.to_string() + ", " + b.to_string());
        if (!sum || *sum != a - b) out.report.add("ClosureFailure", "difference of " + a.to_string() + ", " + b.to_string());
        // omega(phi R0) = im phi
        if (r0.omega(Subspace::column_space(a)) != Subspace::column_space(x))
            out.report.add("omega(phi R0) = im phi", a.to_string());
        if (!Subspace::column_space(x * y).leq(Subspace::column_space(x)))
            out.report.add("im(phi psi) <= im(phi)", a.to_string() + ", " + b.to_string());
        ++out.sampled;
    }
    std::vector<Subspace> ideals;
    if (f.is_finite()) {
        ideals = enumerate_subspaces(f, n);
    } else {
        ideals = {Subspace(f, n), Subspace::whole(f, n)};
        for (int s = 0; s < samples; ++s) ideals.push_back(Subspace::column_space(random_low_rank(f, n, rng)));
    }
    out.lattice_size = f.is_finite() ? ideals.size() : 0;
    std::vector<Subspace> images;
    for (const auto& s : ideals) {
        images.push_back(r0.omega(s));
        if (images.back().dim() != r0.k * s.dim()) out.report.add("rank classification", s.to_string());
    }
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (ideals[i].leq(ideals[j]) != images[i].leq(images[j]))
                out.report.add("omega preserves and reflects order", ideals[i].to_string() + ", " + ideals[j].to_string());
        }
    if (lattice) {
        std::set<Subspace> target(lattice->begin(), lattice->end());
        std::set<Subspace> hit;
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (!target.count(images[i])) out.report.add("omega lands in L", images[i].to_string());
            hit.insert(images[i]);
        }
        if (f.is_finite() && hit != target)
            out.report.add("omega onto L", std::to_string(hit.size()) + " of " + std::to_string(target.size()) + " reached");
    }
    return out;
}

// ---------------------------------------------------------------- pipeline

FrameEta frame_eta_from_matrix(const MatrixRing& ring, const Matrix& q) {
    const auto& b = only_block(ring);
    FrameEta out;
    for (std::size_t i = 0; i < b.dim; ++i) out.diagonal.push_back(Subspace::column_space(q * Matrix::unit(b.field, b.dim, i, i)));
    for (std::size_t i = 1; i < b.dim; ++i) {
        Matrix g = Matrix::unit(b.field, b.dim, 0, 0) - Matrix::unit(b.field, b.dim, i, 0);
        out.axes.push_back(Subspace::column_space(q * g));
    }
    out.extension = q;
    return out;
}

PipelineResult ring_embedding_from_ortho_rep(const MatrixRing& ring, const IPSpace& space, const FrameEta& eta_frame,
                                             std::uint64_t seed, int samples) {
    PipelineResult out;
    const auto& b = only_block(ring);
    const Field& f = b.field;
    const std::size_t n = b.dim;
    if (space.field != f) throw Error(ErrorKind::MalformedInput, "ring and space fields differ");
    if (eta_frame.diagonal.size() != n || eta_frame.axes.size() + 1 != n)
        throw Error(ErrorKind::MalformedInput, "eta must be given on all E_ii R and (e_0 - e_i)R");

    FrameWitness<Subspace> image;
    image.kind = FrameKind::Skew;
    image.n = image.m = static_cast<int>(n);
    image.a = eta_frame.diagonal;
    image.a0 = eta_frame.axes;
    image.b.assign(n - 1, image.a[0]);
    SubspaceLatticeView lat(f, space.dim);
    auto fr = verify_frame(lat, image);
    if (!fr.valid()) {
        for (auto& v : fr.violations) out.report.add("FrameImageDegenerate", v);
        return out;
    }
    std::optional<CoordRing> r0;
    try {
        r0 = coordinatize(image, f, space.dim);
    } catch (const Error& err) {
        out.report.add("coordinatization", err.what());
        return out;
    }
    std::vector<Matrix> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) units.push_back(r0->element(Matrix::unit(f, n, i, j)));
    RingRep iota = make_ring_rep(ring, space, std::move(units));
    out.report.append(verify_ring_rep(iota));

    for (std::size_t i = 0; i < n; ++i)
        if (eta(iota, as_block(Matrix::unit(f, n, i, i))) != eta_frame.diagonal[i])
            out.report.add("eta(aR) = im iota(a)", "E_" + std::to_string(i + 1) + std::to_string(i + 1));
    for (std::size_t i = 1; i < n; ++i) {
        Matrix g = Matrix::unit(f, n, 0, 0) - Matrix::unit(f, n, i, 0);
        if (eta(iota, as_block(g)) != eta_frame.axes[i - 1])
            out.report.add("eta(aR) = im iota(a)", "axis " + std::to_string(i));
    }
    if (eta_frame.extension) {
        const Matrix& q = *eta_frame.extension;
        auto q_inv = q.inverse();
        if (!q_inv) throw Error(ErrorKind::MalformedInput, "extension matrix is singular");
        std::vector<Subspace> probes;
        if (f.is_finite()) {
            probes = enumerate_subspaces(f, n);
        } else {
            std::mt19937_64 rng(seed);
            for (int s = 0; s < samples; ++s) probes.push_back(Subspace::column_space(random_matrix(f, n, n, rng)));
        }
        std::mt19937_64 rng(seed + 1);
        for (const auto& s : probes) {
            // a random generator of the ideal, not just the canonical one
            Matrix a = generator_matrix(s) * random_invertible(f, n, rng);
            if (eta(iota, as_block(a)) != s.image_under(q)) out.report.add("eta(aR) = im iota(a)", a.to_string());
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (iota.unit_image(i, j) != q * Matrix::unit(f, n, i, j) * *q_inv)
                    out.report.add("iota agrees with conjugation by Q", unit_name(i, j));
    }
    if (ring.has_star()) {
        out.star_stage_run = true;
        IPSpace ring_space = b.space();
        SubspaceOrtho ring_lat(ring_space);
        FrameWitness<Subspace> canonical;
        canonical.kind = FrameKind::Skew;
        canonical.n = canonical.m = static_cast<int>(n);
        for (std::size_t i = 0; i < n; ++i) canonical.a.push_back(Subspace::column_space(Matrix::unit(f, n, i, i)));
        for (std::size_t i = 1; i < n; ++i) {
            canonical.a0.push_back(Subspace::column_space(Matrix::unit(f, n, 0, 0) - Matrix::unit(f, n, i, 0)));
            canonical.b.push_back(canonical.a[0]);
        }
        try {
            out.semiframe = build_orthogonal_semiframe(ring_lat, canonical);
        } catch (const Error& err) {
            out.report.add("semiframe construction", err.what());
            out.iota = std::move(iota);
            return out;
        }
        auto rec = recover_adjoints(iota, *out.semiframe, seed, samples);
        out.report.append(rec.preconditions);
        out.report.append(rec.steps);
    }
    out.iota = std::move(iota);
    return out;
}

}  // namespace orthocoord
