#include "orthocoord/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "orthocoord/error.hpp"
#include "orthocoord/frames.hpp"
#include "orthocoord/ipspace.hpp"
#include "orthocoord/lattice.hpp"
#include "orthocoord/models.hpp"
#include "orthocoord/rings.hpp"

namespace orthocoord::acceptance {

namespace {

Field Q() { return Field::rationals(); }

struct NamedOrtho {
    std::string name;
    OrthoLattice lattice;
};

// Catalog modular ortholattices; each builder validates on construction.
std::vector<NamedOrtho> ortho_catalog() {
    std::vector<NamedOrtho> out;
    for (int k = 1; k <= 4; ++k) out.push_back({"MO_" + std::to_string(k), models::mo_n(k)});
    for (int n = 1; n <= 4; ++n) out.push_back({"2^" + std::to_string(n), models::boolean(n)});
    Field g2 = Field::galois(2), g3 = Field::galois(3);
    out.push_back({"Sub(GF(2)^1)", models::subspace_ortholattice(g2, 1, Matrix::identity(g2, 1)).lattice});
    out.push_back({"Sub(GF(3)^2)", models::subspace_ortholattice(g3, 2, Matrix::identity(g3, 2)).lattice});
    return out;
}

Matrix rotation3() {
    auto s = [](const char* t) { return Q().parse(t); };
    return Matrix::from_rows(Q(), {{s("3/5"), s("4/5"), s("0")}, {s("-4/5"), s("3/5"), s("0")}, {s("0"), s("0"), s("1")}});
}

MatrixRing transpose_ring(const Field& f, std::size_t n) { return models::matrix_star_ring(f, n, Matrix::identity(f, n)); }

FrameWitness<Subspace> ring_semiframe(const MatrixRing& r) {
    const auto& b = r.blocks().front();
    return build_orthogonal_semiframe(SubspaceOrtho(b.space()), models::canonical_frame(static_cast<int>(b.dim), b.field));
}

// ---------------------------------------------------------------- criteria

void axioms(CriterionResult& out, std::uint64_t seed) {
    int lattices = 0, rings = 0;
    for (const auto& [name, l] : ortho_catalog()) {
        auto mod = is_modular(l.base());
        if (!mod.modular) out.report.add("modular", name);
        ++lattices;
    }
    // M_n(Q) with transpose: star-regular by anisotropy of the dot product
    for (std::size_t n : {2u, 3u}) {
        auto v = is_star_regular(transpose_ring(Q(), n), seed);
        if (!v.regular || !v.star_regular) out.report.add("star-regular", "M_" + std::to_string(n) + "(Q): " + v.witness);
        ++rings;
    }
    auto revalidate = [&](const std::string& name, const TableRing& t) {
        try {
            auto again = TableRing::validate(t.names(), t.add_table(), t.mul_table(), t.one(), t.star_table());
            if (!is_regular(again)) out.report.add("regular", name);
        } catch (const Error& e) {
            out.report.add("ring axioms", name + ": " + e.what());
        }
        ++rings;
    };
    revalidate("M_2(GF(2))", models::finite_matrix_ring(2, 2));
    Field g2 = Field::galois(2);
    MatrixRing gf2({{g2, 1, Matrix::identity(g2, 1), Involution::Identity}}, false);
    MatrixRing m2({{g2, 2, Matrix::identity(g2, 2), Involution::Identity}}, false);
    revalidate("GF(2) x M_2(GF(2))", to_table(models::product(gf2, m2)));
    out.detail = std::to_string(lattices) + " ortholattices, " + std::to_string(rings) + " rings";
}

void lemma1(CriterionResult& out, std::uint64_t) {
    int built = 0;
    std::vector<std::string> names;
    for (const auto& [name, l] : ortho_catalog()) {
        auto frame = search_frame(l, FrameKind::Skew, 2);
        if (!frame) continue;
        try {
            auto sf = build_orthogonal_semiframe(l, *frame);
            auto rep = verify_frame(l, sf);
            if (sf.kind != FrameKind::OrthoSemiframe || !rep.valid())
                out.report.add("semiframe verifies", name + (rep.valid() ? "" : ": " + rep.violations.front()));
            else {
                ++built;
                names.push_back(name);
            }
        } catch (const Error& e) {
            out.report.add("semiframe build", name + ": " + e.what());
        }
    }
    for (const char* required : {"MO_2", "MO_3", "Sub(GF(3)^2)"})
        if (std::find(names.begin(), names.end(), required) == names.end())
            out.report.add("semiframe for required lattice", required);
    std::string list;
    for (auto& n : names) list += (list.empty() ? "" : ", ") + n;
    out.detail = std::to_string(built) + " semiframes built (" + list + ")";
}

void fact3(CriterionResult& out, std::uint64_t) {
    Field g2 = Field::galois(2);
    MatrixRing gf2({{g2, 1, Matrix::identity(g2, 1), Involution::Identity}}, false);
    MatrixRing m2({{g2, 2, Matrix::identity(g2, 2), Involution::Identity}}, false);
    struct Case {
        std::string name;
        TableRing ring;
        int expected;
    };
    std::vector<Case> cases{{"M_2(GF(2))", to_table(m2), 2}, {"GF(2) x M_2(GF(2))", to_table(models::product(gf2, m2)), 4}};
    std::string detail;
    for (const auto& c : cases) {
        auto rep = fact3_check(c.ring);
        if (!rep.isomorphic) out.report.add("Con(Lat R) = Ideals(R)", c.name + (rep.violations.empty() ? "" : ": " + rep.violations.front()));
        if (rep.ideal_count != c.expected || rep.congruence_count != c.expected)
            out.report.add("counts", c.name + ": " + std::to_string(rep.ideal_count) + " ideals, " +
                                         std::to_string(rep.congruence_count) + " congruences");
        detail += (detail.empty() ? "" : "; ") + c.name + " " + std::to_string(rep.ideal_count) + " <-> " +
                  std::to_string(rep.congruence_count);
    }
    out.detail = detail;
}

void fact9(CriterionResult& out, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int cases = 0, star = 0;
    for (std::size_t n : {2u, 3u}) {
        IPSpace v = validate_space(Q(), n, Matrix::identity(Q(), n));
        for (int t = 0; t < 200; ++t) {
            Matrix d(Q(), n, n);
            for (std::size_t i = 0; i < n; ++i)
                if (rng() & 1) d(i, i) = Q().one();
            Matrix s = random_invertible(Q(), n, rng);
            Matrix phi = s * d * *s.inverse();
            auto verdict = fact9_check(v, phi);
            if (!verdict.coincide()) out.report.add("verdicts coincide", phi.to_string());
            star += verdict.is_star_projection ? 1 : 0;
            ++cases;
        }
    }
    out.detail = std::to_string(cases) + " idempotents, " + std::to_string(star) + " of them projections";
}

void orthogonality_criterion(CriterionResult& out, std::uint64_t seed) {
    std::vector<std::pair<std::string, IPSpace>> spaces{
        {"Q^2 dot", validate_space(Q(), 2, Matrix::identity(Q(), 2))},
        {"Q^2 diag(1,2)", validate_space(Q(), 2, Matrix::from_ints(Q(), {{1, 0}, {0, 2}}))},
        {"Q^3 dot", validate_space(Q(), 3, Matrix::identity(Q(), 3))}};
    std::mt19937_64 rng(seed);
    int positives = 0, negatives = 0;
    for (const auto& [name, v] : spaces) {
        int pos = 0, neg = 0;
        while (pos < 100 || neg < 100) {
            Subspace u = Subspace::column_space(random_matrix(v.field, v.dim, 1, rng));
            if (u.is_zero()) continue;
            Subspace rest = orthogonal(v, u);
            Subspace w = Subspace::column_space(rest.basis_columns() * random_matrix(v.field, rest.dim(), 1, rng));
            if (w.is_zero()) continue;
            Matrix pu = ortho_projection(v, u), pw = ortho_projection(v, w);
            Matrix phi = pw * random_matrix(v.field, v.dim, v.dim, rng) * pu;
            Matrix psi = adjoint(v, phi);
            if (pos < 100) {
                auto good = claim1_test(v, u, w, phi, psi);
                if (!good.adjoint_side || !good.orthogonal_side) out.report.add("equivalence, true side", name + ": " + phi.to_string());
                ++pos;
            }
            if (neg < 100) {
                Matrix bump = pu * random_matrix(v.field, v.dim, v.dim, rng) * pw;
                if (bump.is_zero()) continue;
                auto bad = claim1_test(v, u, w, phi, psi + bump);
                if (bad.adjoint_side || bad.orthogonal_side) out.report.add("equivalence, false side", name + ": " + phi.to_string());
                ++neg;
            }
        }
        positives += pos;
        negatives += neg;
    }
    out.detail = std::to_string(positives) + " adjoint pairs, " + std::to_string(negatives) + " perturbed pairs";
}

void fact11(CriterionResult& out, std::uint64_t) {
    int total = 0;
    for (const auto& [name, l] : ortho_catalog()) {
        auto cons = congruences(l.base());
        for (const auto& theta : cons.items) {
            auto v = check_congruence_perp(l, theta);
            if (!v.compatible)
                out.report.add("congruences respect perp", name + ": " + std::to_string(v.witness->first) + " ~ " +
                                                               std::to_string(v.witness->second));
            ++total;
        }
    }
    out.detail = std::to_string(total) + " congruences checked";
}

void main_lemma(CriterionResult& out, std::uint64_t seed) {
    struct Case {
        std::string name;
        std::size_t n;
        Matrix q;
    };
    std::vector<Case> cases{{"M_2(Q) identity", 2, Matrix::identity(Q(), 2)},
                            {"M_3(Q) identity", 3, Matrix::identity(Q(), 3)},
                            {"M_3(Q) rotation", 3, rotation3()}};
    int generators = 0;
    for (const auto& c : cases) {
        auto r = transpose_ring(Q(), c.n);
        auto rep = conjugation_rep(r, validate_space(Q(), c.n, Matrix::identity(Q(), c.n)), c.q);
        auto rec = recover_adjoints(rep, ring_semiframe(r), seed, 50);
        for (auto& v : rec.preconditions.violations) out.report.add("precondition: " + v.claim, c.name + ": " + v.witness);
        for (auto& v : rec.steps.violations) out.report.add("StepFailure: " + v.claim, c.name + ": " + v.witness);
        generators += rec.generators_checked;
    }
    auto r2 = transpose_ring(Q(), 2);
    auto shear = conjugation_rep(r2, validate_space(Q(), 2, Matrix::identity(Q(), 2)), Matrix::from_ints(Q(), {{1, 1}, {0, 1}}));
    auto ortho = verify_ortho_rep(shear, seed);
    std::string witness;
    if (ortho.pass() || ortho.violations.front().claim != "PerpViolation")
        out.report.add("shear rejected with PerpViolation", "no witness");
    else
        witness = ortho.violations.front().witness;
    out.detail = "3 star representations (" + std::to_string(generators) + " corner generators); shear: " + witness;
}

void theorem1(CriterionResult& out, std::uint64_t seed) {
    // M_3(Q): orthogonal change of basis
    auto r = transpose_ring(Q(), 3);
    IPSpace v = validate_space(Q(), 3, Matrix::identity(Q(), 3));
    Matrix q = rotation3();
    Matrix q_inv = *q.inverse();
    auto res = ring_embedding_from_ortho_rep(r, v, frame_eta_from_matrix(r, q), seed, 50);
    for (auto& x : res.report.violations) out.report.add(x.claim, "M_3(Q): " + x.witness);
    if (!res.iota) {
        out.report.add("embedding produced", "M_3(Q)");
        return;
    }
    int units = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (res.iota->unit_image(i, j) == q * Matrix::unit(Q(), 3, i, j) * q_inv) ++units;
    if (units != 9) out.report.add("iota = conjugation", std::to_string(units) + " of 9 units");
    std::mt19937_64 rng(seed);
    int sampled = 0;
    for (int s = 0; s < 50; ++s) {
        BlockMatrix a = r.random_element(rng);
        Matrix ia = res.iota->apply(a);
        if (Subspace::column_space(ia) != Subspace::column_space(a[0]).image_under(q))
            out.report.add("eta(aR) = im iota(a)", a[0].to_string());
        if (adjoint(v, ia) != res.iota->apply(r.star(a))) out.report.add("iota(a*) = iota(a)*", a[0].to_string());
        ++sampled;
    }
    // GF(3)^3, lattice half only
    Field g3 = Field::galois(3);
    MatrixRing plain({{g3, 3, Matrix::identity(g3, 3), Involution::Identity}}, false);
    IPSpace bare{g3, 3, Matrix::identity(g3, 3), Involution::Identity};
    std::mt19937_64 rng3(seed + 3);
    Matrix q3 = random_invertible(g3, 3, rng3);
    auto res3 = ring_embedding_from_ortho_rep(plain, bare, frame_eta_from_matrix(plain, q3), seed, 50);
    for (auto& x : res3.report.violations) out.report.add(x.claim, "GF(3)^3: " + x.witness);
    const auto lattice_size = enumerate_subspaces(g3, 3).size();
    if (lattice_size != 28) out.report.add("28 subspaces", std::to_string(lattice_size));
    out.detail = std::to_string(units) + "/9 units, " + std::to_string(sampled) + " samples; GF(3)^3 lattice half on " +
                 std::to_string(lattice_size) + " subspaces";
}

void coordinatization(CriterionResult& out, std::uint64_t seed) {
    Field g3 = Field::galois(3);
    auto r0 = coordinatize(models::canonical_frame(3, g3), g3, 3);
    auto all = enumerate_subspaces(g3, 3);
    auto rep = verify_coordinatization(r0, all, seed, 30);
    out.report.append(rep.report);
    if (rep.lattice_size != 28) out.report.add("|Lat(R0)| = 28", std::to_string(rep.lattice_size));
    if (rep.sampled != 30) out.report.add("30 sampled phi", std::to_string(rep.sampled));
    out.detail = "omega bijective onto " + std::to_string(all.size()) + " subspaces, " + std::to_string(rep.sampled) +
                 " sampled phi";
}

struct Spec {
    const char* title;
    double limit;
    void (*run)(CriterionResult&, std::uint64_t);
};

const Spec specs[library_criteria] = {
    {"Axiom suites on the catalog", 5, axioms},
    {"Lemma 1 semiframe construction", 10, lemma1},
    {"Fact 3 ideals vs congruences", 30, fact3},
    {"Fact 9 projection verdicts", 10, fact9},
    {"Adjoint orthogonality criterion", 10, orthogonality_criterion},
    {"Fact 11 congruences respect perp", 20, fact11},
    {"Main Lemma adjoint recovery", 15, main_lemma},
    {"Theorem 1 restricted pipeline", 30, theorem1},
    {"Coordinatization over GF(3)^3", 30, coordinatization},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > library_criteria) throw Error(ErrorKind::PreconditionFailed, "no library criterion " + std::to_string(id));
    const Spec& s = specs[id - 1];
    CriterionResult out;
    out.id = id;
    out.title = s.title;
    out.limit_seconds = s.limit;
    auto start = std::chrono::steady_clock::now();
    try {
        s.run(out, seed);
    } catch (const std::exception& e) {
        out.report.add("unexpected error", e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.report.pass()) {
        const auto& v = out.report.violations.front();
        out.detail = v.claim + (v.witness.empty() ? "" : ": " + v.witness);
    }
    return out;
}

std::vector<CriterionResult> run_all(std::uint64_t seed, const std::function<void(const CriterionResult&)>& progress) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= library_criteria; ++id) {
        out.push_back(run_criterion(id, seed));
        if (progress) progress(out.back());
    }
    return out;
}

std::string summary_line(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (r.pass() ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " (" << r.seconds << " s / limit "
       << r.limit_seconds << " s)";
    if (!r.within_time()) os << " TIME LIMIT EXCEEDED";
    if (!r.detail.empty()) os << ": " << r.detail;
    return os.str();
}

}  // namespace orthocoord::acceptance
