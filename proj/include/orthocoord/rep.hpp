#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthocoord/frames.hpp"
#include "orthocoord/ipspace.hpp"
#include "orthocoord/rings.hpp"

namespace orthocoord {

struct Violation {
    std::string claim;
    std::string witness;
};

struct Report {
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
    void add(std::string claim, std::string witness) { violations.push_back({std::move(claim), std::move(witness)}); }
    void append(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

/// Ring map M_n(F) -> End(V), given on the matrix units and extended
/// F-linearly. Only single-block descriptors are supported.
struct RingRep {
    MatrixRing ring;
    IPSpace space;
    std::vector<Matrix> unit_images;  // image of E_ij at i * n + j

    std::size_t n() const { return ring.blocks().front().dim; }
    const Matrix& unit_image(std::size_t i, std::size_t j) const { return unit_images.at(i * n() + j); }
    Matrix apply(const BlockMatrix& a) const;
};

/// Checks shapes and builds the representation; Unsupported for multi-block rings.
RingRep make_ring_rep(MatrixRing ring, IPSpace space, std::vector<Matrix> unit_images);
/// a -> S a S^{-1}.
RingRep conjugation_rep(MatrixRing ring, IPSpace space, const Matrix& s);

/// Multiplicativity on matrix-unit pairs, unit, injectivity of the
/// linear extension (additivity holds by construction).
Report verify_ring_rep(const RingRep& rep);

/// eta(aR) = im iota(a).
Subspace eta(const RingRep& rep, const BlockMatrix& a);

/// Well-definedness and lattice-homomorphism checks for eta: exhaustive over
/// Lat(R) for finite fields, otherwise on matrix units, their sums and
/// `samples` seeded random elements.
Report induce_lattice_rep(const RingRep& rep, std::uint64_t seed = 0, int samples = 50);

/// eta((aR)^perp) = eta(aR)^perp on the same generator set.
Report verify_ortho_rep(const RingRep& rep, std::uint64_t seed = 0, int samples = 50);

struct Claim1Verdict {
    bool adjoint_side = false;     // psi = phi*
    bool orthogonal_side = false;  // im(pi_U - phi) perp im(pi_W + psi)
    bool agree() const { return adjoint_side == orthogonal_side; }
};

/// Both sides evaluated independently. PreconditionFailed unless U perp W,
/// phi = pi_W phi pi_U and psi = pi_U psi pi_W.
Claim1Verdict claim1_test(const IPSpace& v, const Subspace& u, const Subspace& w, const Matrix& phi, const Matrix& psi);

/// Subspaces X, Y with <x, y> = 0 for all basis pairs.
bool subspaces_orthogonal(const IPSpace& v, const Subspace& x, const Subspace& y);

struct Cancellator {
    BlockMatrix omega_e;  // the y in fR with e - y in gR
    BlockMatrix c;        // omega(e) e
};

/// For projections e perp f with eR ~_{gR} fR, returns c = omega(e) e in fRe
/// and checks left cancellation of c on a spanning set of eRe.
/// NoSolution when gR is not a common complement; CancellationFailure when
/// cancellation fails.
Cancellator claim3_cancellator(const MatrixRing& r, const BlockMatrix& e, const BlockMatrix& f, const BlockMatrix& g);

struct AdjointRecovery {
    Report preconditions;  // ring rep, ortho rep, semiframe
    Report steps;          // failures here contradict the Main Lemma
    int generators_checked = 0;
    int random_checked = 0;
    bool star_representation() const { return preconditions.pass() && steps.pass(); }
};

/// Runs the adjoint-recovery argument as an algorithm: off-diagonal corners
/// through the orthogonality criterion, diagonal corners through a
/// cancellator, then reassembly a = sum e_j a e_i. The semiframe lives in the
/// subspace ortholattice of the ring's own form; its parts must be pairwise
/// orthogonal.
AdjointRecovery recover_adjoints(const RingRep& rep, const FrameWitness<Subspace>& semiframe, std::uint64_t seed = 0,
                                 int samples = 50);

/// Ring built from a genuine n-frame (n >= 3) of F^N over a prime field:
/// R0 = { P (A (x) I_k) P^{-1} : A in M_n(F) }.
struct CoordRing {
    Field field;
    std::size_t n = 0;   // frame order
    std::size_t k = 0;   // dim a_i
    Matrix p;            // columns: basis of a_0, then its transports
    Matrix p_inv;
    std::vector<Matrix> idempotents;  // pi_i
    std::vector<Matrix> transports;   // tau_{0i} as endomorphisms, i >= 1 (zero off a_0)

    Matrix element(const Matrix& a) const;
    /// The A with x = element(A), or nullopt when x is not in R0.
    std::optional<Matrix> coordinates(const Matrix& x) const;
    /// omega(S) = im element(generator(S)) for a subspace S of F^n.
    Subspace omega(const Subspace& s) const;
};

struct CoordReport {
    Report report;
    std::size_t lattice_size = 0;  // |Lat(R0)| when enumerated
    int sampled = 0;
};

CoordRing coordinatize(const FrameWitness<Subspace>& frame, const Field& field, std::size_t dim);
/// Checks closure on samples, omega(phi R0) = im phi on samples, and when
/// the lattice is given (or the field is finite) that omega is an order
/// isomorphism onto it.
CoordReport verify_coordinatization(const CoordRing& r0, const std::optional<std::vector<Subspace>>& lattice,
                                    std::uint64_t seed = 0, int samples = 30);

/// Ortholattice representation known on the canonical frame of Lat(M_n(F)):
/// images of E_ii R and of the axes (e_0 - e_i)R, optionally with a global
/// extension eta(U) = Q U used for the sample checks.
struct FrameEta {
    std::vector<Subspace> diagonal;  // eta(E_ii R)
    std::vector<Subspace> axes;      // eta((e_0 - e_i) R), i >= 1
    std::optional<Matrix> extension;
};

struct PipelineResult {
    std::optional<RingRep> iota;
    Report report;
    bool star_stage_run = false;
    std::optional<FrameWitness<Subspace>> semiframe;
};

/// Coordinatizes eta(frame), transports the matrix units, verifies the ring
/// embedding and eta(aR) = im iota(a); for star rings with a form on V also
/// builds a semiframe and runs recover_adjoints.
PipelineResult ring_embedding_from_ortho_rep(const MatrixRing& ring, const IPSpace& space, const FrameEta& eta_frame,
                                             std::uint64_t seed = 0, int samples = 50);

/// FrameEta of U -> Q U.
FrameEta frame_eta_from_matrix(const MatrixRing& ring, const Matrix& q);

}  // namespace orthocoord
