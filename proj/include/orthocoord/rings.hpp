#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "orthocoord/ipspace.hpp"
#include "orthocoord/lattice.hpp"
#include "orthocoord/ortho.hpp"

namespace orthocoord {

/// Finite ring given by full operation tables. Element 0 need not be zero;
/// zero() is located on validation.
class TableRing {
public:
    /// Exhaustively checks the ring axioms (and the involution axioms when a
    /// star map is given). Throws NotARing / NotInvolution / MalformedInput.
    static TableRing validate(std::vector<std::string> names, std::vector<std::vector<int>> add,
                              std::vector<std::vector<int>> mul, int one,
                              std::optional<std::vector<int>> star = std::nullopt);
    /// Skips the axiom check; for tables generated from structures that are
    /// rings by construction.
    static TableRing trusted(std::vector<std::string> names, std::vector<std::vector<int>> add,
                             std::vector<std::vector<int>> mul, int one,
                             std::optional<std::vector<int>> star = std::nullopt);

    int size() const { return static_cast<int>(names_.size()); }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int add(int a, int b) const { return add_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add_[a][neg_[b]]; }
    bool has_star() const { return star_.has_value(); }
    int star(int a) const;
    const std::string& name(int a) const { return names_[a]; }
    int index_of(const std::string& name) const;

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<int>>& add_table() const { return add_; }
    const std::vector<std::vector<int>>& mul_table() const { return mul_; }
    const std::optional<std::vector<int>>& star_table() const { return star_; }

private:
    TableRing() = default;
    void derive();
    std::vector<std::string> names_;
    std::vector<std::vector<int>> add_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> neg_;
    std::optional<std::vector<int>> star_;
    int zero_ = 0;
    int one_ = 0;
};

/// Block of a matrix descriptor: M_dim(field) with X* = J^{-1} X^{sigma T} J.
struct MatrixBlock {
    Field field;
    std::size_t dim = 0;
    Matrix gram;
    Involution sigma = Involution::Identity;

    IPSpace space() const { return IPSpace{field, dim, gram, sigma}; }
};

using BlockMatrix = std::vector<Matrix>;

/// Ring of block-diagonal matrices.
class MatrixRing {
public:
    MatrixRing(std::vector<MatrixBlock> blocks, bool has_star);

    const std::vector<MatrixBlock>& blocks() const { return blocks_; }
    bool has_star() const { return has_star_; }

    BlockMatrix zero() const;
    BlockMatrix one() const;
    BlockMatrix add(const BlockMatrix& a, const BlockMatrix& b) const;
    BlockMatrix sub(const BlockMatrix& a, const BlockMatrix& b) const;
    BlockMatrix mul(const BlockMatrix& a, const BlockMatrix& b) const;
    BlockMatrix star(const BlockMatrix& a) const;
    bool is_zero(const BlockMatrix& a) const;
    /// E_ij inside block `block`.
    BlockMatrix unit(std::size_t block, std::size_t i, std::size_t j) const;
    BlockMatrix random_element(std::mt19937_64& rng, long range = 3) const;
    /// Additive basis: all matrix units in all blocks.
    std::vector<BlockMatrix> matrix_units() const;
    /// Number of elements when every block is over a finite field; nullopt
    /// when some block is over Q or the count overflows.
    std::optional<std::uint64_t> cardinality() const;

private:
    std::vector<MatrixBlock> blocks_;
    bool has_star_;
};

std::string to_string(const BlockMatrix& a);

class StarRing {
public:
    StarRing(TableRing t) : carrier_(std::move(t)) {}
    StarRing(MatrixRing m) : carrier_(std::move(m)) {}

    bool is_table() const { return std::holds_alternative<TableRing>(carrier_); }
    const TableRing& table() const { return std::get<TableRing>(carrier_); }
    const MatrixRing& matrix() const { return std::get<MatrixRing>(carrier_); }
    bool has_star() const { return is_table() ? table().has_star() : matrix().has_star(); }

private:
    std::variant<TableRing, MatrixRing> carrier_;
};

/// Enumerates every element of a finite matrix ring into tables. The zero
/// matrix gets index 0. TooLarge beyond cap.
TableRing to_table(const MatrixRing& r, std::size_t cap = 4096);
/// Index of a block matrix inside to_table(r) (same enumeration order).
int table_index(const MatrixRing& r, const BlockMatrix& a);

// regularity

std::optional<int> regularity_witness(const TableRing& r, int a);
std::optional<BlockMatrix> regularity_witness(const MatrixRing& r, const BlockMatrix& a);
bool is_regular(const TableRing& r);

struct StarRegularVerdict {
    bool regular = false;
    bool star_regular = false;
    std::string witness;  // first failing element, if any
};

StarRegularVerdict is_star_regular(const TableRing& r);
/// Per block: anisotropy via validate_space, plus seeded sample checks of
/// r r* = 0 => r = 0 and of the quasi-inverse equation.
StarRegularVerdict is_star_regular(const MatrixRing& r, std::uint64_t seed = 0, int samples = 50);

/// The projection e = e* = e^2 with aR = eR. NotStarRegular when none
/// exists; InternalProofViolation when it is not unique.
int projection_generator(const TableRing& r, int a);
BlockMatrix projection_generator(const MatrixRing& r, const BlockMatrix& a);

/// For projections: eR <= fR iff f e = e.
bool ideal_leq(const TableRing& r, int e, int f);
bool ideal_leq(const MatrixRing& r, const BlockMatrix& e, const BlockMatrix& f);
/// For projections: e perp f iff f e = 0 = e f.
bool projections_orthogonal(const MatrixRing& r, const BlockMatrix& e, const BlockMatrix& f);

/// Right ideal aR as a membership vector.
std::vector<bool> right_ideal(const TableRing& r, int a);

/// Lat(R) with each element labelled by its ideal and a generator.
struct IdealLattice {
    FiniteLattice lattice;
    std::vector<std::vector<bool>> ideals;  // table rings: membership vectors
    std::vector<std::vector<Subspace>> column_spaces;  // matrix rings: per-block tags
    std::vector<std::string> labels;
    std::vector<int> generators;  // table rings: idempotent generator index
    std::vector<BlockMatrix> matrix_generators;  // matrix rings
};

IdealLattice lat_of(const TableRing& r);
IdealLattice lat_of(const MatrixRing& r);

struct OrthoIdealLattice {
    IdealLattice ideals;
    OrthoLattice ortho;
};

/// (aR)^perp = (1 - e)R for the projection e of a.
OrthoIdealLattice ortholat_of(const TableRing& r);
OrthoIdealLattice ortholat_of(const MatrixRing& r);

/// eRe with unit e. NotProjection unless e = e* = e^2.
TableRing corner(const TableRing& r, int e);
/// Descriptor form: End(im e) with the restricted form, block by block
/// (blocks where e vanishes are dropped).
MatrixRing corner(const MatrixRing& r, const BlockMatrix& e);

/// All two-sided ideals, as sums of principal ideals RaR.
std::vector<std::vector<bool>> ideals(const TableRing& r);
bool is_simple_ring(const TableRing& r);
/// Every ideal is closed under the involution (expected for star-regular R).
bool star_closed_ideals_check(const TableRing& r);
/// Two-sided ideals of a block ring: one per subset of blocks (bit i set =
/// block i included).
std::vector<std::uint32_t> ideals(const MatrixRing& r);

struct Fact3Report {
    bool isomorphic = false;
    int ideal_count = 0;
    int congruence_count = 0;
    std::vector<std::string> violations;
    /// theta_I for each ideal, as an index into the congruence lattice.
    std::vector<int> image;
};

/// Matches ideals I with congruences {(aR, bR) : aR + I = bR + I} of Lat(R)
/// and checks that the map is an order isomorphism onto Con(Lat(R)).
Fact3Report fact3_check(const TableRing& r);

}  // namespace orthocoord
