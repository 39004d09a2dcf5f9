#include "orthocoord/rings.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orthocoord/error.hpp"

namespace orthocoord {

// ---------------------------------------------------------------- tables

void TableRing::derive() {
    const int n = size();
    zero_ = -1;
    for (int z = 0; z < n && zero_ < 0; ++z) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = add_[z][x] == x && add_[x][z] == x;
        if (ok) zero_ = z;
    }
    if (zero_ < 0) throw Error(ErrorKind::NotARing, "no additive identity");
    neg_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (add_[a][b] == zero_) {
                neg_[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (neg_[a] < 0) throw Error(ErrorKind::NotARing, "no additive inverse for " + names_[a]);
}

TableRing TableRing::trusted(std::vector<std::string> names, std::vector<std::vector<int>> add,
                             std::vector<std::vector<int>> mul, int one, std::optional<std::vector<int>> star) {
    TableRing r;
    r.names_ = std::move(names);
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.one_ = one;
    r.star_ = std::move(star);
    r.derive();
    return r;
}

TableRing TableRing::validate(std::vector<std::string> names, std::vector<std::vector<int>> add,
                              std::vector<std::vector<int>> mul, int one, std::optional<std::vector<int>> star) {
    const int n = static_cast<int>(names.size());
    if (n == 0) throw Error(ErrorKind::MalformedInput, "ring needs at least one element");
    if (n > 4096) throw Error(ErrorKind::TooLarge, "table rings are capped at 4096 elements");
    auto check_table = [&](const std::vector<std::vector<int>>& t, const char* what) {
        if (static_cast<int>(t.size()) != n) throw Error(ErrorKind::MalformedInput, std::string(what) + " table has wrong size");
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::MalformedInput, std::string(what) + " row has wrong size");
            for (int x : row)
                if (x < 0 || x >= n) throw Error(ErrorKind::MalformedInput, std::string(what) + " entry out of range");
        }
    };
    check_table(add, "add");
    check_table(mul, "mul");
    if (one < 0 || one >= n) throw Error(ErrorKind::MalformedInput, "one out of range");
    if (star) {
        if (static_cast<int>(star->size()) != n) throw Error(ErrorKind::MalformedInput, "star has wrong size");
        for (int x : *star)
            if (x < 0 || x >= n) throw Error(ErrorKind::MalformedInput, "star entry out of range");
    }
    TableRing r = trusted(std::move(names), std::move(add), std::move(mul), one, std::move(star));
    auto fail = [&](const std::string& law, int a, int b, int c) {
        throw Error(ErrorKind::NotARing, law + " fails at (" + r.name(a) + ", " + r.name(b) + ", " + r.name(c) + ")");
    };
    for (int a = 0; a < n; ++a) {
        if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) fail("unit", a, r.one(), a);
        for (int b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) fail("additive commutativity", a, b, a);
            for (int c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) fail("additive associativity", a, b, c);
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) fail("associativity", a, b, c);
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) fail("left distributivity", a, b, c);
                if (r.mul(r.add(b, c), a) != r.add(r.mul(b, a), r.mul(c, a))) fail("right distributivity", a, b, c);
            }
        }
    }
    if (r.has_star()) {
        if (r.star(r.one()) != r.one()) throw Error(ErrorKind::NotInvolution, "1* != 1");
        for (int a = 0; a < n; ++a) {
            if (r.star(r.star(a)) != a) throw Error(ErrorKind::NotInvolution, "x** != x at " + r.name(a));
            for (int b = 0; b < n; ++b) {
                if (r.star(r.add(a, b)) != r.add(r.star(a), r.star(b)))
                    throw Error(ErrorKind::NotInvolution, "(x+y)* at " + r.name(a) + ", " + r.name(b));
                if (r.star(r.mul(a, b)) != r.mul(r.star(b), r.star(a)))
                    throw Error(ErrorKind::NotInvolution, "(xy)* at " + r.name(a) + ", " + r.name(b));
            }
        }
    }
    return r;
}

int TableRing::star(int a) const {
    if (!star_) throw Error(ErrorKind::PreconditionFailed, "ring has no involution");
    return (*star_)[a];
}

int TableRing::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(ErrorKind::MalformedInput, "unknown ring element '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

// ---------------------------------------------------------------- matrix descriptors

MatrixRing::MatrixRing(std::vector<MatrixBlock> blocks, bool has_star) : blocks_(std::move(blocks)), has_star_(has_star) {
    if (blocks_.empty()) throw Error(ErrorKind::MalformedInput, "matrix ring needs at least one block");
    for (const auto& b : blocks_) {
        if (b.dim == 0) throw Error(ErrorKind::MalformedInput, "block dimension must be positive");
        if (b.gram.rows() != b.dim || b.gram.cols() != b.dim)
            throw Error(ErrorKind::MalformedInput, "gram does not match block dimension");
        if (has_star_) {
            if (!b.gram.inverse()) throw Error(ErrorKind::NotInvertibleGram, b.gram.to_string());
            if (!b.field.supports(b.sigma)) throw Error(ErrorKind::Unsupported, "involution on " + b.field.name());
            if (b.gram.conj_transpose(b.sigma) != b.gram)
                throw Error(ErrorKind::NotInvolution, "gram must be hermitian for X -> J^-1 X^* J to be an involution");
        }
    }
}

BlockMatrix MatrixRing::zero() const {
    BlockMatrix out;
    for (const auto& b : blocks_) out.emplace_back(b.field, b.dim, b.dim);
    return out;
}

BlockMatrix MatrixRing::one() const {
    BlockMatrix out;
    for (const auto& b : blocks_) out.push_back(Matrix::identity(b.field, b.dim));
    return out;
}

BlockMatrix MatrixRing::add(const BlockMatrix& a, const BlockMatrix& b) const {
    BlockMatrix out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

BlockMatrix MatrixRing::sub(const BlockMatrix& a, const BlockMatrix& b) const {
    BlockMatrix out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

BlockMatrix MatrixRing::mul(const BlockMatrix& a, const BlockMatrix& b) const {
    BlockMatrix out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(a[i] * b[i]);
    return out;
}

BlockMatrix MatrixRing::star(const BlockMatrix& a) const {
    if (!has_star_) throw Error(ErrorKind::PreconditionFailed, "ring has no involution");
    BlockMatrix out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(adjoint(blocks_[i].space(), a[i]));
    return out;
}

bool MatrixRing::is_zero(const BlockMatrix& a) const {
    return std::all_of(a.begin(), a.end(), [](const Matrix& m) { return m.is_zero(); });
}

BlockMatrix MatrixRing::unit(std::size_t block, std::size_t i, std::size_t j) const {
    BlockMatrix out = zero();
    out.at(block) = Matrix::unit(blocks_[block].field, blocks_[block].dim, i, j);
    return out;
}

BlockMatrix MatrixRing::random_element(std::mt19937_64& rng, long range) const {
    BlockMatrix out;
    for (const auto& b : blocks_) out.push_back(random_matrix(b.field, b.dim, b.dim, rng, range));
    return out;
}

std::vector<BlockMatrix> MatrixRing::matrix_units() const {
    std::vector<BlockMatrix> out;
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        for (std::size_t i = 0; i < blocks_[k].dim; ++i)
            for (std::size_t j = 0; j < blocks_[k].dim; ++j) out.push_back(unit(k, i, j));
    return out;
}

std::optional<std::uint64_t> MatrixRing::cardinality() const {
    std::uint64_t total = 1;
    for (const auto& b : blocks_) {
        if (b.field.is_rational()) return std::nullopt;
        for (std::size_t e = 0; e < b.dim * b.dim; ++e) {
            total *= b.field.order();
            if (total > (1ull << 40)) return std::nullopt;
        }
    }
    return total;
}

std::string to_string(const BlockMatrix& a) {
    if (a.size() == 1) return a[0].to_string();
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += a[i].to_string();
    }
    return out + ")";
}

// Mixed-radix code over all entries (row-major, block by block); finite-field
// scalars are their own digit.
int table_index(const MatrixRing& r, const BlockMatrix& a) {
    std::uint64_t code = 0, radix = 1;
    for (std::size_t k = 0; k < r.blocks().size(); ++k) {
        const auto& b = r.blocks()[k];
        if (b.field.is_rational()) throw Error(ErrorKind::InfiniteLattice, "block over Q has no finite table");
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) {
                code += radix * a[k](i, j).get_num().get_ui();
                radix *= b.field.order();
            }
    }
    return static_cast<int>(code);
}

namespace {

BlockMatrix decode(const MatrixRing& r, std::uint64_t code) {
    BlockMatrix out = r.zero();
    for (std::size_t k = 0; k < r.blocks().size(); ++k) {
        const auto q = r.blocks()[k].field.order();
        for (std::size_t i = 0; i < r.blocks()[k].dim; ++i)
            for (std::size_t j = 0; j < r.blocks()[k].dim; ++j) {
                out[k](i, j) = static_cast<unsigned long>(code % q);
                code /= q;
            }
    }
    return out;
}

}  // namespace

TableRing to_table(const MatrixRing& r, std::size_t cap) {
    auto count = r.cardinality();
    if (!count) throw Error(ErrorKind::InfiniteLattice, "ring is infinite or too large to tabulate");
    if (*count > cap) throw Error(ErrorKind::TooLarge, "ring has " + std::to_string(*count) + " elements, cap is " + std::to_string(cap));
    const int n = static_cast<int>(*count);
    std::vector<BlockMatrix> elems;
    std::vector<std::string> names;
    for (int c = 0; c < n; ++c) {
        elems.push_back(decode(r, c));
        names.push_back(to_string(elems.back()));
    }
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[a][b] = table_index(r, r.add(elems[a], elems[b]));
            mul[a][b] = table_index(r, r.mul(elems[a], elems[b]));
        }
    std::optional<std::vector<int>> star;
    if (r.has_star()) {
        star.emplace(n);
        for (int a = 0; a < n; ++a) (*star)[a] = table_index(r, r.star(elems[a]));
    }
    return TableRing::trusted(std::move(names), std::move(add), std::move(mul), table_index(r, r.one()), std::move(star));
}

// ---------------------------------------------------------------- regularity

std::optional<int> regularity_witness(const TableRing& r, int a) {
    for (int x = 0; x < r.size(); ++x)
        if (r.mul(r.mul(a, x), a) == a) return x;
    return std::nullopt;
}

bool is_regular(const TableRing& r) {
    for (int a = 0; a < r.size(); ++a)
        if (!regularity_witness(r, a)) return false;
    return true;
}

std::optional<BlockMatrix> regularity_witness(const MatrixRing& r, const BlockMatrix& a) {
    BlockMatrix out;
    for (std::size_t k = 0; k < r.blocks().size(); ++k) {
        const Matrix& m = a[k];
        const std::size_t n = m.rows();
        // vec(a x a) = (a^T (x) a) vec(x)
        auto sol = kronecker(m.transpose(), m).solve(m.vectorized());
        if (!sol) return std::nullopt;
        Matrix x(m.field(), n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) x(i, j) = (*sol)(j * n + i, 0);
        if (m * x * m != m) throw Error(ErrorKind::InternalProofViolation, "quasi-inverse check failed");
        out.push_back(std::move(x));
    }
    return out;
}

StarRegularVerdict is_star_regular(const TableRing& r) {
    StarRegularVerdict v;
    for (int a = 0; a < r.size(); ++a)
        if (!regularity_witness(r, a)) {
            v.witness = r.name(a) + " has no quasi-inverse";
            return v;
        }
    v.regular = true;
    if (!r.has_star()) {
        v.witness = "no involution";
        return v;
    }
    for (int a = 0; a < r.size(); ++a)
        if (a != r.zero() && r.mul(a, r.star(a)) == r.zero()) {
            v.witness = "r r* = 0 for r = " + r.name(a);
            return v;
        }
    v.star_regular = true;
    return v;
}

StarRegularVerdict is_star_regular(const MatrixRing& r, std::uint64_t seed, int samples) {
    StarRegularVerdict v;
    v.regular = true;
    if (!r.has_star()) {
        v.witness = "no involution";
        return v;
    }
    for (std::size_t k = 0; k < r.blocks().size(); ++k) {
        const auto& b = r.blocks()[k];
        if (auto iso = isotropic_vector(b.space())) {
            // r = e_0 (J v)^{sigma T} satisfies r r* = 0
            BlockMatrix w = r.zero();
            Matrix jv = b.gram * *iso;
            Matrix e0(b.field, b.dim, 1);
            e0(0, 0) = b.field.one();
            w[k] = e0 * jv.conj_transpose(b.sigma);
            if (r.is_zero(w) || !r.is_zero(r.mul(w, r.star(w))))
                throw Error(ErrorKind::InternalProofViolation, "isotropic witness does not give r r* = 0");
            v.witness = "r r* = 0 for r = " + to_string(w);
            return v;
        }
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        BlockMatrix x = r.random_element(rng);
        if (!regularity_witness(r, x)) throw Error(ErrorKind::InternalProofViolation, "no quasi-inverse for " + to_string(x));
        if (!r.is_zero(x) && r.is_zero(r.mul(x, r.star(x))))
            throw Error(ErrorKind::InternalProofViolation, "anisotropic block but r r* = 0 for " + to_string(x));
    }
    v.star_regular = true;
    return v;
}

// ---------------------------------------------------------------- projections

std::vector<bool> right_ideal(const TableRing& r, int a) {
    std::vector<bool> in(r.size());
    for (int x = 0; x < r.size(); ++x) in[r.mul(a, x)] = true;
    return in;
}

int projection_generator(const TableRing& r, int a) {
    if (!r.has_star()) throw Error(ErrorKind::PreconditionFailed, "projections need an involution");
    auto target = right_ideal(r, a);
    std::optional<int> found;
    for (int e = 0; e < r.size(); ++e) {
        if (r.star(e) != e || r.mul(e, e) != e || right_ideal(r, e) != target) continue;
        if (found) throw Error(ErrorKind::NotStarRegular, "projections " + r.name(*found) + " and " + r.name(e) + " generate the same ideal");
        found = e;
    }
    if (!found) throw Error(ErrorKind::NotStarRegular, "no projection generates " + r.name(a) + "R");
    return *found;
}

BlockMatrix projection_generator(const MatrixRing& r, const BlockMatrix& a) {
    if (!r.has_star()) throw Error(ErrorKind::PreconditionFailed, "projections need an involution");
    BlockMatrix e;
    for (std::size_t k = 0; k < r.blocks().size(); ++k) {
        auto u = Subspace::column_space(a[k]);
        Matrix p(r.blocks()[k].field, r.blocks()[k].dim, r.blocks()[k].dim);
        try {
            p = ortho_projection(r.blocks()[k].space(), u);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::NotClosed) throw;
            throw Error(ErrorKind::NotStarRegular, "no projection onto " + u.to_string());
        }
        e.push_back(std::move(p));
    }
    if (r.mul(e, e) != e || r.star(e) != e)
        throw Error(ErrorKind::InternalProofViolation, "Gram projector is not a projection: " + to_string(e));
    for (std::size_t k = 0; k < e.size(); ++k)
        if (Subspace::column_space(e[k]) != Subspace::column_space(a[k]))
            throw Error(ErrorKind::InternalProofViolation, "eR != aR for a = " + to_string(a));
    return e;
}

bool ideal_leq(const TableRing& r, int e, int f) { return r.mul(f, e) == e; }

bool ideal_leq(const MatrixRing& r, const BlockMatrix& e, const BlockMatrix& f) { return r.mul(f, e) == e; }

bool projections_orthogonal(const MatrixRing& r, const BlockMatrix& e, const BlockMatrix& f) {
    return r.is_zero(r.mul(f, e)) && r.is_zero(r.mul(e, f));
}

// ---------------------------------------------------------------- Lat(R)

namespace {

std::string set_label(const TableRing& r, const std::vector<bool>& s) {
    std::string out = "{";
    bool first = true;
    for (int x = 0; x < r.size(); ++x)
        if (s[x]) {
            if (!first) out += ",";
            out += r.name(x);
            first = false;
        }
    return out + "}";
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

void require_complemented_modular(const FiniteLattice& l) {
    if (!is_complemented(l)) throw Error(ErrorKind::InternalProofViolation, "Lat(R) not complemented");
    auto mod = is_modular(l);
    if (!mod.modular) throw Error(ErrorKind::InternalProofViolation, "Lat(R) not modular");
}

}  // namespace

IdealLattice lat_of(const TableRing& r) {
    IdealLattice out;
    std::map<std::vector<bool>, int> index;
    for (int a = 0; a < r.size(); ++a) {
        auto ideal = right_ideal(r, a);
        if (index.count(ideal)) continue;
        // least-index idempotent generator
        int gen = -1;
        for (int e = 0; e < r.size() && gen < 0; ++e)
            if (r.mul(e, e) == e && right_ideal(r, e) == ideal) gen = e;
        if (gen < 0) throw Error(ErrorKind::NotRegular, r.name(a) + "R has no idempotent generator");
        index[ideal] = static_cast<int>(out.ideals.size());
        out.ideals.push_back(ideal);
        out.generators.push_back(gen);
        out.labels.push_back(r.name(gen) + "R");
    }
    const int n = static_cast<int>(out.ideals.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) leq[i][j] = subset(out.ideals[i], out.ideals[j]);
    out.lattice = FiniteLattice::from_order(std::move(leq));
    require_complemented_modular(out.lattice);
    return out;
}

IdealLattice lat_of(const MatrixRing& r) {
    std::vector<std::vector<Subspace>> per_block;
    for (const auto& b : r.blocks()) {
        if (b.field.is_rational()) {
            if (b.dim >= 2) throw Error(ErrorKind::InfiniteLattice, "Lat(M_" + std::to_string(b.dim) + "(Q)) is infinite");
            per_block.push_back({Subspace(b.field, b.dim), Subspace::whole(b.field, b.dim)});
        } else {
            per_block.push_back(enumerate_subspaces(b.field, b.dim));
        }
    }
    IdealLattice out;
    std::size_t total = 1;
    for (const auto& subs : per_block) total *= subs.size();
    // first block most significant, as in product()
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Subspace> tag(per_block.size(), Subspace(r.blocks()[0].field, 0));
        std::size_t c = code;
        for (std::size_t k = per_block.size(); k-- > 0;) {
            tag[k] = per_block[k][c % per_block[k].size()];
            c /= per_block[k].size();
        }
        BlockMatrix gen;
        std::string label;
        for (std::size_t k = 0; k < tag.size(); ++k) {
            gen.push_back(generator_matrix(tag[k]));
            if (k) label += " x ";
            label += tag[k].to_string();
        }
        out.column_spaces.push_back(std::move(tag));
        out.matrix_generators.push_back(std::move(gen));
        out.labels.push_back(std::move(label));
    }
    const int n = static_cast<int>(out.column_spaces.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool ok = true;
            for (std::size_t k = 0; k < per_block.size() && ok; ++k)
                ok = out.column_spaces[i][k].leq(out.column_spaces[j][k]);
            leq[i][j] = ok;
        }
    out.lattice = FiniteLattice::from_order(std::move(leq));
    require_complemented_modular(out.lattice);
    return out;
}

OrthoIdealLattice ortholat_of(const TableRing& r) {
    auto lat = lat_of(r);
    std::map<std::vector<bool>, int> index;
    for (std::size_t i = 0; i < lat.ideals.size(); ++i) index[lat.ideals[i]] = static_cast<int>(i);
    std::vector<Elem> perp;
    for (int gen : lat.generators) {
        int e = projection_generator(r, gen);
        perp.push_back(index.at(right_ideal(r, r.sub(r.one(), e))));
    }
    auto ortho = OrthoLattice::validate(lat.lattice, std::move(perp));
    return {std::move(lat), std::move(ortho)};
}

OrthoIdealLattice ortholat_of(const MatrixRing& r) {
    auto lat = lat_of(r);
    std::map<std::vector<Subspace>, int> index;
    for (std::size_t i = 0; i < lat.column_spaces.size(); ++i) index[lat.column_spaces[i]] = static_cast<int>(i);
    std::vector<Elem> perp;
    for (const auto& gen : lat.matrix_generators) {
        auto e = projection_generator(r, gen);
        auto comp = r.sub(r.one(), e);
        std::vector<Subspace> tag;
        for (const auto& m : comp) tag.push_back(Subspace::column_space(m));
        perp.push_back(index.at(tag));
    }
    auto ortho = OrthoLattice::validate(lat.lattice, std::move(perp));
    return {std::move(lat), std::move(ortho)};
}

// ---------------------------------------------------------------- corners

TableRing corner(const TableRing& r, int e) {
    if (r.mul(e, e) != e || (r.has_star() && r.star(e) != e))
        throw Error(ErrorKind::NotProjection, r.name(e) + " is not a projection");
    std::set<int> carrier;
    for (int a = 0; a < r.size(); ++a) carrier.insert(r.mul(r.mul(e, a), e));
    std::vector<int> elems(carrier.begin(), carrier.end());
    std::map<int, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<std::string> names;
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        names.push_back(r.name(elems[i]));
        for (int j = 0; j < n; ++j) {
            add[i][j] = index.at(r.add(elems[i], elems[j]));
            mul[i][j] = index.at(r.mul(elems[i], elems[j]));
        }
    }
    std::optional<std::vector<int>> star;
    if (r.has_star()) {
        star.emplace(n);
        for (int i = 0; i < n; ++i) (*star)[i] = index.at(r.star(elems[i]));
    }
    return TableRing::validate(std::move(names), std::move(add), std::move(mul), index.at(e), std::move(star));
}

MatrixRing corner(const MatrixRing& r, const BlockMatrix& e) {
    if (r.mul(e, e) != e || (r.has_star() && r.star(e) != e))
        throw Error(ErrorKind::NotProjection, to_string(e) + " is not a projection");
    std::vector<MatrixBlock> blocks;
    for (std::size_t k = 0; k < r.blocks().size(); ++k) {
        const auto& b = r.blocks()[k];
        auto u = Subspace::column_space(e[k]);
        if (u.is_zero()) continue;
        Matrix basis = u.basis_columns();
        Matrix gram = r.has_star() ? basis.conj_transpose(b.sigma) * b.gram * basis : Matrix::identity(b.field, u.dim());
        blocks.push_back({b.field, u.dim(), gram, b.sigma});
    }
    if (blocks.empty()) throw Error(ErrorKind::PreconditionFailed, "corner at 0 is the zero ring");
    return MatrixRing(std::move(blocks), r.has_star());
}

// ---------------------------------------------------------------- ideals

namespace {

std::vector<bool> additive_closure(const TableRing& r, std::vector<bool> s) {
    s[r.zero()] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> members;
        for (int x = 0; x < r.size(); ++x)
            if (s[x]) members.push_back(x);
        for (int x : members)
            for (int y : members) {
                int z = r.add(x, y);
                if (!s[z]) {
                    s[z] = true;
                    grew = true;
                }
            }
    }
    return s;
}

std::vector<bool> ideal_sum(const TableRing& r, const std::vector<bool>& a, const std::vector<bool>& b) {
    std::vector<bool> s(r.size());
    for (int x = 0; x < r.size(); ++x)
        if (a[x])
            for (int y = 0; y < r.size(); ++y)
                if (b[y]) s[r.add(x, y)] = true;
    return s;
}

bool ideal_less(const std::vector<bool>& a, const std::vector<bool>& b) {
    auto ca = std::count(a.begin(), a.end(), true), cb = std::count(b.begin(), b.end(), true);
    if (ca != cb) return ca < cb;
    return a > b;
}

}  // namespace

std::vector<std::vector<bool>> ideals(const TableRing& r) {
    std::set<std::vector<bool>> found;
    std::vector<std::vector<bool>> principal;
    for (int a = 0; a < r.size(); ++a) {
        std::vector<bool> s(r.size());
        for (int x = 0; x < r.size(); ++x)
            for (int y = 0; y < r.size(); ++y) s[r.mul(r.mul(x, a), y)] = true;
        auto ideal = additive_closure(r, std::move(s));
        if (found.insert(ideal).second) principal.push_back(ideal);
    }
    std::vector<std::vector<bool>> all(found.begin(), found.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (const auto& p : principal) {
            auto s = ideal_sum(r, all[i], p);
            if (found.insert(s).second) all.push_back(s);
        }
    std::sort(all.begin(), all.end(), ideal_less);
    return all;
}

bool is_simple_ring(const TableRing& r) { return r.size() > 1 && ideals(r).size() == 2; }

bool star_closed_ideals_check(const TableRing& r) {
    for (const auto& ideal : ideals(r))
        for (int x = 0; x < r.size(); ++x)
            if (ideal[x] && !ideal[r.star(x)]) return false;
    return true;
}

std::vector<std::uint32_t> ideals(const MatrixRing& r) {
    if (r.blocks().size() > 16) throw Error(ErrorKind::TooLarge, "too many blocks");
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << r.blocks().size()); ++mask) out.push_back(mask);
    std::stable_sort(out.begin(), out.end(),
                     [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    return out;
}

// ---------------------------------------------------------------- Fact 3

Fact3Report fact3_check(const TableRing& r) {
    Fact3Report report;
    auto lat = lat_of(r);
    auto cons = congruences(lat.lattice);
    auto ids = ideals(r);
    report.ideal_count = static_cast<int>(ids.size());
    report.congruence_count = static_cast<int>(cons.items.size());
    const int n = lat.lattice.size();
    std::vector<std::optional<Congruence>> thetas;
    for (const auto& ideal : ids) {
        std::vector<std::vector<bool>> shifted;
        for (int x = 0; x < n; ++x) shifted.push_back(ideal_sum(r, lat.ideals[x], ideal));
        std::vector<Elem> labels(n);
        for (int x = 0; x < n; ++x) {
            labels[x] = x;
            for (int y = 0; y < x; ++y)
                if (shifted[y] == shifted[x]) {
                    labels[x] = labels[y];
                    break;
                }
        }
        Congruence theta(labels);
        if (!is_congruence(lat.lattice, theta)) {
            report.violations.push_back("theta_I not a congruence for I = " + set_label(r, ideal));
            report.image.push_back(-1);
            thetas.push_back(std::nullopt);
            continue;
        }
        auto it = std::find(cons.items.begin(), cons.items.end(), theta);
        int idx = it == cons.items.end() ? -1 : static_cast<int>(it - cons.items.begin());
        if (idx < 0) report.violations.push_back("theta_I missing from Con(Lat R) for I = " + set_label(r, ideal));
        report.image.push_back(idx);
        thetas.push_back(theta);
    }
    std::set<int> hit;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (report.image[i] < 0) continue;
        if (!hit.insert(report.image[i]).second) report.violations.push_back("two ideals share theta = " + std::to_string(report.image[i]));
    }
    for (int c = 0; c < report.congruence_count; ++c)
        if (!hit.count(c)) report.violations.push_back("congruence " + std::to_string(c) + " not of the form theta_I");
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < ids.size(); ++j) {
            if (!thetas[i] || !thetas[j]) continue;
            bool inc = subset(ids[i], ids[j]);
            bool ref = thetas[i]->refines(*thetas[j]);
            if (inc != ref)
                report.violations.push_back("order mismatch between I = " + set_label(r, ids[i]) + " and J = " + set_label(r, ids[j]));
        }
    report.isomorphic = report.violations.empty();
    return report;
}

}  // namespace orthocoord
