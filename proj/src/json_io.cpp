#include "orthocoord/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "orthocoord/error.hpp"

namespace orthocoord::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key '") + key + "'");
    return *it;
}

// Runs f, turning nlohmann type/range errors into MalformedInput tagged with `where`.
template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        bad(where + ": " + e.what());
    }
}

std::size_t as_size(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

std::vector<std::vector<Scalar>> rows_of(const Field& f, const Json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) bad("matrix row must be an array");
        std::vector<Scalar> row;
        for (const auto& x : r) row.push_back(scalar_from_json(f, x));
        if (!rows.empty() && row.size() != rows.front().size()) bad("ragged matrix");
        rows.push_back(std::move(row));
    }
    return rows;
}

// Accepts "E_12" (single-digit indices) and "E_1_2".
std::optional<std::pair<std::size_t, std::size_t>> parse_unit_key(const std::string& key, std::size_t n) {
    if (key.size() < 4 || key.rfind("E_", 0) != 0) return std::nullopt;
    std::string rest = key.substr(2);
    std::size_t i = 0, j = 0;
    try {
        auto sep = rest.find('_');
        if (sep != std::string::npos) {
            i = std::stoul(rest.substr(0, sep));
            j = std::stoul(rest.substr(sep + 1));
        } else if (rest.size() == 2 && std::isdigit(static_cast<unsigned char>(rest[0])) &&
                   std::isdigit(static_cast<unsigned char>(rest[1]))) {
            i = static_cast<std::size_t>(rest[0] - '0');
            j = static_cast<std::size_t>(rest[1] - '0');
        } else {
            return std::nullopt;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (i < 1 || j < 1 || i > n || j > n) return std::nullopt;
    return std::make_pair(i - 1, j - 1);
}

std::string axis_key(std::size_t i) { return unit_key(0, 0) + "-" + unit_key(i, 0); }

}  // namespace

std::string unit_key(std::size_t i, std::size_t j) {
    if (i < 9 && j < 9) return "E_" + std::to_string(i + 1) + std::to_string(j + 1);
    return "E_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(origin + ": " + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

// ---------------------------------------------------------------- scalars

Field field_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return Field::rationals();
        bad("field must be \"Q\" or {\"p\", \"k\"}");
    }
    return guarded("field", [&] {
        auto p = need(j, "p").get<std::uint32_t>();
        auto k = j.contains("k") ? j["k"].get<std::uint32_t>() : 1u;
        return Field::galois(p, k);
    });
}

Json to_json(const Field& f) {
    if (f.is_rational()) return "Q";
    return Json{{"p", f.characteristic()}, {"k", f.degree()}};
}

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.parse(std::to_string(j.get<long long>()));
    bad("scalar must be a \"p/q\" string or an integer");
}

Json scalar_to_json(const Field& f, const Scalar& s) { return f.format(s); }

Matrix matrix_from_json(const Field& f, const Json& j) {
    auto rows = rows_of(f, j);
    if (rows.empty()) bad("empty matrix");
    return Matrix::from_rows(f, rows);
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().format(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Involution involution_from_json(const Json& j) {
    if (!j.is_string()) bad("sigma must be a string");
    auto s = j.get<std::string>();
    if (s == "id" || s == "identity") return Involution::Identity;
    if (s == "frobenius") return Involution::Frobenius;
    bad("unknown sigma '" + s + "'");
}

// ---------------------------------------------------------------- lattices

FiniteLattice lattice_from_json(const Json& j) {
    return guarded("lattice", [&] {
        const auto n = static_cast<int>(as_size(j, "n"));
        if (j.contains("leq")) {
            auto leq = j["leq"].get<std::vector<std::vector<bool>>>();
            if (static_cast<int>(leq.size()) != n) bad("'leq' must be n x n");
            for (auto& r : leq)
                if (static_cast<int>(r.size()) != n) bad("'leq' must be n x n");
            return FiniteLattice::from_order(std::move(leq));
        }
        auto covers = need(j, "covers").get<std::vector<std::pair<int, int>>>();
        for (auto [lo, hi] : covers)
            if (lo < 0 || hi < 0 || lo >= n || hi >= n) bad("cover index out of range");
        return FiniteLattice::from_covers(n, covers);
    });
}

Json to_json(const FiniteLattice& l) {
    Json covers = Json::array();
    for (auto [lo, hi] : l.covers()) covers.push_back({lo, hi});
    return Json{{"n", l.size()}, {"covers", covers}};
}

OrthoLattice ortholattice_from_json(const Json& j) {
    auto base = lattice_from_json(j);
    auto perp = guarded("perp", [&] { return need(j, "perp").get<std::vector<Elem>>(); });
    if (static_cast<int>(perp.size()) != base.size()) bad("'perp' must list one entry per element");
    for (auto p : perp)
        if (p < 0 || p >= base.size()) bad("perp index out of range");
    return OrthoLattice::validate(std::move(base), std::move(perp));
}

Json to_json(const OrthoLattice& l) {
    Json j = to_json(l.base());
    j["perp"] = l.perp_table();
    return j;
}

// ---------------------------------------------------------------- spaces

Subspace subspace_from_json(const Field& f, std::size_t dim, const Json& j) {
    const Json& rows = j.is_object() ? need(j, "basis") : j;
    auto vecs = rows_of(f, rows);
    for (auto& v : vecs)
        if (v.size() != dim) bad("basis vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
    if (vecs.empty()) return Subspace(f, dim);
    return Subspace::span_of(f, vecs);
}

Json to_json(const Subspace& s) {
    Json rows = Json::array();
    const Matrix& b = s.basis();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(s.field().format(b(i, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"basis", rows}};
}

IPSpace space_from_json(const Json& j, bool validate) {
    Field f = field_from_json(need(j, "field"));
    std::size_t dim = as_size(j, "dim");
    if (dim == 0) bad("'dim' must be positive");
    Matrix gram = j.contains("gram") ? matrix_from_json(f, j["gram"]) : Matrix::identity(f, dim);
    Involution sigma = j.contains("sigma") ? involution_from_json(j["sigma"]) : Involution::Identity;
    if (gram.rows() != dim || gram.cols() != dim) bad("'gram' must be dim x dim");
    if (!validate) return IPSpace{f, dim, gram, sigma};
    return validate_space(f, dim, gram, sigma);
}

Json to_json(const IPSpace& s) {
    return Json{{"field", to_json(s.field)}, {"dim", s.dim}, {"gram", to_json(s.gram)}, {"sigma", to_string(s.sigma)}};
}

// ---------------------------------------------------------------- frames

namespace {

template <class E, class Read>
FrameWitness<E> frame_common(const Json& j, Read read) {
    FrameWitness<E> phi;
    phi.kind = parse_frame_kind(guarded("kind", [&] { return need(j, "kind").get<std::string>(); }));
    guarded("frame", [&] {
        phi.n = need(j, "n").get<int>();
        phi.m = j.contains("m") ? j["m"].get<int>() : phi.n;
        return 0;
    });
    auto list = [&](const char* key, std::vector<E>& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_array()) bad(std::string("'") + key + "' must be an array");
        for (const auto& x : j[key]) out.push_back(read(x));
    };
    list("a", phi.a);
    list("a0", phi.a0);
    list("b", phi.b);
    list("axes", phi.axes);
    return phi;
}

template <class E, class Write>
Json frame_out(const FrameWitness<E>& phi, Write write) {
    Json j{{"kind", to_string(phi.kind)}, {"n", phi.n}, {"m", phi.m}};
    auto list = [&](const char* key, const std::vector<E>& xs) {
        Json arr = Json::array();
        for (const auto& x : xs) arr.push_back(write(x));
        j[key] = arr;
    };
    list("a", phi.a);
    list("a0", phi.a0);
    list("b", phi.b);
    list("axes", phi.axes);
    return j;
}

}  // namespace

FrameWitness<Elem> frame_from_json(const Json& j) {
    return frame_common<Elem>(j, [](const Json& x) {
        if (!x.is_number_integer()) bad("frame entries must be element indices");
        return x.get<Elem>();
    });
}

FrameWitness<Subspace> frame_from_json(const Json& j, const Field& f, std::size_t dim) {
    return frame_common<Subspace>(j, [&](const Json& x) { return subspace_from_json(f, dim, x); });
}

Json to_json(const FrameWitness<Elem>& phi) {
    return frame_out(phi, [](Elem x) { return Json(x); });
}

Json to_json(const FrameWitness<Subspace>& phi) {
    return frame_out(phi, [](const Subspace& s) { return to_json(s); });
}

// ---------------------------------------------------------------- rings

RingDoc ring_from_json(const Json& j) {
    if (j.is_object() && j.contains("elements")) {
        return guarded("table ring", [&]() -> RingDoc {
            auto names = j["elements"].get<std::vector<std::string>>();
            auto add = need(j, "add").get<std::vector<std::vector<int>>>();
            auto mul = need(j, "mul").get<std::vector<std::vector<int>>>();
            std::optional<std::vector<int>> star;
            if (j.contains("star")) star = j["star"].get<std::vector<int>>();
            int one = need(j, "one").get<int>();
            return TableRing::validate(std::move(names), std::move(add), std::move(mul), one, std::move(star));
        });
    }
    const Json& blocks = need(j, "blocks");
    if (!blocks.is_array() || blocks.empty()) bad("'blocks' must be a non-empty array");
    std::vector<MatrixBlock> out;
    for (const auto& b : blocks) {
        Field f = field_from_json(need(b, "field"));
        std::size_t dim = as_size(b, "dim");
        if (dim == 0) bad("block 'dim' must be positive");
        Matrix gram = b.contains("gram") ? matrix_from_json(f, b["gram"]) : Matrix::identity(f, dim);
        if (gram.rows() != dim || gram.cols() != dim) bad("block 'gram' must be dim x dim");
        Involution sigma = b.contains("sigma") ? involution_from_json(b["sigma"]) : Involution::Identity;
        out.push_back({f, dim, gram, sigma});
    }
    bool star = guarded("star", [&] { return j.contains("star") ? j["star"].get<bool>() : true; });
    return MatrixRing(std::move(out), star);
}

Json to_json(const TableRing& r) {
    Json j{{"elements", r.names()}, {"add", r.add_table()}, {"mul", r.mul_table()}};
    if (r.star_table()) j["star"] = *r.star_table();
    j["one"] = r.one();
    return j;
}

Json to_json(const MatrixRing& r) {
    Json blocks = Json::array();
    for (const auto& b : r.blocks())
        blocks.push_back(Json{{"field", to_json(b.field)}, {"dim", b.dim}, {"gram", to_json(b.gram)},
                              {"sigma", to_string(b.sigma)}});
    return Json{{"blocks", blocks}, {"star", r.has_star()}};
}

// ---------------------------------------------------------------- representations

namespace {

MatrixRing matrix_ring_of(const Json& j) {
    auto doc = ring_from_json(need(j, "ring"));
    if (!std::holds_alternative<MatrixRing>(doc)) bad("representations need a matrix ring descriptor");
    return std::get<MatrixRing>(std::move(doc));
}

}  // namespace

RingRep rep_from_json(const Json& j) {
    MatrixRing ring = matrix_ring_of(j);
    if (ring.blocks().size() != 1) bad("representations need a single-block ring");
    IPSpace space = space_from_json(need(j, "space"), ring.has_star());
    const Json& images = need(j, "images");
    if (!images.is_object()) bad("'images' must be an object");
    const std::size_t n = ring.blocks().front().dim;
    std::vector<std::optional<Matrix>> got(n * n);
    for (auto it = images.begin(); it != images.end(); ++it) {
        auto idx = parse_unit_key(it.key(), n);
        if (!idx) bad("unknown image key '" + it.key() + "'");
        got[idx->first * n + idx->second] = matrix_from_json(space.field, it.value());
    }
    std::vector<Matrix> units;
    for (std::size_t k = 0; k < got.size(); ++k) {
        if (!got[k]) bad("missing image of " + unit_key(k / n, k % n));
        units.push_back(*got[k]);
    }
    return make_ring_rep(std::move(ring), std::move(space), std::move(units));
}

Json to_json(const RingRep& rep) {
    Json images = Json::object();
    for (std::size_t i = 0; i < rep.n(); ++i)
        for (std::size_t j = 0; j < rep.n(); ++j) images[unit_key(i, j)] = to_json(rep.unit_image(i, j));
    return Json{{"ring", to_json(rep.ring)}, {"space", to_json(rep.space)}, {"images", images}};
}

EtaDoc eta_from_json(const Json& j) {
    MatrixRing ring = matrix_ring_of(j);
    if (ring.blocks().size() != 1) bad("the pipeline needs a single-block ring");
    IPSpace space = space_from_json(need(j, "space"), ring.has_star());
    const std::size_t n = ring.blocks().front().dim;
    const Json& e = need(j, "eta");
    FrameEta eta;
    for (std::size_t i = 0; i < n; ++i) {
        auto key = unit_key(i, i);
        if (!e.contains(key)) bad("'eta' is missing '" + key + "'");
        eta.diagonal.push_back(subspace_from_json(space.field, space.dim, e[key]));
    }
    for (std::size_t i = 1; i < n; ++i) {
        auto key = axis_key(i);
        if (!e.contains(key)) bad("'eta' is missing '" + key + "'");
        eta.axes.push_back(subspace_from_json(space.field, space.dim, e[key]));
    }
    if (j.contains("extension")) eta.extension = matrix_from_json(space.field, j["extension"]);
    return EtaDoc{std::move(ring), std::move(space), std::move(eta)};
}

Json to_json(const MatrixRing& ring, const IPSpace& space, const FrameEta& eta) {
    Json e = Json::object();
    for (std::size_t i = 0; i < eta.diagonal.size(); ++i) e[unit_key(i, i)] = to_json(eta.diagonal[i]);
    for (std::size_t i = 0; i < eta.axes.size(); ++i) e[axis_key(i + 1)] = to_json(eta.axes[i]);
    Json j{{"ring", to_json(ring)}, {"space", to_json(space)}, {"eta", e}};
    if (eta.extension) j["extension"] = to_json(*eta.extension);
    return j;
}

Json to_json(const Report& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(Json{{"claim", x.claim}, {"witness", x.witness}});
    return Json{{"verdict", r.pass() ? "pass" : "fail"}, {"violations", v}};
}

}  // namespace orthocoord::io
