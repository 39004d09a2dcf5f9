#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "orthocoord/frames.hpp"
#include "orthocoord/ipspace.hpp"
#include "orthocoord/ortho.hpp"
#include "orthocoord/rep.hpp"
#include "orthocoord/rings.hpp"

namespace orthocoord::io {

/// Insertion-ordered so emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become MalformedInput with the byte offset.
Json parse_text(const std::string& text, const std::string& origin = "<input>");
Json read_file(const std::string& path);

// Every reader throws MalformedInput naming the offending key.

Field field_from_json(const Json& j);  // "Q" or {"p": p, "k": k}
Json to_json(const Field& f);
Scalar scalar_from_json(const Field& f, const Json& j);  // "p/q" string or integer
Json scalar_to_json(const Field& f, const Scalar& s);
Matrix matrix_from_json(const Field& f, const Json& j);  // array of rows
Json to_json(const Matrix& m);
Involution involution_from_json(const Json& j);  // "id" | "frobenius"

/// {"n": int, "covers": [[lo, hi], ...]} or {"n": int, "leq": [[bool]]}.
FiniteLattice lattice_from_json(const Json& j);
Json to_json(const FiniteLattice& l);
/// Lattice JSON plus "perp": [int, ...]; validated.
OrthoLattice ortholattice_from_json(const Json& j);
Json to_json(const OrthoLattice& l);

/// {"basis": [[..], ...]}; an empty basis is the zero subspace.
Subspace subspace_from_json(const Field& f, std::size_t dim, const Json& j);
Json to_json(const Subspace& s);

/// {"field", "dim", "gram"?, "sigma"?}; gram defaults to the identity.
/// validate = false skips the form checks (bare vector spaces).
IPSpace space_from_json(const Json& j, bool validate = true);
Json to_json(const IPSpace& s);

FrameWitness<Elem> frame_from_json(const Json& j);
FrameWitness<Subspace> frame_from_json(const Json& j, const Field& f, std::size_t dim);
Json to_json(const FrameWitness<Elem>& phi);
Json to_json(const FrameWitness<Subspace>& phi);

/// Table ring ({"elements", "add", "mul", "star"?, "one"}) or matrix ring
/// ({"blocks": [...], "star"?: bool, default true}).
using RingDoc = std::variant<TableRing, MatrixRing>;
RingDoc ring_from_json(const Json& j);
Json to_json(const TableRing& r);
Json to_json(const MatrixRing& r);

/// {"ring", "space", "images": {"E_11": matrix, ...}} with 1-based unit
/// names; "E_1_1" is accepted as well.
RingRep rep_from_json(const Json& j);
Json to_json(const RingRep& rep);

/// {"ring", "space", "eta": {"E_11": subspace, ..., "E_11-E_21": subspace, ...},
/// "extension"?: matrix}: images of E_ii R and of the axis ideals (E_11 - E_i1)R.
struct EtaDoc {
    MatrixRing ring;
    IPSpace space;
    FrameEta eta;
};
EtaDoc eta_from_json(const Json& j);
Json to_json(const MatrixRing& ring, const IPSpace& space, const FrameEta& eta);

Json to_json(const Report& r);
/// Name of E_ij with 0-based indices, rendered 1-based.
std::string unit_key(std::size_t i, std::size_t j);

}  // namespace orthocoord::io
