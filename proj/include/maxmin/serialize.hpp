#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "maxmin/arrangement.hpp"
#include "maxmin/extension.hpp"
#include "maxmin/lattice.hpp"
#include "maxmin/pwl.hpp"

namespace maxmin::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1.0";

enum class PayloadKind { Components, Polyhedron, Pwl, Lattice, Complex, Relu, Boundary };

const char* to_string(PayloadKind kind);
PayloadKind kind_from_string(const std::string& s);

// Rationals are always strings "p" or "p/q"; plain JSON integers are
// accepted on input.
Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const AffineFunc& g);
Json to_json(const Polyhedron& p);
Json to_json(const ComponentSet& c);
Json to_json(const PwlFunction& f);
Json to_json(const LatticePolynomial& p);
Json to_json(const CellComplex& c);
Json to_json(const ReluNet1& net);
Json to_json(const BoundaryPwl& b);
Json to_json(const Hyperplane& h);

// All readers throw Error(ErrorKind::Parse) on malformed input.
Rational rational_from_json(const Json& j);
Point point_from_json(const Json& j);
AffineFunc affine_from_json(const Json& j);
Polyhedron polyhedron_from_json(const Json& j);
ComponentSet components_from_json(const Json& j);
PwlFunction pwl_from_json(const Json& j);
LatticePolynomial lattice_from_json(const Json& j);
CellComplex complex_from_json(const Json& j);
ReluNet1 relu_from_json(const Json& j);
BoundaryPwl boundary_from_json(const Json& j);

/// {"format_version", "kind", "payload"}
Json wrap(PayloadKind kind, Json payload);

struct Document {
  PayloadKind kind;
  Json payload;
  Json extra;  ///< any sibling keys of the manifest (e.g. diagnostics)
};

/// Accepts a manifest or a bare payload; bare payloads are classified by
/// their keys.
Document open_document(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace maxmin::io
