#include "maxmin/serialize.hpp"

#include <fstream>
#include <sstream>

#include "maxmin/error.hpp"

namespace maxmin::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) fail(std::string("field '") + key + "' must be an array");
  return a;
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail("expected a nonnegative integer index");
  return j.get<std::size_t>();
}

std::size_t dim_from_json(const Json& j) {
  const std::size_t d = index_from_json(field(j, "d"));
  if (d == 0) fail("dimension must be positive");
  return d;
}

std::vector<Rational> vector_from_json(const Json& j, std::size_t expected) {
  Point p = point_from_json(j);
  if (p.size() != expected)
    fail("vector of length " + std::to_string(p.size()) + ", expected " + std::to_string(expected));
  return p;
}

// Library invariants violated by file contents are malformed input.
template <typename F>
auto guarded(F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

Json signs_to_json(const SignVector& s) {
  std::string out;
  for (auto v : s) out += v > 0 ? '+' : '-';
  return out;
}

SignVector signs_from_json(const Json& j) {
  if (!j.is_string()) fail("signs must be a string of '+' and '-'");
  SignVector s;
  for (char c : j.get<std::string>()) {
    if (c != '+' && c != '-') fail("signs must be a string of '+' and '-'");
    s.push_back(c == '+' ? 1 : -1);
  }
  return s;
}

}  // namespace

const char* to_string(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::Components: return "components";
    case PayloadKind::Polyhedron: return "polyhedron";
    case PayloadKind::Pwl: return "pwl";
    case PayloadKind::Lattice: return "lattice";
    case PayloadKind::Complex: return "complex";
    case PayloadKind::Relu: return "relu";
    case PayloadKind::Boundary: return "boundary";
  }
  return "unknown";
}

PayloadKind kind_from_string(const std::string& s) {
  for (auto k : {PayloadKind::Components, PayloadKind::Polyhedron, PayloadKind::Pwl, PayloadKind::Lattice,
                 PayloadKind::Complex, PayloadKind::Relu, PayloadKind::Boundary})
    if (s == to_string(k)) return k;
  fail("unknown payload kind '" + s + "'");
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& r : p) a.push_back(to_json(r));
  return a;
}

Json to_json(const AffineFunc& g) { return Json{{"coeffs", to_json(g.coeffs)}, {"offset", to_json(g.offset)}}; }

Json to_json(const Polyhedron& p) {
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) hs.push_back(Json{{"normal", to_json(h.normal)}, {"bound", to_json(h.bound)}});
  return Json{{"d", p.dim()}, {"halfspaces", std::move(hs)}};
}

Json to_json(const ComponentSet& c) {
  Json comps = Json::array();
  for (const auto& g : c.components) comps.push_back(to_json(g));
  return Json{{"d", c.dim()}, {"components", std::move(comps)}};
}

Json to_json(const PwlFunction& f) {
  Json pieces = Json::array();
  for (const auto& piece : f.pieces) pieces.push_back(Json{{"region", to_json(piece.region)}, {"func", to_json(piece.func)}});
  return Json{{"domain", to_json(f.domain)}, {"pieces", std::move(pieces)}};
}

Json to_json(const LatticePolynomial& p) {
  return Json{{"components", to_json(p.components)}, {"terms", p.terms}};
}

Json to_json(const Hyperplane& h) {
  Json gens = Json::array();
  for (const auto& [i, j] : h.generators) gens.push_back(Json::array({i, j}));
  return Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}, {"generators", std::move(gens)}};
}

Json to_json(const CellComplex& c) {
  const Arrangement& arr = c.arrangement();
  Json hyper = Json::array();
  for (std::size_t h = 0; h < arr.hyperplanes.size(); ++h) {
    Json entry = to_json(arr.hyperplanes[h]);
    entry["witness"] = to_json(arr.witnesses[h]);
    hyper.push_back(std::move(entry));
  }
  Json cells = Json::array();
  for (const auto& cell : c.cells())
    cells.push_back(Json{{"id", cell.id}, {"signs", signs_to_json(cell.signs)}, {"witness", to_json(cell.witness)}});
  return Json{{"domain", to_json(arr.domain)},
              {"components", to_json(arr.components)},
              {"hyperplanes", std::move(hyper)},
              {"cells", std::move(cells)}};
}

Json to_json(const ReluNet1& net) {
  Json w1 = Json::array();
  for (const auto& row : net.W1) w1.push_back(to_json(row));
  return Json{{"W1", std::move(w1)}, {"b1", to_json(net.b1)}, {"w2", to_json(net.w2)}, {"b2", to_json(net.b2)}};
}

Json to_json(const BoundaryPwl& b) {
  Json facets = Json::array();
  for (const auto& fd : b.facet_data) facets.push_back(Json{{"facet", fd.facet}, {"func", to_json(fd.func)}});
  return Json{{"polytope", to_json(b.polytope)}, {"center", to_json(b.center)}, {"facets", std::move(facets)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return guarded([&] { return Rational::parse(j.get<std::string>()); });
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail("rational must be a string \"p/q\" or an integer");
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) fail("expected an array of rationals");
  Point p;
  p.reserve(j.size());
  for (const auto& e : j) p.push_back(rational_from_json(e));
  return p;
}

AffineFunc affine_from_json(const Json& j) {
  return AffineFunc(point_from_json(field(j, "coeffs")), rational_from_json(field(j, "offset")));
}

Polyhedron polyhedron_from_json(const Json& j) {
  const std::size_t d = dim_from_json(j);
  return guarded([&] {
    Polyhedron p(d);
    for (const auto& h : array_field(j, "halfspaces"))
      p.add(Halfspace(vector_from_json(field(h, "normal"), d), rational_from_json(field(h, "bound"))));
    return p;
  });
}

ComponentSet components_from_json(const Json& j) {
  const std::size_t d = dim_from_json(j);
  std::vector<AffineFunc> comps;
  for (const auto& g : array_field(j, "components")) {
    AffineFunc f = affine_from_json(g);
    if (f.dim() != d) fail("component dimension differs from d");
    comps.push_back(std::move(f));
  }
  if (comps.empty()) fail("component list is empty");
  return guarded([&] { return make_component_set(std::move(comps)); });
}

PwlFunction pwl_from_json(const Json& j) {
  PwlFunction f;
  f.domain = polyhedron_from_json(field(j, "domain"));
  for (const auto& piece : array_field(j, "pieces")) {
    Piece p{polyhedron_from_json(field(piece, "region")), affine_from_json(field(piece, "func"))};
    if (p.region.dim() != f.dim() || p.func.dim() != f.dim()) fail("piece dimension differs from domain");
    f.pieces.push_back(std::move(p));
  }
  return f;
}

LatticePolynomial lattice_from_json(const Json& j) {
  ComponentSet comps = components_from_json(field(j, "components"));
  std::vector<Term> terms;
  for (const auto& t : array_field(j, "terms")) {
    if (!t.is_array()) fail("each term must be an array of component indices");
    Term term;
    for (const auto& i : t) term.push_back(index_from_json(i));
    terms.push_back(std::move(term));
  }
  return guarded([&] { return make_lattice(std::move(comps), std::move(terms)); });
}

CellComplex complex_from_json(const Json& j) {
  Arrangement arr;
  arr.domain = polyhedron_from_json(field(j, "domain"));
  arr.components = components_from_json(field(j, "components"));
  const std::size_t d = arr.domain.dim();
  for (const auto& h : array_field(j, "hyperplanes")) {
    Hyperplane hp{vector_from_json(field(h, "normal"), d), rational_from_json(field(h, "offset")), {}};
    for (const auto& g : array_field(h, "generators")) {
      if (!g.is_array() || g.size() != 2) fail("generator must be a pair of indices");
      hp.generators.emplace(index_from_json(g[0]), index_from_json(g[1]));
    }
    arr.hyperplanes.push_back(std::move(hp));
    arr.witnesses.push_back(vector_from_json(field(h, "witness"), d));
  }
  std::vector<Cell> cells;
  for (const auto& c : array_field(j, "cells")) {
    Cell cell{index_from_json(field(c, "id")), signs_from_json(field(c, "signs")),
              vector_from_json(field(c, "witness"), d)};
    if (cell.signs.size() != arr.hyperplanes.size()) fail("sign vector length differs from hyperplane count");
    if (cell.id != cells.size()) fail("cell ids must be 0, 1, 2, ... in order");
    cells.push_back(std::move(cell));
  }
  return CellComplex(std::move(arr), std::move(cells));
}

ReluNet1 relu_from_json(const Json& j) {
  ReluNet1 net;
  for (const auto& row : array_field(j, "W1")) net.W1.push_back(point_from_json(row));
  net.b1 = point_from_json(field(j, "b1"));
  net.w2 = point_from_json(field(j, "w2"));
  net.b2 = rational_from_json(field(j, "b2"));
  guarded([&] { check_shape(net); return 0; });
  return net;
}

BoundaryPwl boundary_from_json(const Json& j) {
  BoundaryPwl b;
  b.polytope = polyhedron_from_json(field(j, "polytope"));
  b.center = vector_from_json(field(j, "center"), b.polytope.dim());
  for (const auto& fd : array_field(j, "facets")) {
    FacetDatum datum{index_from_json(field(fd, "facet")), affine_from_json(field(fd, "func"))};
    if (datum.func.dim() != b.polytope.dim()) fail("facet function dimension differs from polytope");
    b.facet_data.push_back(std::move(datum));
  }
  return b;
}

Json wrap(PayloadKind kind, Json payload) {
  return Json{{"format_version", kFormatVersion}, {"kind", to_string(kind)}, {"payload", std::move(payload)}};
}

Document open_document(const Json& j) {
  if (!j.is_object()) fail("top-level JSON value must be an object");
  if (j.contains("kind") && j.contains("payload")) {
    const Json& version = field(j, "format_version");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion)
      fail(std::string("unsupported format_version, expected ") + kFormatVersion);
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) fail("kind must be a string");
    Document doc{kind_from_string(kind.get<std::string>()), j.at("payload"), Json::object()};
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "format_version" && it.key() != "kind" && it.key() != "payload") doc.extra[it.key()] = it.value();
    return doc;
  }
  PayloadKind kind;
  if (j.contains("pieces")) kind = PayloadKind::Pwl;
  else if (j.contains("terms")) kind = PayloadKind::Lattice;
  else if (j.contains("cells")) kind = PayloadKind::Complex;
  else if (j.contains("W1")) kind = PayloadKind::Relu;
  else if (j.contains("facets")) kind = PayloadKind::Boundary;
  else if (j.contains("halfspaces")) kind = PayloadKind::Polyhedron;
  else if (j.contains("components")) kind = PayloadKind::Components;
  else fail("cannot determine payload kind");
  return Document{kind, j, Json::object()};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace maxmin::io
