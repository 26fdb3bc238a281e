#include "maxmin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxmin/arrangement.hpp"
#include "maxmin/error.hpp"
#include "maxmin/extension.hpp"
#include "maxmin/lattice.hpp"
#include "maxmin/lp.hpp"
#include "maxmin/sampling.hpp"
#include "maxmin/serialize.hpp"

namespace maxmin {

namespace {

using io::Json;
using io::PayloadKind;

struct Options {
  unsigned threads = 1;
  std::string input;
  std::string second;
  std::string output;
  std::string point;
  std::string cells;
  std::string domain;
  std::string target;
  std::string box;
  std::string slice;
  std::string from;
  std::string to;
  std::size_t axis = 0;
  std::size_t steps = 20;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  bool no_simplify = false;
  bool diagnostics = false;
};

class Command {
public:
  Command(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void emit(const std::string& text) const {
    if (opts_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(opts_.output, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + opts_.output + "'");
    file << text;
  }

  RunOptions run() const { return RunOptions{opts_.threads}; }
  BuildOptions build_options() const { return BuildOptions{run(), !opts_.no_simplify, true}; }

protected:
  const Options& opts_;
  std::ostream& out_;
};

io::Document load(const std::string& path) { return io::open_document(io::read_json_file(path)); }

io::Document load_kind(const std::string& path, PayloadKind kind) {
  io::Document doc = load(path);
  if (doc.kind != kind)
    throw Error(ErrorKind::Parse, "'" + path + "' holds a " + io::to_string(doc.kind) + " payload, expected " +
                                      io::to_string(kind));
  return doc;
}

PwlFunction load_pwl(const std::string& path) { return io::pwl_from_json(load_kind(path, PayloadKind::Pwl).payload); }
Polyhedron load_polyhedron(const std::string& path) {
  return io::polyhedron_from_json(load_kind(path, PayloadKind::Polyhedron).payload);
}

std::pair<std::size_t, std::size_t> parse_cell_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "--cells expects P,Q");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const std::size_t p = std::stoul(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const std::size_t q = std::stoul(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return {p, q};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "--cells expects two cell ids, got '" + text + "'");
  }
}

CellComplex complex_of(const PwlFunction& f, const RunOptions& run) {
  require_valid(f, run);
  return enumerate_cells(build_hyperplanes(extract_components(f), f.domain), run);
}

void check_cell(const CellComplex& c, std::size_t id) {
  if (id >= c.size())
    throw Error(ErrorKind::InvalidArgument,
                "cell id " + std::to_string(id) + " out of range (complex has " + std::to_string(c.size()) + " cells)");
}

int cmd_build(const Command& cmd, const Options& o) {
  const PwlFunction f = load_pwl(o.input);
  const Representation rep = analyze(f, cmd.build_options());
  Json doc = io::wrap(PayloadKind::Lattice, io::to_json(rep.polynomial));
  if (o.diagnostics) {
    Json diag;
    diag["unsimplified_terms"] = rep.cell_terms;
    diag["dominant"] = rep.dominant;
    Json orders = Json::array();
    for (const auto& ord : rep.orders) orders.push_back(ord.order);
    diag["orders"] = std::move(orders);
    Json cells = Json::array();
    if (rep.complex) {
      for (const auto& c : rep.complex->cells()) {
        std::string signs;
        for (auto s : c.signs) signs += s > 0 ? '+' : '-';
        cells.push_back(Json{{"id", c.id}, {"signs", signs}, {"witness", io::to_json(c.witness)}});
      }
    }
    diag["cells"] = std::move(cells);
    doc["diagnostics"] = std::move(diag);
  }
  cmd.emit(io::dump(doc));
  return kExitOk;
}

int cmd_verify(const Command& cmd, const Options& o) {
  const PwlFunction f = load_pwl(o.input);
  const LatticePolynomial p = io::lattice_from_json(load_kind(o.second, PayloadKind::Lattice).payload);
  require_valid(f, cmd.run());
  const VerificationReport sym = verify_symbolic(f, p, cmd.run());

  Json failures = Json::array();
  for (const auto& fail : sym.failures) {
    Json entry{{"cell", fail.cell},
               {"witness", io::to_json(fail.witness)},
               {"expected", io::to_json(sym.components.components[fail.expected])},
               {"actual", io::to_json(sym.components.components[fail.actual])}};
    entry["term"] = fail.term ? Json(*fail.term) : Json(nullptr);
    failures.push_back(std::move(entry));
  }

  std::size_t mismatches = 0;
  Json first_mismatch = nullptr;
  const auto points = sample_points(f.domain, o.samples, o.seed);
  for (const auto& x : points) {
    const Rational fx = eval_pwl(f, x);
    const Rational px = evaluate_lattice(p, x);
    if (fx == px) continue;
    if (mismatches++ == 0)
      first_mismatch = Json{{"point", io::to_json(x)}, {"pwl", io::to_json(fx)}, {"lattice", io::to_json(px)}};
  }
  const bool pass = sym.pass && mismatches == 0;
  Json report{{"status", pass ? "PASS" : "FAIL"},
              {"symbolic", Json{{"pass", sym.pass}, {"cells_checked", sym.cells_checked}, {"failures", failures}}},
              {"sampled", Json{{"points", points.size()}, {"mismatches", mismatches}, {"first_mismatch", first_mismatch}}}};
  cmd.emit(io::dump(report));
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_eval(const Command& cmd, const Options& o) {
  const io::Document doc = load(o.input);
  const Point x = [&] {
    try {
      return parse_point(o.point);
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, std::string("--point: ") + e.what());
    }
  }();
  Rational value;
  if (doc.kind == PayloadKind::Pwl) {
    value = eval_pwl(io::pwl_from_json(doc.payload), x);
  } else if (doc.kind == PayloadKind::Lattice) {
    value = evaluate_lattice(io::lattice_from_json(doc.payload), x);
  } else {
    throw Error(ErrorKind::Parse, "eval needs a pwl or lattice file");
  }
  cmd.emit(value.to_string() + "\n");
  return kExitOk;
}

int cmd_cells(const Command& cmd, const Options& o) {
  const PwlFunction f = load_pwl(o.input);
  const CellComplex complex = complex_of(f, cmd.run());
  Json payload = io::to_json(complex);
  for (std::size_t c = 0; c < complex.size(); ++c) {
    Json& entry = payload["cells"][c];
    entry["order"] = cell_order(complex, c).order;
    entry["dominant"] = dominant_component(f, complex.arrangement().components, complex.cell(c));
  }
  cmd.emit(io::dump(io::wrap(PayloadKind::Complex, std::move(payload))));
  return kExitOk;
}

std::string describe(const Hyperplane& h) {
  std::ostringstream s;
  s << "normal=[" << to_string(h.normal) << "] offset=" << h.offset << " generators=[";
  bool first = true;
  for (const auto& [i, j] : h.generators) {
    s << (first ? "" : ",") << "(" << i << "," << j << ")";
    first = false;
  }
  s << "]";
  return s.str();
}

int cmd_dist(const Command& cmd, const Options& o) {
  const auto [p, q] = parse_cell_pair(o.cells);
  const CellComplex complex = complex_of(load_pwl(o.input), cmd.run());
  check_cell(complex, p);
  check_cell(complex, q);
  const Separation sep = separation(complex, p, q);
  std::ostringstream s;
  s << sep.distance << "\n";
  for (std::size_t h : sep.hyperplanes) s << h << " " << describe(complex.arrangement().hyperplanes[h]) << "\n";
  cmd.emit(s.str());
  return kExitOk;
}

int cmd_geodesic(const Command& cmd, const Options& o) {
  const auto [p, q] = parse_cell_pair(o.cells);
  const CellComplex complex = complex_of(load_pwl(o.input), cmd.run());
  check_cell(complex, p);
  check_cell(complex, q);
  std::ostringstream s;
  const auto path = geodesic(complex, p, q);
  for (std::size_t i = 0; i < path.size(); ++i) s << (i ? " " : "") << path[i];
  s << "\n";
  cmd.emit(s.str());
  return kExitOk;
}

int cmd_lattice2pwl(const Command& cmd, const Options& o) {
  const LatticePolynomial p = io::lattice_from_json(load_kind(o.input, PayloadKind::Lattice).payload);
  const PwlFunction f = lattice_to_pwl(p, load_polyhedron(o.domain), cmd.run());
  cmd.emit(io::dump(io::wrap(PayloadKind::Pwl, io::to_json(f))));
  return kExitOk;
}

int cmd_extend_radial(const Command& cmd, const Options& o) {
  const BoundaryPwl b = io::boundary_from_json(load_kind(o.input, PayloadKind::Boundary).payload);
  cmd.emit(io::dump(io::wrap(PayloadKind::Pwl, io::to_json(radial_extend(b)))));
  return kExitOk;
}

int cmd_extend_space(const Command& cmd, const Options& o) {
  const PwlFunction f = load_pwl(o.input);
  const PwlFunction g = extend_to_space(f, load_polyhedron(o.target), cmd.build_options());
  cmd.emit(io::dump(io::wrap(PayloadKind::Pwl, io::to_json(g))));
  return kExitOk;
}

int cmd_import_relu(const Command& cmd, const Options& o) {
  const ReluNet1 net = io::relu_from_json(load_kind(o.input, PayloadKind::Relu).payload);
  const PwlFunction f = import_relu(net, load_polyhedron(o.box), cmd.run());
  cmd.emit(io::dump(io::wrap(PayloadKind::Pwl, io::to_json(f))));
  return kExitOk;
}

int cmd_plot(const Command& cmd, const Options& o) {
  const io::Document doc = load(o.input);
  std::optional<PwlFunction> f;
  std::optional<LatticePolynomial> p;
  if (doc.kind == PayloadKind::Pwl) f = io::pwl_from_json(doc.payload);
  else if (doc.kind == PayloadKind::Lattice) p = io::lattice_from_json(doc.payload);
  else throw Error(ErrorKind::Parse, "plot needs a pwl or lattice file");
  const std::size_t d = f ? f->dim() : p->dim();
  if (o.axis >= d) throw Error(ErrorKind::InvalidArgument, "--axis out of range");
  if (o.steps == 0) throw Error(ErrorKind::InvalidArgument, "--steps must be positive");

  Point base(d);
  if (!o.slice.empty()) {
    base = parse_point(o.slice);
    if (base.size() != d) throw Error(ErrorKind::DimensionMismatch, "--slice dimension");
  } else if (f) {
    if (auto w = interior_point(f->domain)) base = *w;
  }
  // Parameter range along the axis: explicit, else the domain's extent on
  // the line through `base`, else [-1, 1].
  std::optional<Rational> lo, hi;
  if (f) {
    for (const auto& h : f->domain.halfspaces()) {
      const Rational a = h.normal[o.axis];
      const Rational rest = h.bound - dot(h.normal, base) + a * base[o.axis];
      if (a.sign() > 0 && (!hi || rest / a < *hi)) hi = rest / a;
      if (a.sign() < 0 && (!lo || rest / a > *lo)) lo = rest / a;
    }
  }
  if (!o.from.empty()) lo = Rational::parse(o.from);
  if (!o.to.empty()) hi = Rational::parse(o.to);
  if (!lo) lo = Rational(-1);
  if (!hi) hi = Rational(1);
  if (*hi < *lo) throw Error(ErrorKind::InvalidArgument, "empty plot range");

  std::ostringstream s;
  s << "# x" << o.axis << "\tvalue\n";
  for (std::size_t k = 0; k <= o.steps; ++k) {
    Point x = base;
    x[o.axis] = *lo + (*hi - *lo) * Rational(static_cast<long>(k)) / Rational(static_cast<long>(o.steps));
    if (f && !f->domain.contains(x)) continue;
    const Rational v = f ? eval_pwl(*f, x) : evaluate_lattice(*p, x);
    s << x[o.axis] << "\t" << v << "\n";
  }
  cmd.emit(s.str());
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::Parse ? kExitMalformedInput : kExitPrecondition;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact max-min representations of piecewise linear functions", "maxmin"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "Worker threads for library calls (output is identical for any value)")
      ->check(CLI::PositiveNumber);

  auto* build = app.add_subcommand("build", "Max-min polynomial of a piecewise linear function");
  build->add_option("pwl", o.input, "pwl JSON file")->required();
  build->add_option("-o,--output", o.output, "Write to this file instead of stdout");
  build->add_flag("--no-simplify", o.no_simplify, "Keep one term per cell");
  build->add_flag("--diagnostics", o.diagnostics, "Include per-cell terms, dominants and orders");

  auto* verify = app.add_subcommand("verify", "Check a polynomial against a function (exit 1 on failure)");
  verify->add_option("pwl", o.input, "pwl JSON file")->required();
  verify->add_option("lattice", o.second, "lattice JSON file")->required();
  verify->add_option("--samples", o.samples, "Random points for the sampled check");
  verify->add_option("--seed", o.seed, "Seed for the sampled check");
  verify->add_option("-o,--output", o.output, "Write to this file instead of stdout");

  auto* eval = app.add_subcommand("eval", "Exact value of a pwl or lattice file at a point");
  eval->add_option("file", o.input, "pwl or lattice JSON file")->required();
  eval->add_option("--point", o.point, "Comma separated rationals, e.g. \"1/2,-3\"")->required();

  auto* cells = app.add_subcommand("cells", "Dump the cell complex of a function");
  cells->add_option("pwl", o.input, "pwl JSON file")->required();
  cells->add_option("-o,--output", o.output, "Write to this file instead of stdout");

  auto* dist = app.add_subcommand("dist", "Separation distance between two cells");
  dist->add_option("pwl", o.input, "pwl JSON file")->required();
  dist->add_option("--cells", o.cells, "P,Q")->required();

  auto* geo = app.add_subcommand("geodesic", "Chain of adjacent cells between two cells");
  geo->add_option("pwl", o.input, "pwl JSON file")->required();
  geo->add_option("--cells", o.cells, "P,Q")->required();

  auto* l2p = app.add_subcommand("lattice2pwl", "Compile a polynomial into pieces over a domain");
  l2p->add_option("lattice", o.input, "lattice JSON file")->required();
  l2p->add_option("--domain", o.domain, "polyhedron JSON file")->required();
  l2p->add_option("-o,--output", o.output, "Write to this file instead of stdout");

  auto* radial = app.add_subcommand("extend-radial", "Radial extension of boundary data");
  radial->add_option("boundary", o.input, "boundary JSON file")->required();
  radial->add_option("-o,--output", o.output, "Write to this file instead of stdout");

  auto* space = app.add_subcommand("extend-space", "Extend a function to a larger box");
  space->add_option("pwl", o.input, "pwl JSON file")->required();
  space->add_option("--target", o.target, "polyhedron JSON file")->required();
  space->add_option("-o,--output", o.output, "Write to this file instead of stdout");

  auto* relu = app.add_subcommand("import-relu", "Pieces of a one-hidden-layer ReLU network");
  relu->add_option("net", o.input, "relu JSON file")->required();
  relu->add_option("--box", o.box, "polyhedron JSON file")->required();
  relu->add_option("-o,--output", o.output, "Write to this file instead of stdout");

  auto* plot = app.add_subcommand("plot", "Text table of samples along one axis");
  plot->add_option("file", o.input, "pwl or lattice JSON file")->required();
  plot->add_option("--axis", o.axis, "0-based coordinate to vary")->required();
  plot->add_option("--slice", o.slice, "Base point, comma separated");
  plot->add_option("--from", o.from, "Start of the range");
  plot->add_option("--to", o.to, "End of the range");
  plot->add_option("--steps", o.steps, "Number of intervals");
  plot->add_option("-o,--output", o.output, "Write to this file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kExitMalformedInput;
  }

  const Command cmd(o, out);
  try {
    if (*build) return cmd_build(cmd, o);
    if (*verify) return cmd_verify(cmd, o);
    if (*eval) return cmd_eval(cmd, o);
    if (*cells) return cmd_cells(cmd, o);
    if (*dist) return cmd_dist(cmd, o);
    if (*geo) return cmd_geodesic(cmd, o);
    if (*l2p) return cmd_lattice2pwl(cmd, o);
    if (*radial) return cmd_extend_radial(cmd, o);
    if (*space) return cmd_extend_space(cmd, o);
    if (*relu) return cmd_import_relu(cmd, o);
    if (*plot) return cmd_plot(cmd, o);
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what());
    return exit_code_for(e.kind());
  }
  return kExitMalformedInput;
}

}  // namespace maxmin
