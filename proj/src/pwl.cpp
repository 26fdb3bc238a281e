#include "maxmin/pwl.hpp"

#include <algorithm>
#include <sstream>

#include "maxmin/arrangement.hpp"
#include "maxmin/error.hpp"
#include "maxmin/lp.hpp"

namespace maxmin {

const char* to_string(Violation v) {
  switch (v) {
    case Violation::DegenerateDomain: return "DEGENERATE_DOMAIN";
    case Violation::PieceOutsideDomain: return "PIECE_OUTSIDE_DOMAIN";
    case Violation::OverlapMismatch: return "OVERLAP_MISMATCH";
    case Violation::CoverGap: return "COVER_GAP";
    case Violation::ContinuityBreak: return "CONTINUITY_BREAK";
  }
  return "UNKNOWN";
}

bool ValidationReport::has(Violation v) const {
  return std::any_of(violations.begin(), violations.end(),
                     [v](const ViolationEntry& e) { return e.kind == v; });
}

namespace {

void check_dims(const PwlFunction& f) {
  const std::size_t d = f.dim();
  for (const auto& piece : f.pieces) {
    if (piece.region.dim() != d || piece.func.dim() != d)
      throw Error(ErrorKind::DimensionMismatch, "piece dimension differs from domain dimension");
  }
}

// Per-coordinate [min, max] of a piece; nullopt bounds are infinite.
struct Bounds {
  bool empty = false;
  std::vector<std::optional<Rational>> lo, hi;
  std::optional<Point> point;  // some point of the region, used to warm-start LPs
};

Bounds bounds_of(const Polyhedron& region) {
  Bounds b;
  const std::size_t d = region.dim();
  b.lo.resize(d);
  b.hi.resize(d);
  b.point = find_point(d, region.halfspaces());
  if (!b.point) {
    b.empty = true;
    return b;
  }
  for (std::size_t k = 0; k < d; ++k) {
    auto range = functional_range_on(AffineFunc::coordinate(d, k), region, &*b.point);
    if (!range) {
      b.empty = true;
      return b;
    }
    b.lo[k] = range->min;
    b.hi[k] = range->max;
  }
  return b;
}

bool boxes_disjoint(const Bounds& a, const Bounds& b) {
  if (a.empty || b.empty) return true;
  for (std::size_t k = 0; k < a.lo.size(); ++k) {
    if (a.hi[k] && b.lo[k] && *a.hi[k] < *b.lo[k]) return true;
    if (b.hi[k] && a.lo[k] && *b.hi[k] < *a.lo[k]) return true;
  }
  return false;
}

std::vector<Halfspace> joined(const Polyhedron& a, const Polyhedron& b, Strictness s) {
  std::vector<Halfspace> out;
  out.reserve(a.halfspaces().size() + b.halfspaces().size());
  for (const auto& h : a.halfspaces()) out.push_back(s == Strictness::Open ? h.as_open() : h);
  for (const auto& h : b.halfspaces()) out.push_back(s == Strictness::Open ? h.as_open() : h);
  return out;
}

}  // namespace

ValidationReport validate_pwl(const PwlFunction& f, const RunOptions& opts) {
  check_dims(f);
  ValidationReport report;
  const std::size_t d = f.dim();
  if (!interior_point(f.domain)) {
    report.violations.push_back({Violation::DegenerateDomain, std::nullopt, std::nullopt,
                                 std::nullopt, "domain has empty interior"});
    return report;
  }

  const std::size_t n = f.pieces.size();
  std::vector<Bounds> bounds(n);
  std::vector<std::optional<std::size_t>> outside(n);
  parallel_for(n, opts.threads, [&](std::size_t i) {
    const Polyhedron& region = f.pieces[i].region;
    bounds[i] = bounds_of(region);
    if (bounds[i].empty) return;
    const auto& dom = f.domain.halfspaces();
    for (std::size_t h = 0; h < dom.size(); ++h) {
      std::vector<Halfspace> cons = region.halfspaces();
      cons.push_back(dom[h].complement());
      if (find_point(d, cons, &*bounds[i].point)) {
        outside[i] = h;
        break;
      }
    }
  });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!boxes_disjoint(bounds[i], bounds[j]) && !(f.pieces[i].func == f.pieces[j].func))
        pairs.emplace_back(i, j);
  std::vector<std::optional<Violation>> pair_result(pairs.size());
  parallel_for(pairs.size(), opts.threads, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    const Polyhedron& a = f.pieces[i].region;
    const Polyhedron& b = f.pieces[j].region;
    const Polyhedron both = a.intersect(b);
    const AffineFunc diff = f.pieces[i].func - f.pieces[j].func;
    const auto range = functional_range_on(diff, both, &*bounds[i].point);
    if (!range || range->vanishes()) return;
    const auto open = joined(a, b, Strictness::Open);
    pair_result[k] = find_point(d, open, &*bounds[i].point) ? Violation::OverlapMismatch : Violation::ContinuityBreak;
  });

  for (std::size_t i = 0; i < n; ++i) {
    if (outside[i]) {
      std::ostringstream msg;
      msg << "piece " << i << " leaves the domain across domain constraint " << *outside[i];
      report.violations.push_back(
          {Violation::PieceOutsideDomain, i, std::nullopt, std::nullopt, msg.str()});
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (pairs[k].first != i || !pair_result[k]) continue;
      std::ostringstream msg;
      msg << "pieces " << i << " and " << pairs[k].second
          << (*pair_result[k] == Violation::OverlapMismatch
                  ? " overlap with different functions"
                  : " disagree on their common boundary");
      report.violations.push_back({*pair_result[k], i, pairs[k].second, std::nullopt, msg.str()});
    }
  }

  // Every cell of the piece-facet arrangement must lie in some piece.
  std::vector<Hyperplane> facets;
  for (const auto& piece : f.pieces)
    for (const auto& h : piece.region.halfspaces()) facets.push_back(normalize_hyperplane(h.normal, h.bound));
  const CellComplex cells = enumerate_cells(make_arrangement(f.domain, facets), opts);
  for (const auto& cell : cells.cells()) {
    const bool covered = std::any_of(f.pieces.begin(), f.pieces.end(), [&](const Piece& p) {
      return p.region.contains(cell.witness);
    });
    if (!covered) {
      report.violations.push_back({Violation::CoverGap, std::nullopt, std::nullopt, cell.witness,
                                   "point " + to_string(cell.witness) + " lies in no piece"});
    }
  }
  return report;
}

void require_valid(const PwlFunction& f, const RunOptions& opts) {
  const ValidationReport report = validate_pwl(f, opts);
  if (report.ok()) return;
  std::string msg = "invalid piecewise linear function:";
  for (const auto& v : report.violations) msg += std::string(" ") + to_string(v.kind) + " (" + v.detail + ");";
  throw Error(ErrorKind::InvalidPwl, msg);
}

Rational eval_pwl(const PwlFunction& f, const Point& x) {
  if (x.size() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from domain");
  if (!f.domain.contains(x))
    throw Error(ErrorKind::OutsideDomain, "point " + to_string(x) + " is outside the domain");
  for (const auto& piece : f.pieces)
    if (piece.region.contains(x)) return piece.func(x);
  throw Error(ErrorKind::NoMatch, "point " + to_string(x) + " is covered by no piece");
}

std::optional<std::size_t> ComponentSet::index_of(const AffineFunc& g) const {
  const auto it = std::find(components.begin(), components.end(), g);
  if (it == components.end()) return std::nullopt;
  return static_cast<std::size_t>(it - components.begin());
}

ComponentSet extract_components(const PwlFunction& f) {
  check_dims(f);
  ComponentSet out;
  for (const auto& piece : f.pieces) {
    if (out.index_of(piece.func)) continue;
    if (interior_point(piece.region)) out.components.push_back(piece.func);
  }
  if (out.components.empty()) {
    for (const auto& piece : f.pieces)
      if (!out.index_of(piece.func)) out.components.push_back(piece.func);
  }
  out.piece_to_component.reserve(f.pieces.size());
  for (const auto& piece : f.pieces) out.piece_to_component.push_back(out.index_of(piece.func));
  return out;
}

ComponentSet make_component_set(std::vector<AffineFunc> components) {
  ComponentSet out;
  for (auto& g : components) {
    if (!out.components.empty() && g.dim() != out.dim())
      throw Error(ErrorKind::DimensionMismatch, "components of different dimension");
    if (out.index_of(g)) throw Error(ErrorKind::InvalidArgument, "duplicate component");
    out.components.push_back(std::move(g));
  }
  return out;
}

}  // namespace maxmin
