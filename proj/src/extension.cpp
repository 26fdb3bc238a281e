#include "maxmin/extension.hpp"

#include <algorithm>

#include "maxmin/arrangement.hpp"
#include "maxmin/error.hpp"
#include "maxmin/lp.hpp"

namespace maxmin {

namespace {

bool is_bounded(const Polyhedron& p) {
  for (std::size_t k = 0; k < p.dim(); ++k) {
    const auto range = functional_range_on(AffineFunc::coordinate(p.dim(), k), p);
    if (!range || !range->min || !range->max) return false;
  }
  return true;
}

// Face of the polytope cut out by making the given halfspaces tight.
Polyhedron tight(const Polyhedron& poly, std::initializer_list<std::size_t> facets) {
  Polyhedron out = poly;
  for (std::size_t k : facets) out.add(poly.halfspaces()[k].complement().as_closed());
  return out;
}

}  // namespace

PwlFunction radial_extend(const BoundaryPwl& b) {
  const Polyhedron& poly = b.polytope;
  const std::size_t d = poly.dim();
  const auto& hs = poly.halfspaces();
  if (b.center.size() != d) throw Error(ErrorKind::DimensionMismatch, "center dimension differs from polytope");
  if (!poly.contains_strictly(b.center))
    throw Error(ErrorKind::CenterNotInterior, "center " + to_string(b.center) + " is not strictly interior");
  if (!is_bounded(poly)) throw Error(ErrorKind::InvalidArgument, "radial extension needs a bounded polytope");

  std::vector<std::optional<AffineFunc>> data(hs.size());
  for (const auto& fd : b.facet_data) {
    if (fd.facet >= hs.size()) throw Error(ErrorKind::InvalidArgument, "facet index out of range");
    if (fd.func.dim() != d) throw Error(ErrorKind::DimensionMismatch, "facet function dimension");
    if (data[fd.facet]) throw Error(ErrorKind::InvalidArgument, "facet given twice");
    data[fd.facet] = fd.func;
  }
  for (std::size_t k = 0; k < hs.size(); ++k) {
    if (data[k]) continue;
    std::vector<Halfspace> cons;
    for (std::size_t j = 0; j < hs.size(); ++j) cons.push_back(j == k ? hs[j] : hs[j].as_open());
    cons.push_back(hs[k].complement().as_closed());
    if (find_point(d, cons))
      throw Error(ErrorKind::InconsistentBoundaryData, "no data for facet " + std::to_string(k));
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      if (!data[i] || !data[j]) continue;
      const auto range = functional_range_on(*data[i] - *data[j], tight(poly, {i, j}));
      if (range && !range->vanishes())
        throw Error(ErrorKind::InconsistentBoundaryData,
                    "facet functions " + std::to_string(i) + " and " + std::to_string(j) +
                        " disagree where the facets meet");
    }
  }

  // slack[k] = bound_k - normal_k . a > 0; facet k owns the points where
  // normal_k . (x - a) / slack[k] is the largest.
  std::vector<Rational> slack;
  for (const auto& h : hs) slack.push_back(h.bound - dot(h.normal, b.center));

  PwlFunction out{poly, {}};
  for (const auto& fd : b.facet_data) {
    const std::size_t k = fd.facet;
    Polyhedron cone = poly;
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (j == k) continue;
      std::vector<Rational> n(d);
      for (std::size_t t = 0; t < d; ++t) n[t] = hs[j].normal[t] / slack[j] - hs[k].normal[t] / slack[k];
      if (std::all_of(n.begin(), n.end(), [](const Rational& r) { return r.is_zero(); })) continue;
      cone.add(Halfspace(n, dot(n, b.center)));
    }
    if (!interior_point(cone)) continue;
    const Rational scale = fd.func(b.center) / slack[k];
    std::vector<Rational> coeffs(d);
    for (std::size_t t = 0; t < d; ++t) coeffs[t] = fd.func.coeffs[t] + scale * hs[k].normal[t];
    const Rational offset = -dot(coeffs, b.center);
    out.pieces.push_back(Piece{std::move(cone), AffineFunc(std::move(coeffs), offset)});
  }
  return out;
}

PwlFunction extend_to_space(const PwlFunction& f, const Polyhedron& target, const BuildOptions& opts) {
  if (target.dim() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "target dimension differs");
  for (const auto& h : target.halfspaces()) {
    const LpResult r = lp_optimize(AffineFunc(h.normal, 0), f.domain);
    const auto* opt = std::get_if<LpOptimal>(&r);
    if (std::holds_alternative<LpInfeasible>(r)) continue;
    if (!opt || opt->optimum > h.bound)
      throw Error(ErrorKind::TargetDoesNotContainDomain, "target does not contain the function's domain");
  }
  const LatticePolynomial p = build_representation(f, opts);
  return lattice_to_pwl(p, target, opts.run);
}

void check_shape(const ReluNet1& net) {
  if (net.hidden() == 0) throw Error(ErrorKind::InvalidArgument, "network needs at least one hidden unit");
  if (net.dim() == 0) throw Error(ErrorKind::InvalidArgument, "network input dimension is zero");
  for (const auto& row : net.W1)
    if (row.size() != net.dim()) throw Error(ErrorKind::InvalidArgument, "ragged W1");
  if (net.b1.size() != net.hidden() || net.w2.size() != net.hidden())
    throw Error(ErrorKind::InvalidArgument, "b1/w2 length differs from hidden width");
}

Rational evaluate_relu(const ReluNet1& net, const Point& x) {
  check_shape(net);
  if (x.size() != net.dim()) throw Error(ErrorKind::DimensionMismatch, "input dimension");
  Rational out = net.b2;
  for (std::size_t i = 0; i < net.hidden(); ++i) {
    const Rational pre = dot(net.W1[i], x) + net.b1[i];
    if (pre.sign() > 0) out += net.w2[i] * pre;
  }
  return out;
}

PwlFunction import_relu(const ReluNet1& net, const Polyhedron& box, const RunOptions& opts) {
  check_shape(net);
  const std::size_t d = net.dim();
  if (box.dim() != d) throw Error(ErrorKind::DimensionMismatch, "box dimension differs from network input");
  // Neurons with zero output weight or a constant pre-activation never bend
  // the function.
  std::vector<Hyperplane> candidates;
  for (std::size_t i = 0; i < net.hidden(); ++i) {
    if (net.w2[i].is_zero()) continue;
    const bool zero_row =
        std::all_of(net.W1[i].begin(), net.W1[i].end(), [](const Rational& r) { return r.is_zero(); });
    if (!zero_row) candidates.push_back(normalize_hyperplane(net.W1[i], -net.b1[i]));
  }
  const CellComplex complex = enumerate_cells(make_arrangement(box, candidates), opts);
  PwlFunction out{box, std::vector<Piece>(complex.size())};
  parallel_for(complex.size(), opts.threads, [&](std::size_t c) {
    const Point& w = complex.cell(c).witness;
    AffineFunc g = AffineFunc::constant(d, net.b2);
    for (std::size_t i = 0; i < net.hidden(); ++i) {
      const AffineFunc pre(net.W1[i], net.b1[i]);
      if (pre(w).sign() > 0) g = g + pre.scaled(net.w2[i]);
    }
    out.pieces[c] = Piece{complex.closure(c), std::move(g)};
  });
  return out;
}

}  // namespace maxmin
