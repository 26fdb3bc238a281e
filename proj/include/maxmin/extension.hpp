#pragma once

#include <vector>

#include "maxmin/lattice.hpp"
#include "maxmin/pwl.hpp"

namespace maxmin {

struct FacetDatum {
  std::size_t facet = 0;  ///< index into polytope.halfspaces()
  AffineFunc func;        ///< ambient function agreeing with f on that facet
};

/// Piecewise linear data on the boundary of a bounded polytope, one affine
/// function per facet, together with a strictly interior center.
struct BoundaryPwl {
  Polyhedron polytope;
  Point center;
  std::vector<FacetDatum> facet_data;
};

/// Extends boundary data to the polytope, positively homogeneous about the
/// center: f~(a + t(y - a)) = t f(y) for boundary points y. One piece per
/// facet (the cone from the center over it). Throws CenterNotInterior,
/// InconsistentBoundaryData.
PwlFunction radial_extend(const BoundaryPwl& b);

/// Extension of f to a larger bounded target through its max-min
/// representation. Throws TargetDoesNotContainDomain.
PwlFunction extend_to_space(const PwlFunction& f, const Polyhedron& target,
                            const BuildOptions& opts = {});

/// x -> w2 . relu(W1 x + b1) + b2
struct ReluNet1 {
  std::vector<std::vector<Rational>> W1;
  std::vector<Rational> b1;
  std::vector<Rational> w2;
  Rational b2;

  std::size_t hidden() const { return W1.size(); }
  std::size_t dim() const { return W1.empty() ? 0 : W1.front().size(); }
};

/// Throws InvalidArgument on inconsistent shapes.
void check_shape(const ReluNet1& net);

Rational evaluate_relu(const ReluNet1& net, const Point& x);

/// Exact PwlFunction of the network on `box`, one piece per activation
/// region.
PwlFunction import_relu(const ReluNet1& net, const Polyhedron& box, const RunOptions& opts = {});

}  // namespace maxmin
