#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "maxmin/geometry.hpp"

namespace maxmin {

struct LpOptimal {
  Rational optimum;
  Point argmax;
  /// One nonnegative multiplier per constraint halfspace, with
  /// sum(dual_i * normal_i) = objective.coeffs and
  /// sum(dual_i * bound_i) + objective.offset = optimum.
  std::vector<Rational> dual;
};
struct LpUnbounded {};
struct LpInfeasible {};

using LpResult = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

/// Maximizes `objective` over `constraints` with an exact two-phase simplex
/// (Bland's rule). Open halfspaces are treated as closed.
LpResult lp_optimize(const AffineFunc& objective, const Polyhedron& constraints);

/// Same, with the simplex started from `start` (any point; a point close to
/// feasibility needs fewer phase-1 pivots). The result does not depend on it
/// being feasible.
LpResult lp_optimize(const AffineFunc& objective, const Polyhedron& constraints, const Point* start);

/// Exact check of the dual multipliers attached to `solution`.
bool verify_dual_certificate(const AffineFunc& objective, const Polyhedron& constraints,
                             const LpOptimal& solution);

/// A point satisfying every closed halfspace and every open halfspace strictly,
/// or nullopt. Maximizes a slack t <= 1 subtracted from the open rows only.
std::optional<Point> find_point(std::size_t dim, std::span<const Halfspace> constraints);
std::optional<Point> find_point(std::size_t dim, std::span<const Halfspace> constraints, const Point* start);

/// A point strictly inside every halfspace of `p`, or nullopt if `p` has
/// empty interior.
std::optional<Point> interior_point(const Polyhedron& p);

bool is_full_dimensional(const Polyhedron& p);
bool is_feasible(const Polyhedron& p);

struct FunctionalRange {
  std::optional<Rational> min;  ///< nullopt means unbounded below
  std::optional<Rational> max;  ///< nullopt means unbounded above

  bool vanishes() const { return min && max && min->is_zero() && max->is_zero(); }
};

/// Infimum and supremum of g over p (two LP calls); nullopt when p is empty.
std::optional<FunctionalRange> functional_range_on(const AffineFunc& g, const Polyhedron& p);
std::optional<FunctionalRange> functional_range_on(const AffineFunc& g, const Polyhedron& p, const Point* start);

}  // namespace maxmin
