#pragma once

#include <cstdint>
#include <vector>

#include "maxmin/geometry.hpp"

namespace maxmin {

/// Deterministic pseudo-random rational points of p: convex combinations of
/// LP vertices for random directions and an interior point. Empty if p is.
std::vector<Point> sample_points(const Polyhedron& p, std::size_t count, std::uint64_t seed);

}  // namespace maxmin
