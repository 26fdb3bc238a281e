#include "maxmin/sampling.hpp"

#include <random>

#include "maxmin/lp.hpp"

namespace maxmin {

std::vector<Point> sample_points(const Polyhedron& p, std::size_t count, std::uint64_t seed) {
  const std::size_t d = p.dim();
  std::vector<Point> anchors;
  auto inner = find_point(d, p.halfspaces());
  if (!inner) return {};
  if (auto strict = interior_point(p)) inner = std::move(strict);
  anchors.push_back(*inner);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (std::size_t k = 0; k < 2 * d + 6; ++k) {
    AffineFunc dir = AffineFunc::zero(d);
    for (auto& c : dir.coeffs) c = coef(rng);
    if (dir.is_constant()) continue;
    const LpResult result = lp_optimize(dir, p);
    if (const auto* opt = std::get_if<LpOptimal>(&result)) anchors.push_back(opt->argmax);
  }

  std::uniform_int_distribution<int> weight(0, 12);
  std::vector<Point> out;
  out.reserve(count);
  while (out.size() < count) {
    Point x(d);
    Rational total = 0;
    for (const auto& a : anchors) {
      const Rational w = weight(rng);
      if (w.is_zero()) continue;
      total += w;
      for (std::size_t t = 0; t < d; ++t) x[t] += w * a[t];
    }
    if (total.is_zero()) continue;
    for (auto& c : x) c /= total;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace maxmin
