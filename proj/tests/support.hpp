#pragma once

// Fixtures and random generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "maxmin/geometry.hpp"
#include "maxmin/lattice.hpp"
#include "maxmin/pwl.hpp"

namespace maxmin::testing {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline AffineFunc affine(std::vector<Rational> coeffs, Rational offset) {
  return AffineFunc(std::move(coeffs), std::move(offset));
}

inline Polyhedron interval(const Rational& lo, const Rational& hi) { return Polyhedron::box({lo}, {hi}); }

/// |x| on [-1, 1] as ([-1,0], -x), ([0,1], x).
inline PwlFunction fixture_a() {
  return PwlFunction{interval(-1, 1),
                     {Piece{interval(-1, 0), affine({-1}, 0)}, Piece{interval(0, 1), affine({1}, 0)}}};
}

/// clamp(x, 0, 1) on [-2, 2].
inline PwlFunction fixture_b() {
  return PwlFunction{interval(-2, 2),
                     {Piece{interval(-2, 0), affine({0}, 0)}, Piece{interval(0, 1), affine({1}, 0)},
                      Piece{interval(1, 2), affine({0}, 1)}}};
}

/// max(x1, x2) on [-1, 1]^2 as two triangles.
inline PwlFunction fixture_d() {
  const Polyhedron square = Polyhedron::cube(2, -1, 1);
  Polyhedron lower = square;  // x2 <= x1
  lower.add(Halfspace({-1, 1}, 0));
  Polyhedron upper = square;  // x1 <= x2
  upper.add(Halfspace({1, -1}, 0));
  return PwlFunction{square, {Piece{lower, affine({1, 0}, 0)}, Piece{upper, affine({0, 1}, 0)}}};
}

/// clamp(x, 0, 1) restricted to [-1, 1].
inline PwlFunction clamp_on_unit() {
  return PwlFunction{interval(-1, 1), {Piece{interval(-1, 0), affine({0}, 0)}, Piece{interval(0, 1), affine({1}, 0)}}};
}

/// Random rational with |numerator| <= max_num and denominator in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Random point of the box [lo, hi]^d with denominators up to max_den.
inline Point random_point_in_cube(std::mt19937_64& rng, std::size_t d, long lo, long hi, long max_den = 24) {
  std::uniform_int_distribution<long> den(1, max_den);
  Point x;
  for (std::size_t k = 0; k < d; ++k) {
    const long dd = den(rng);
    std::uniform_int_distribution<long> num(lo * dd, hi * dd);
    x.push_back(Rational(num(rng), dd));
  }
  return x;
}

/// Random distinct components: coefficients p/q with |p|, q <= 10.
inline ComponentSet random_components(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  std::vector<AffineFunc> out;
  while (out.size() < n) {
    AffineFunc g = AffineFunc::zero(d);
    for (auto& c : g.coeffs) c = random_rational(rng, 10, 10);
    g.offset = random_rational(rng, 10, 10);
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  return make_component_set(std::move(out));
}

/// Random polynomial over n <= 5 components in d <= 3 with 1..4 random
/// nonempty terms.
inline LatticePolynomial random_lattice(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  ComponentSet comps = random_components(rng, n, d);
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_int_distribution<unsigned> mask(1, (1u << n) - 1);
  std::vector<Term> terms;
  const int count = term_count(rng);
  for (int t = 0; t < count; ++t) {
    const unsigned m = mask(rng);
    Term term;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) term.push_back(i);
    terms.push_back(std::move(term));
  }
  return make_lattice(std::move(comps), std::move(terms));
}

/// Independent reference evaluation of max_j min_{i in S_j} g_i(x).
inline Rational brute_lattice_value(const LatticePolynomial& p, const Point& x) {
  std::optional<Rational> best;
  for (const auto& term : p.terms) {
    std::optional<Rational> low;
    for (std::size_t i : term) {
      const Rational v = p.components.components[i](x);
      if (!low || v < *low) low = v;
    }
    if (!best || *low > *best) best = *low;
  }
  return *best;
}

/// Uniform rational grid with `count` points spread over [lo, hi]^d.
inline std::vector<Point> grid_points(std::size_t d, const Rational& lo, const Rational& hi, std::size_t count) {
  std::size_t per_axis = 1;
  while (true) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= per_axis;
    if (total >= count) break;
    ++per_axis;
  }
  std::vector<Point> out;
  std::vector<std::size_t> idx(d, 0);
  while (out.size() < count) {
    Point x(d);
    for (std::size_t k = 0; k < d; ++k)
      x[k] = lo + (hi - lo) * Rational(static_cast<long>(idx[k])) / Rational(static_cast<long>(per_axis - 1));
    out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < d && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == d) break;
  }
  return out;
}

}  // namespace maxmin::testing
