#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "maxmin/rational.hpp"

namespace maxmin {

/// g(x) = coeffs . x + offset
struct AffineFunc {
  std::vector<Rational> coeffs;
  Rational offset;

  AffineFunc() = default;
  AffineFunc(std::vector<Rational> c, Rational b) : coeffs(std::move(c)), offset(std::move(b)) {}

  static AffineFunc zero(std::size_t dim) { return {std::vector<Rational>(dim), Rational(0)}; }
  static AffineFunc constant(std::size_t dim, Rational value) {
    return {std::vector<Rational>(dim), std::move(value)};
  }
  /// The coordinate function x_i.
  static AffineFunc coordinate(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coeffs.size(); }
  Rational operator()(const Point& x) const;
  bool is_constant() const;

  AffineFunc operator-(const AffineFunc& o) const;
  AffineFunc operator+(const AffineFunc& o) const;
  AffineFunc scaled(const Rational& s) const;

  friend bool operator==(const AffineFunc&, const AffineFunc&) = default;
};

enum class Strictness { Closed, Open };

/// {x : normal . x <= bound}, or < when open.
struct Halfspace {
  std::vector<Rational> normal;
  Rational bound;
  Strictness strictness = Strictness::Closed;

  Halfspace() = default;
  /// Throws ZeroNormal for a zero normal vector.
  Halfspace(std::vector<Rational> n, Rational b, Strictness s = Strictness::Closed);

  std::size_t dim() const { return normal.size(); }
  bool contains(const Point& x) const;
  Halfspace as_open() const { return {normal, bound, Strictness::Open}; }
  Halfspace as_closed() const { return {normal, bound, Strictness::Closed}; }
  /// Complement with the opposite strictness: normal . x > bound (or >=).
  Halfspace complement() const;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Closed convex polyhedron in H-representation. An empty halfspace list is
/// the whole space.
class Polyhedron {
public:
  Polyhedron() = default;
  explicit Polyhedron(std::size_t dim) : dim_(dim) {}
  Polyhedron(std::size_t dim, std::vector<Halfspace> halfspaces);

  /// Axis-aligned box [lo_i, hi_i].
  static Polyhedron box(const std::vector<Rational>& lo, const std::vector<Rational>& hi);
  static Polyhedron cube(std::size_t dim, const Rational& lo, const Rational& hi);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  bool contains(const Point& x) const;
  bool contains_strictly(const Point& x) const;

  Polyhedron& add(Halfspace h);
  Polyhedron intersect(const Polyhedron& other) const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> halfspaces_;
};

/// Hyperplane {x : normal . x = offset} in canonical form (first nonzero
/// normal coordinate is 1). `generators` holds the component pairs (i, j),
/// i < j, whose difference vanishes exactly on it.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;
  std::set<std::pair<std::size_t, std::size_t>> generators;

  std::size_t dim() const { return normal.size(); }
  /// Sign of normal . x - offset.
  int side(const Point& x) const;
  /// {x : normal . x <= offset} for sign < 0, {x : normal . x >= offset} for
  /// sign > 0.
  Halfspace halfspace(int sign, Strictness s) const;
  bool same_set(const Hyperplane& o) const { return normal == o.normal && offset == o.offset; }
};

/// Canonical form of {x : a . x = b}. Throws ZeroNormal when a = 0.
Hyperplane normalize_hyperplane(std::vector<Rational> a, Rational b);

}  // namespace maxmin
