#include "maxmin/geometry.hpp"

#include <algorithm>

#include "maxmin/error.hpp"

namespace maxmin {

namespace {

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

void check_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dimension mismatch");
}

}  // namespace

AffineFunc AffineFunc::coordinate(std::size_t dim, std::size_t i) {
  AffineFunc g = zero(dim);
  g.coeffs.at(i) = 1;
  return g;
}

Rational AffineFunc::operator()(const Point& x) const {
  check_dim(x.size(), dim(), "affine evaluation");
  return dot(coeffs, x) + offset;
}

bool AffineFunc::is_constant() const { return all_zero(coeffs); }

AffineFunc AffineFunc::operator-(const AffineFunc& o) const {
  check_dim(o.dim(), dim(), "affine difference");
  AffineFunc r = *this;
  for (std::size_t k = 0; k < dim(); ++k) r.coeffs[k] -= o.coeffs[k];
  r.offset -= o.offset;
  return r;
}

AffineFunc AffineFunc::operator+(const AffineFunc& o) const {
  check_dim(o.dim(), dim(), "affine sum");
  AffineFunc r = *this;
  for (std::size_t k = 0; k < dim(); ++k) r.coeffs[k] += o.coeffs[k];
  r.offset += o.offset;
  return r;
}

AffineFunc AffineFunc::scaled(const Rational& s) const {
  AffineFunc r = *this;
  for (auto& c : r.coeffs) c *= s;
  r.offset *= s;
  return r;
}

Halfspace::Halfspace(std::vector<Rational> n, Rational b, Strictness s)
    : normal(std::move(n)), bound(std::move(b)), strictness(s) {
  if (all_zero(normal)) throw Error(ErrorKind::ZeroNormal, "halfspace with zero normal");
}

bool Halfspace::contains(const Point& x) const {
  const Rational lhs = dot(normal, x);
  return strictness == Strictness::Closed ? lhs <= bound : lhs < bound;
}

Halfspace Halfspace::complement() const {
  std::vector<Rational> n;
  n.reserve(normal.size());
  for (const auto& c : normal) n.push_back(-c);
  return {std::move(n), -bound,
          strictness == Strictness::Closed ? Strictness::Open : Strictness::Closed};
}

Polyhedron::Polyhedron(std::size_t dim, std::vector<Halfspace> halfspaces) : dim_(dim) {
  for (auto& h : halfspaces) add(std::move(h));
}

Polyhedron Polyhedron::box(const std::vector<Rational>& lo, const std::vector<Rational>& hi) {
  check_dim(lo.size(), hi.size(), "box");
  const std::size_t d = lo.size();
  Polyhedron p(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> e(d);
    e[i] = 1;
    p.add(Halfspace(e, hi[i]));
    e[i] = -1;
    p.add(Halfspace(e, -lo[i]));
  }
  return p;
}

Polyhedron Polyhedron::cube(std::size_t dim, const Rational& lo, const Rational& hi) {
  return box(std::vector<Rational>(dim, lo), std::vector<Rational>(dim, hi));
}

bool Polyhedron::contains(const Point& x) const {
  check_dim(x.size(), dim_, "polyhedron membership");
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return h.as_closed().contains(x); });
}

bool Polyhedron::contains_strictly(const Point& x) const {
  check_dim(x.size(), dim_, "polyhedron membership");
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return h.as_open().contains(x); });
}

Polyhedron& Polyhedron::add(Halfspace h) {
  check_dim(h.dim(), dim_, "polyhedron constraint");
  h.strictness = Strictness::Closed;
  halfspaces_.push_back(std::move(h));
  return *this;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  check_dim(other.dim_, dim_, "polyhedron intersection");
  Polyhedron r = *this;
  for (const auto& h : other.halfspaces_) r.add(h);
  return r;
}

int Hyperplane::side(const Point& x) const { return (dot(normal, x) - offset).sign(); }

Halfspace Hyperplane::halfspace(int sign, Strictness s) const {
  if (sign < 0) return {normal, offset, s};
  std::vector<Rational> n;
  n.reserve(normal.size());
  for (const auto& c : normal) n.push_back(-c);
  return {std::move(n), -offset, s};
}

Hyperplane normalize_hyperplane(std::vector<Rational> a, Rational b) {
  const auto lead = std::find_if(a.begin(), a.end(), [](const Rational& r) { return !r.is_zero(); });
  if (lead == a.end()) throw Error(ErrorKind::ZeroNormal, "hyperplane with zero normal");
  const Rational scale = *lead;
  for (auto& c : a) c /= scale;
  b /= scale;
  return Hyperplane{std::move(a), std::move(b), {}};
}

}  // namespace maxmin
