#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace maxmin {

/// Exact fraction backed by GMP. Always canonical: lowest terms, positive
/// denominator.
class Rational {
public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT: implicit from small integers
  Rational(long v) : value_(v) {}  // NOLINT
  Rational(long long v);           // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Accepts "p", "p/q" and "-p/q" with arbitrary-length integers.
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(::abs(value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Point = std::vector<Rational>;

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Parses "x1,x2,..." (whitespace tolerated) into a point.
Point parse_point(std::string_view text);
std::string to_string(const Point& p);

}  // namespace maxmin
