#include "maxmin/rational.hpp"

#include <cctype>
#include <ostream>

#include "maxmin/error.hpp"

namespace maxmin {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::DegenerateDomain: return "DegenerateDomain";
    case ErrorKind::InvalidPwl: return "InvalidPwl";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::TieDetected: return "TieDetected";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::CenterNotInterior: return "CenterNotInterior";
    case ErrorKind::InconsistentBoundaryData: return "InconsistentBoundaryData";
    case ErrorKind::TargetDoesNotContainDomain: return "TargetDoesNotContainDomain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(long long v) : value_(static_cast<long>(v)) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  num = trim(num);
  den = trim(den);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  return Rational(q);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

Point parse_point(std::string_view text) {
  Point p;
  text = trim(text);
  if (text.empty()) return p;
  while (true) {
    const auto comma = text.find(',');
    p.push_back(Rational::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return p;
}

std::string to_string(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i].to_string();
  }
  return out;
}

}  // namespace maxmin
