#pragma once

#include <stdexcept>
#include <string>

namespace maxmin {

enum class ErrorKind {
  DivisionByZero,
  Parse,
  DimensionMismatch,
  ZeroNormal,
  OutsideDomain,
  DegenerateDomain,
  InvalidPwl,
  NoPath,
  TieDetected,
  NoMatch,
  Ambiguous,
  NoWitness,
  DomainMismatch,
  CenterNotInterior,
  InconsistentBoundaryData,
  TargetDoesNotContainDomain,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` carries the failure class.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace maxmin
