#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxmin/geometry.hpp"
#include "maxmin/parallel.hpp"

namespace maxmin {

struct Piece {
  Polyhedron region;
  AffineFunc func;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// A function on `domain` given by a finite cover with affine pieces.
struct PwlFunction {
  Polyhedron domain;
  std::vector<Piece> pieces;

  std::size_t dim() const { return domain.dim(); }

  friend bool operator==(const PwlFunction&, const PwlFunction&) = default;
};

enum class Violation {
  DegenerateDomain,
  PieceOutsideDomain,
  OverlapMismatch,
  CoverGap,
  ContinuityBreak,
};

const char* to_string(Violation v);

struct ViolationEntry {
  Violation kind;
  std::optional<std::size_t> piece;        ///< first piece involved
  std::optional<std::size_t> other_piece;  ///< second piece for pair checks
  std::optional<Point> witness;            ///< uncovered point for CoverGap
  std::string detail;
};

struct ValidationReport {
  std::vector<ViolationEntry> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation v) const;
};

/// Checks well-formedness: nondegenerate domain, pieces inside the domain,
/// consistent overlaps, full cover and continuity across piece boundaries.
ValidationReport validate_pwl(const PwlFunction& f, const RunOptions& opts = {});

/// Throws InvalidPwl with the report summary when `f` is not valid.
void require_valid(const PwlFunction& f, const RunOptions& opts = {});

/// Value at x via the first piece containing x. Throws OutsideDomain when
/// x is outside the domain and NoMatch when no piece contains it.
Rational eval_pwl(const PwlFunction& f, const Point& x);

struct ComponentSet {
  std::vector<AffineFunc> components;
  /// Component index per piece. Lower-dimensional pieces whose function is
  /// not among the components map to nullopt.
  std::vector<std::optional<std::size_t>> piece_to_component;

  std::size_t size() const { return components.size(); }
  std::size_t dim() const { return components.empty() ? 0 : components.front().dim(); }
  std::optional<std::size_t> index_of(const AffineFunc& g) const;
};

/// Distinct functions of the full-dimensional pieces in first-occurrence
/// order.
ComponentSet extract_components(const PwlFunction& f);

/// Component set built from a plain list (duplicates rejected).
ComponentSet make_component_set(std::vector<AffineFunc> components);

}  // namespace maxmin
