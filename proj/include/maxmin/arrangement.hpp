#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "maxmin/geometry.hpp"
#include "maxmin/parallel.hpp"
#include "maxmin/pwl.hpp"

namespace maxmin {

using SignVector = std::vector<std::int8_t>;

/// Hyperplanes {g_i = g_j} that meet the interior of the domain.
struct Arrangement {
  Polyhedron domain;
  std::vector<Hyperplane> hyperplanes;
  /// witnesses[h] lies on hyperplanes[h] and strictly inside the domain.
  std::vector<Point> witnesses;
  ComponentSet components;
};

/// Full-dimensional region of int(domain) minus the hyperplanes. signs[h] is
/// the sign of normal . x - offset on the cell.
struct Cell {
  std::size_t id = 0;
  SignVector signs;
  Point witness;
};

class CellComplex {
public:
  CellComplex(Arrangement arrangement, std::vector<Cell> cells);

  const Arrangement& arrangement() const { return arrangement_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::size_t id) const { return cells_.at(id); }
  std::size_t size() const { return cells_.size(); }

  std::optional<std::size_t> find(const SignVector& signs) const;
  /// Cells whose sign vector differs from `id` in exactly one position.
  const std::vector<std::size_t>& neighbors(std::size_t id) const;

  /// Closure of the cell: domain plus closed sign constraints.
  Polyhedron closure(std::size_t id) const;
  /// Strict description: open domain and open sign constraints.
  std::vector<Halfspace> open_constraints(std::size_t id) const;

private:
  Arrangement arrangement_;
  std::vector<Cell> cells_;
  std::map<SignVector, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Canonical, deduplicated hyperplanes among `candidates` that meet
/// int(domain); generators of coincident candidates are merged. Throws
/// DegenerateDomain when the domain has empty interior.
Arrangement make_arrangement(const Polyhedron& domain, const std::vector<Hyperplane>& candidates);

/// Arrangement of the pairwise equality hyperplanes of `components` inside
/// `gamma`. Parallel pairs (equal slopes, different offsets) never meet and
/// are skipped.
Arrangement build_hyperplanes(const ComponentSet& components, const Polyhedron& gamma);

/// All full-dimensional cells, in lexicographic sign-vector order (- < +),
/// each with a strict interior witness. Ids are the ranks in that order.
CellComplex enumerate_cells(const Arrangement& arr, const RunOptions& opts = {});

struct Separation {
  std::vector<std::size_t> hyperplanes;
  std::size_t distance = 0;
};

Separation separation(const CellComplex& complex, std::size_t p, std::size_t q);

/// Shortest chain of pairwise adjacent cells from p to q (breadth-first).
/// Throws NoPath if the chain is missing or longer than the separation
/// distance.
std::vector<std::size_t> geodesic(const CellComplex& complex, std::size_t p, std::size_t q);

/// Sign pattern absent from the complex is infeasible (direct LP check).
bool sign_vector_infeasible(const Arrangement& arr, const SignVector& signs);

}  // namespace maxmin
