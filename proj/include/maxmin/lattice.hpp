#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxmin/arrangement.hpp"
#include "maxmin/parallel.hpp"
#include "maxmin/pwl.hpp"

namespace maxmin {

using Term = std::vector<std::size_t>;

/// max over terms of (min over i in term of components[i]). Indices are
/// 0-based; each term is sorted and duplicate-free.
struct LatticePolynomial {
  ComponentSet components;
  std::vector<Term> terms;

  std::size_t dim() const { return components.dim(); }
};

/// Validates ranges, sorts each term and rejects empty terms.
LatticePolynomial make_lattice(ComponentSet components, std::vector<Term> terms);

/// Components sorted ascending by value on a cell.
struct CellOrder {
  std::size_t cell = 0;
  std::vector<std::size_t> order;
  /// rank[i] is the position of component i in `order`.
  std::vector<std::size_t> rank;
};

/// Throws TieDetected if two components agree at the cell witness.
CellOrder cell_order(const CellComplex& complex, std::size_t cell);

/// Index of the component equal to f at the cell witness. Throws NoMatch or
/// Ambiguous.
std::size_t dominant_component(const PwlFunction& f, const ComponentSet& components,
                               const Cell& cell);

/// Everything the max-min construction computes on the way: the cell
/// complex, per-cell orders and dominant components, and the unsimplified
/// per-cell terms S_P = {i : g_i >= g_n(P) on P}.
struct Representation {
  LatticePolynomial polynomial;
  std::optional<CellComplex> complex;  ///< absent for single-component input
  std::vector<CellOrder> orders;
  std::vector<std::size_t> dominant;
  std::vector<Term> cell_terms;
  /// values[c][i] = g_i(witness of cell c)
  std::vector<std::vector<Rational>> values;
};

struct BuildOptions {
  RunOptions run;
  bool simplify = true;
  bool validate = true;
};

Representation analyze(const PwlFunction& f, const BuildOptions& opts = {});

LatticePolynomial build_representation(const PwlFunction& f, const BuildOptions& opts = {});

/// Drops duplicate terms and terms that strictly contain another term.
/// First-occurrence order of the survivors is kept.
LatticePolynomial simplify(const LatticePolynomial& p);

Rational evaluate_lattice(const LatticePolynomial& p, const Point& x);

/// Index of the component the polynomial reduces to under a cell order:
/// the order-maximum of the order-minima of the terms.
std::size_t reduce_under_order(const std::vector<Term>& terms, const std::vector<std::size_t>& rank);

struct CellFailure {
  std::size_t cell = 0;
  Point witness;
  std::size_t expected = 0;  ///< component equal to f on the cell
  std::size_t actual = 0;    ///< component the polynomial reduces to
  std::optional<std::size_t> term;  ///< term exceeding f, if any
};

struct VerificationReport {
  bool pass = true;
  std::size_t cells_checked = 0;
  /// Components of the joint arrangement (f's components followed by the
  /// polynomial's extra ones); CellFailure indices refer to this list.
  ComponentSet components;
  std::vector<CellFailure> failures;
};

/// Proves f == p on the whole domain: on every cell of the joint arrangement
/// of both component sets all components are linearly ordered, so each term
/// reduces to one component and the polynomial to the order-maximum of
/// those. The check passes iff that equals f's component on every cell.
VerificationReport verify_symbolic(const PwlFunction& f, const LatticePolynomial& p,
                                   const RunOptions& opts = {});

enum class LemmaStrategy { Brute, Inductive };

/// k with g_k <= f on cell p and g_k >= f on cell q. Throws NoWitness.
std::size_t lemma_witness(const Representation& rep, std::size_t p, std::size_t q,
                          LemmaStrategy strategy);

/// True iff g_k <= f on p and g_k >= f on q (checked at the witnesses).
bool is_lemma_witness(const Representation& rep, std::size_t p, std::size_t q, std::size_t k);

/// Compiles a polynomial into pieces, one per cell of its arrangement on
/// gamma.
PwlFunction lattice_to_pwl(const LatticePolynomial& p, const Polyhedron& gamma,
                           const RunOptions& opts = {});

/// One polynomial per coordinate function; all must share the same domain.
std::vector<LatticePolynomial> build_representation_vector(const std::vector<PwlFunction>& fs,
                                                           const BuildOptions& opts = {});

}  // namespace maxmin
