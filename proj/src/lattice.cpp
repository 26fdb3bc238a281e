#include "maxmin/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "maxmin/error.hpp"
#include "maxmin/lp.hpp"

namespace maxmin {

LatticePolynomial make_lattice(ComponentSet components, std::vector<Term> terms) {
  const std::size_t n = components.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "lattice polynomial without components");
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "lattice polynomial without terms");
  for (auto& t : terms) {
    if (t.empty()) throw Error(ErrorKind::InvalidArgument, "empty term");
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (t.back() >= n) throw Error(ErrorKind::InvalidArgument, "term index out of range");
  }
  return LatticePolynomial{std::move(components), std::move(terms)};
}

namespace {

CellOrder order_from_values(std::size_t cell, const std::vector<Rational>& values) {
  CellOrder out;
  out.cell = cell;
  out.order.resize(values.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::sort(out.order.begin(), out.order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t k = 1; k < out.order.size(); ++k) {
    if (values[out.order[k - 1]] == values[out.order[k]])
      throw Error(ErrorKind::TieDetected, "components " + std::to_string(out.order[k - 1]) + " and " +
                                              std::to_string(out.order[k]) + " tie on cell " +
                                              std::to_string(cell));
  }
  out.rank.resize(values.size());
  for (std::size_t k = 0; k < out.order.size(); ++k) out.rank[out.order[k]] = k;
  return out;
}

std::vector<Rational> values_at(const ComponentSet& c, const Point& x) {
  std::vector<Rational> v;
  v.reserve(c.size());
  for (const auto& g : c.components) v.push_back(g(x));
  return v;
}

std::size_t match_value(const std::vector<Rational>& values, const Rational& target) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != target) continue;
    if (hit) throw Error(ErrorKind::Ambiguous, "two components match f at a cell witness");
    hit = i;
  }
  if (!hit) throw Error(ErrorKind::NoMatch, "no component matches f at a cell witness");
  return *hit;
}

bool is_strict_superset(const Term& big, const Term& small) {
  return big.size() > small.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

CellOrder cell_order(const CellComplex& complex, std::size_t cell) {
  return order_from_values(cell, values_at(complex.arrangement().components, complex.cell(cell).witness));
}

std::size_t dominant_component(const PwlFunction& f, const ComponentSet& components,
                               const Cell& cell) {
  return match_value(values_at(components, cell.witness), eval_pwl(f, cell.witness));
}

std::size_t reduce_under_order(const std::vector<Term>& terms, const std::vector<std::size_t>& rank) {
  std::optional<std::size_t> best;
  for (const auto& t : terms) {
    std::size_t low = t.front();
    for (std::size_t i : t)
      if (rank[i] < rank[low]) low = i;
    if (!best || rank[low] > rank[*best]) best = low;
  }
  if (!best) throw Error(ErrorKind::InvalidArgument, "polynomial without terms");
  return *best;
}

Representation analyze(const PwlFunction& f, const BuildOptions& opts) {
  if (opts.validate) require_valid(f, opts.run);
  ComponentSet components = extract_components(f);
  Representation rep;
  if (components.size() == 1) {
    rep.cell_terms = {Term{0}};
    rep.polynomial = make_lattice(std::move(components), {Term{0}});
    return rep;
  }
  const Arrangement arr = build_hyperplanes(components, f.domain);
  rep.complex.emplace(enumerate_cells(arr, opts.run));
  const CellComplex& complex = *rep.complex;
  const std::size_t cells = complex.size();
  rep.orders.resize(cells);
  rep.dominant.resize(cells);
  rep.cell_terms.resize(cells);
  rep.values.resize(cells);
  parallel_for(cells, opts.run.threads, [&](std::size_t c) {
    const Point& w = complex.cell(c).witness;
    rep.values[c] = values_at(components, w);
    rep.orders[c] = order_from_values(c, rep.values[c]);
    const std::size_t nP = match_value(rep.values[c], eval_pwl(f, w));
    rep.dominant[c] = nP;
    Term s;
    for (std::size_t i = 0; i < components.size(); ++i)
      if (rep.values[c][i] >= rep.values[c][nP]) s.push_back(i);
    rep.cell_terms[c] = std::move(s);
  });
  LatticePolynomial raw = make_lattice(std::move(components), rep.cell_terms);
  rep.polynomial = opts.simplify ? simplify(raw) : std::move(raw);
  return rep;
}

LatticePolynomial build_representation(const PwlFunction& f, const BuildOptions& opts) {
  return analyze(f, opts).polynomial;
}

LatticePolynomial simplify(const LatticePolynomial& p) {
  std::vector<Term> unique;
  for (const auto& t : p.terms)
    if (std::find(unique.begin(), unique.end(), t) == unique.end()) unique.push_back(t);
  std::vector<Term> kept;
  for (const auto& t : unique) {
    const bool dominated = std::any_of(unique.begin(), unique.end(),
                                       [&](const Term& other) { return is_strict_superset(t, other); });
    if (!dominated) kept.push_back(t);
  }
  return LatticePolynomial{p.components, std::move(kept)};
}

Rational evaluate_lattice(const LatticePolynomial& p, const Point& x) {
  if (x.size() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from polynomial");
  if (p.terms.empty()) throw Error(ErrorKind::InvalidArgument, "polynomial without terms");
  const std::vector<Rational> v = values_at(p.components, x);
  std::optional<Rational> best;
  for (const auto& t : p.terms) {
    const Rational* low = &v.at(t.front());
    for (std::size_t i : t)
      if (v.at(i) < *low) low = &v[i];
    if (!best || *low > *best) best = *low;
  }
  return *best;
}

VerificationReport verify_symbolic(const PwlFunction& f, const LatticePolynomial& p,
                                   const RunOptions& opts) {
  if (p.dim() != f.dim())
    throw Error(ErrorKind::DimensionMismatch, "polynomial and function dimensions differ");
  VerificationReport report;
  report.components = extract_components(f);
  std::vector<std::size_t> remap;
  for (const auto& g : p.components.components) {
    auto idx = report.components.index_of(g);
    if (!idx) {
      report.components.components.push_back(g);
      idx = report.components.size() - 1;
    }
    remap.push_back(*idx);
  }
  std::vector<Term> terms;
  for (const auto& t : p.terms) {
    Term mapped;
    for (std::size_t i : t) mapped.push_back(remap.at(i));
    terms.push_back(std::move(mapped));
  }

  const CellComplex complex = enumerate_cells(build_hyperplanes(report.components, f.domain), opts);
  std::vector<std::optional<CellFailure>> results(complex.size());
  parallel_for(complex.size(), opts.threads, [&](std::size_t c) {
    const Point& w = complex.cell(c).witness;
    const std::vector<Rational> values = values_at(report.components, w);
    const CellOrder order = order_from_values(c, values);
    const std::size_t expected = match_value(values, eval_pwl(f, w));
    const std::size_t actual = reduce_under_order(terms, order.rank);
    if (actual == expected) return;
    CellFailure fail{c, w, expected, actual, std::nullopt};
    if (order.rank[actual] > order.rank[expected]) {
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (reduce_under_order({terms[j]}, order.rank) == actual) {
          fail.term = j;
          break;
        }
      }
    }
    results[c] = std::move(fail);
  });
  report.cells_checked = complex.size();
  for (auto& r : results)
    if (r) report.failures.push_back(std::move(*r));
  report.pass = report.failures.empty();
  return report;
}

bool is_lemma_witness(const Representation& rep, std::size_t p, std::size_t q, std::size_t k) {
  const auto& vp = rep.values.at(p);
  const auto& vq = rep.values.at(q);
  return vp.at(k) <= vp[rep.dominant[p]] && vq.at(k) >= vq[rep.dominant[q]];
}

namespace {

std::size_t inductive_witness(const Representation& rep, std::size_t p, std::size_t q) {
  const CellComplex& complex = *rep.complex;
  const Separation sep = separation(complex, p, q);
  if (sep.distance == 0) return rep.dominant[p];
  // Step to a neighbor R of P one unit closer to Q.
  std::optional<std::size_t> next;
  SignVector s = complex.cell(p).signs;
  for (std::size_t h : sep.hyperplanes) {
    s[h] = static_cast<std::int8_t>(-s[h]);
    next = complex.find(s);
    s[h] = static_cast<std::int8_t>(-s[h]);
    if (next) break;
  }
  if (!next) throw Error(ErrorKind::NoWitness, "no neighbor of the cell lies on a geodesic to the target");
  const std::size_t r = *next;
  const Separation pr = separation(complex, p, r);
  const Separation rq = separation(complex, r, q);
  if (pr.distance != 1 || rq.distance + 1 != sep.distance ||
      !std::binary_search(sep.hyperplanes.begin(), sep.hyperplanes.end(), pr.hyperplanes.front()))
    throw Error(ErrorKind::NoWitness, "hyperplane separating P and R does not separate P and Q");
  const std::size_t k = inductive_witness(rep, r, q);
  const auto& vp = rep.values[p];
  if (vp[k] <= vp[rep.dominant[p]]) return k;
  return rep.dominant[p];
}

}  // namespace

std::size_t lemma_witness(const Representation& rep, std::size_t p, std::size_t q,
                          LemmaStrategy strategy) {
  if (!rep.complex) {
    // Single component: f is that component everywhere.
    return 0;
  }
  if (p >= rep.complex->size() || q >= rep.complex->size())
    throw Error(ErrorKind::InvalidArgument, "lemma_witness: cell id out of range");
  if (strategy == LemmaStrategy::Brute) {
    for (std::size_t k = 0; k < rep.values[p].size(); ++k)
      if (is_lemma_witness(rep, p, q, k)) return k;
    throw Error(ErrorKind::NoWitness, "no component separates the two cells");
  }
  const std::size_t k = inductive_witness(rep, p, q);
  if (!is_lemma_witness(rep, p, q, k))
    throw Error(ErrorKind::NoWitness, "inductive construction produced an invalid witness");
  return k;
}

PwlFunction lattice_to_pwl(const LatticePolynomial& p, const Polyhedron& gamma, const RunOptions& opts) {
  if (p.dim() != gamma.dim())
    throw Error(ErrorKind::DimensionMismatch, "polynomial and domain dimensions differ");
  const CellComplex complex = enumerate_cells(build_hyperplanes(p.components, gamma), opts);
  PwlFunction out{gamma, std::vector<Piece>(complex.size())};
  parallel_for(complex.size(), opts.threads, [&](std::size_t c) {
    const CellOrder order = cell_order(complex, c);
    const std::size_t k = reduce_under_order(p.terms, order.rank);
    out.pieces[c] = Piece{complex.closure(c), p.components.components[k]};
  });
  return out;
}

std::vector<LatticePolynomial> build_representation_vector(const std::vector<PwlFunction>& fs,
                                                           const BuildOptions& opts) {
  for (const auto& f : fs)
    if (!(f.domain == fs.front().domain))
      throw Error(ErrorKind::DomainMismatch, "coordinate functions have different domains");
  std::vector<LatticePolynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(build_representation(f, opts));
  return out;
}

}  // namespace maxmin
