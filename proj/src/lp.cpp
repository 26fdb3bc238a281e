#include "maxmin/lp.hpp"

#include "maxmin/error.hpp"

namespace maxmin {

namespace {

// a . x <= b over free variables x.
struct Row {
  std::vector<mpq_class> a;
  mpq_class b;
};

enum class Status { Optimal, Unbounded, Infeasible };

struct RawSolution {
  Status status = Status::Infeasible;
  mpq_class value;
  std::vector<mpq_class> x;
  std::vector<mpq_class> dual;
};

// Dense tableau over the standard form
//   A x+ - A x- + S s + art = |b|,   x+, x-, s, art >= 0
// where S = diag(+-1) flips rows with negative right-hand side.
class Tableau {
public:
  Tableau(std::size_t n, const std::vector<Row>& rows) : n_(n), m_(rows.size()) {
    std::size_t nart = 0;
    for (const auto& r : rows)
      if (sgn(r.b) < 0) ++nart;
    cols_ = 2 * n_ + m_ + nart;
    art_begin_ = 2 * n_ + m_;
    t_.assign(m_, std::vector<mpq_class>(cols_));
    rhs_.resize(m_);
    basis_.resize(m_);
    std::size_t next_art = art_begin_;
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(rows[i].b) < 0;
      for (std::size_t k = 0; k < n_; ++k) {
        mpq_class a = flip ? mpq_class(-rows[i].a[k]) : rows[i].a[k];
        t_[i][n_ + k] = -a;
        t_[i][k] = std::move(a);
      }
      t_[i][2 * n_ + i] = flip ? -1 : 1;
      rhs_[i] = flip ? mpq_class(-rows[i].b) : rows[i].b;
      if (flip) {
        t_[i][next_art] = 1;
        basis_[i] = next_art++;
      } else {
        basis_[i] = 2 * n_ + i;
      }
    }
    reduced_.assign(cols_, 0);
  }

  RawSolution solve(const std::vector<mpq_class>& cost) {
    RawSolution out;
    if (art_begin_ < cols_) {
      // Phase 1: maximize -sum(art).
      objective_ = 0;
      std::fill(reduced_.begin(), reduced_.end(), 0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < art_begin_) continue;
        objective_ -= rhs_[i];
        for (std::size_t j = 0; j < art_begin_; ++j) reduced_[j] += t_[i][j];
      }
      run(cols_);
      if (sgn(objective_) < 0) {
        out.status = Status::Infeasible;
        return out;
      }
      drive_out_artificials();
    }
    // Phase 2.
    std::vector<mpq_class> c(cols_, 0);
    for (std::size_t k = 0; k < n_; ++k) {
      c[k] = cost[k];
      c[n_ + k] = -cost[k];
    }
    reduced_ = c;
    objective_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const mpq_class& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      objective_ += cb * rhs_[i];
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (sgn(t_[i][j]) != 0) reduced_[j] -= cb * t_[i][j];
    }
    for (std::size_t i = 0; i < m_; ++i) reduced_[basis_[i]] = 0;
    if (!run(art_begin_)) {
      out.status = Status::Unbounded;
      return out;
    }
    out.status = Status::Optimal;
    out.value = objective_;
    std::vector<mpq_class> z(cols_, 0);
    for (std::size_t i = 0; i < m_; ++i) z[basis_[i]] = rhs_[i];
    out.x.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) out.x[k] = z[k] - z[n_ + k];
    out.dual.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) out.dual[i] = -reduced_[2 * n_ + i];
    return out;
  }

private:
  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(std::size_t limit) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(reduced_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = m_;
      mpq_class best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        mpq_class ratio = rhs_[i] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin_) continue;
      // Slack columns give the non-artificial part full row rank, so a
      // nonzero entry always exists.
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
      if (basis_[i] >= art_begin_)
        throw Error(ErrorKind::InvalidArgument, "simplex: artificial variable stuck in basis");
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    std::vector<mpq_class>& prow = t_[r];
    const mpq_class p = prow[col];
    std::vector<std::size_t> nz;
    nz.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(prow[j]) == 0) continue;
      prow[j] /= p;
      nz.push_back(j);
    }
    rhs_[r] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(t_[i][col]) == 0) continue;
      const mpq_class f = t_[i][col];
      for (std::size_t j : nz) t_[i][j] -= f * prow[j];
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(reduced_[col]) != 0) {
      const mpq_class f = reduced_[col];
      for (std::size_t j : nz) reduced_[j] -= f * prow[j];
      objective_ += f * rhs_[r];
    }
    basis_[r] = col;
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::size_t art_begin_ = 0;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> reduced_;
  mpq_class objective_;
};

bool positive_multiple(const Row& a, const Row& b) {
  std::size_t k = 0;
  while (k < a.a.size() && sgn(a.a[k]) == 0) ++k;
  if (k == a.a.size()) return false;
  if (sgn(b.a[k]) == 0 || sgn(a.a[k]) != sgn(b.a[k])) return false;
  const mpq_class ratio = b.a[k] / a.a[k];
  for (std::size_t j = 0; j < a.a.size(); ++j)
    if (b.a[j] != ratio * a.a[j]) return false;
  return b.b == ratio * a.b;
}

// Solves max cost . x s.t. rows. When `origin` is given the problem is
// shifted to x = origin + y, so rows satisfied at origin need no artificial
// variable. Rows that are positive multiples of an earlier row are dropped
// (their dual multiplier is zero).
RawSolution simplex(std::size_t n, const std::vector<Row>& rows, const std::vector<mpq_class>& cost,
                    const std::vector<mpq_class>* origin = nullptr) {
  std::vector<Row> kept;
  std::vector<std::size_t> source;
  kept.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool dup = false;
    for (const auto& r : kept) {
      if (positive_multiple(r, rows[i])) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    kept.push_back(rows[i]);
    source.push_back(i);
  }
  if (origin) {
    for (auto& r : kept)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(r.a[k]) != 0) r.b -= r.a[k] * (*origin)[k];
  }
  Tableau tab(n, kept);
  RawSolution raw = tab.solve(cost);
  if (raw.status != Status::Optimal) return raw;
  if (origin) {
    for (std::size_t k = 0; k < n; ++k) {
      raw.value += cost[k] * (*origin)[k];
      raw.x[k] += (*origin)[k];
    }
  }
  std::vector<mpq_class> dual(rows.size(), 0);
  for (std::size_t i = 0; i < source.size(); ++i) dual[source[i]] = raw.dual[i];
  raw.dual = std::move(dual);
  return raw;
}

std::vector<mpq_class> raw_point(const Point& p) {
  std::vector<mpq_class> out;
  out.reserve(p.size());
  for (const auto& r : p) out.push_back(r.raw());
  return out;
}

std::vector<Row> rows_of(const Polyhedron& p) {
  std::vector<Row> rows;
  rows.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) {
    Row r;
    r.a.reserve(h.dim());
    for (const auto& c : h.normal) r.a.push_back(c.raw());
    r.b = h.bound.raw();
    rows.push_back(std::move(r));
  }
  return rows;
}

Point to_point(const std::vector<mpq_class>& x, std::size_t count) {
  Point p;
  p.reserve(count);
  for (std::size_t k = 0; k < count; ++k) p.emplace_back(x[k]);
  return p;
}

}  // namespace

LpResult lp_optimize(const AffineFunc& objective, const Polyhedron& constraints) {
  return lp_optimize(objective, constraints, nullptr);
}

LpResult lp_optimize(const AffineFunc& objective, const Polyhedron& constraints, const Point* start) {
  if (objective.dim() != constraints.dim())
    throw Error(ErrorKind::DimensionMismatch, "lp_optimize: objective and constraint dimensions differ");
  if (start && start->size() != constraints.dim())
    throw Error(ErrorKind::DimensionMismatch, "lp_optimize: start point dimension");
  std::vector<mpq_class> cost;
  cost.reserve(objective.dim());
  for (const auto& c : objective.coeffs) cost.push_back(c.raw());
  std::vector<mpq_class> origin;
  if (start) origin = raw_point(*start);
  RawSolution raw = simplex(constraints.dim(), rows_of(constraints), cost, start ? &origin : nullptr);
  switch (raw.status) {
    case Status::Infeasible: return LpInfeasible{};
    case Status::Unbounded: return LpUnbounded{};
    case Status::Optimal: break;
  }
  LpOptimal opt;
  opt.optimum = Rational(raw.value) + objective.offset;
  opt.argmax = to_point(raw.x, constraints.dim());
  opt.dual.reserve(raw.dual.size());
  for (const auto& u : raw.dual) opt.dual.emplace_back(u);
  return opt;
}

bool verify_dual_certificate(const AffineFunc& objective, const Polyhedron& constraints,
                             const LpOptimal& solution) {
  const auto& hs = constraints.halfspaces();
  if (solution.dual.size() != hs.size()) return false;
  if (!constraints.contains(solution.argmax)) return false;
  if (objective(solution.argmax) != solution.optimum) return false;
  std::vector<Rational> combo(constraints.dim());
  Rational bound_combo = objective.offset;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (solution.dual[i].sign() < 0) return false;
    for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += solution.dual[i] * hs[i].normal[k];
    bound_combo += solution.dual[i] * hs[i].bound;
  }
  return combo == objective.coeffs && bound_combo == solution.optimum;
}

std::optional<Point> find_point(std::size_t dim, std::span<const Halfspace> constraints) {
  return find_point(dim, constraints, nullptr);
}

std::optional<Point> find_point(std::size_t dim, std::span<const Halfspace> constraints, const Point* start) {
  if (start && start->size() != dim) throw Error(ErrorKind::DimensionMismatch, "find_point: start point dimension");
  // Variables (x, t); open rows become normal . x + t <= bound, plus t <= 1.
  std::vector<Row> rows;
  rows.reserve(constraints.size() + 1);
  bool any_open = false;
  for (const auto& h : constraints) {
    if (h.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "find_point: constraint dimension");
    Row r;
    r.a.reserve(dim + 1);
    for (const auto& c : h.normal) r.a.push_back(c.raw());
    const bool open = h.strictness == Strictness::Open;
    any_open = any_open || open;
    r.a.emplace_back(open ? 1 : 0);
    r.b = h.bound.raw();
    rows.push_back(std::move(r));
  }
  Row cap;
  cap.a.assign(dim + 1, 0);
  cap.a[dim] = 1;
  cap.b = 1;
  rows.push_back(std::move(cap));
  std::vector<mpq_class> cost(dim + 1, 0);
  cost[dim] = 1;
  std::vector<mpq_class> origin;
  if (start) {
    origin = raw_point(*start);
    origin.emplace_back(0);
  }
  RawSolution raw = simplex(dim + 1, rows, cost, start ? &origin : nullptr);
  if (raw.status != Status::Optimal) return std::nullopt;
  if (any_open && sgn(raw.value) <= 0) return std::nullopt;
  return to_point(raw.x, dim);
}

std::optional<Point> interior_point(const Polyhedron& p) {
  std::vector<Halfspace> open;
  open.reserve(p.halfspaces().size());
  for (const auto& h : p.halfspaces()) open.push_back(h.as_open());
  return find_point(p.dim(), open);
}

bool is_full_dimensional(const Polyhedron& p) { return interior_point(p).has_value(); }

bool is_feasible(const Polyhedron& p) {
  return find_point(p.dim(), p.halfspaces()).has_value();
}

std::optional<FunctionalRange> functional_range_on(const AffineFunc& g, const Polyhedron& p) {
  return functional_range_on(g, p, nullptr);
}

std::optional<FunctionalRange> functional_range_on(const AffineFunc& g, const Polyhedron& p, const Point* start) {
  FunctionalRange range;
  const LpResult hi = lp_optimize(g, p, start);
  if (std::holds_alternative<LpInfeasible>(hi)) return std::nullopt;
  if (const auto* opt = std::get_if<LpOptimal>(&hi)) range.max = opt->optimum;
  const LpResult lo = lp_optimize(g.scaled(-1), p, start);
  if (const auto* opt = std::get_if<LpOptimal>(&lo)) range.min = -opt->optimum;
  return range;
}

}  // namespace maxmin
