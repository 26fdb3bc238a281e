#include "maxmin/arrangement.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "maxmin/error.hpp"
#include "maxmin/lp.hpp"

namespace maxmin {

namespace {

std::vector<Halfspace> open_domain(const Polyhedron& domain) {
  std::vector<Halfspace> out;
  out.reserve(domain.halfspaces().size());
  for (const auto& h : domain.halfspaces()) out.push_back(h.as_open());
  return out;
}

std::optional<Point> point_on_hyperplane(const std::vector<Halfspace>& open_dom,
                                         const Hyperplane& h, std::size_t dim) {
  std::vector<Halfspace> cons = open_dom;
  cons.push_back(h.halfspace(-1, Strictness::Closed));
  cons.push_back(h.halfspace(+1, Strictness::Closed));
  return find_point(dim, cons);
}

struct Partial {
  SignVector signs;
  Point witness;
};

}  // namespace

CellComplex::CellComplex(Arrangement arrangement, std::vector<Cell> cells)
    : arrangement_(std::move(arrangement)), cells_(std::move(cells)) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    cells_[i].id = i;
    index_.emplace(cells_[i].signs, i);
  }
  adjacency_.resize(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    SignVector s = cells_[i].signs;
    for (std::size_t h = 0; h < s.size(); ++h) {
      s[h] = static_cast<std::int8_t>(-s[h]);
      if (auto other = find(s)) adjacency_[i].push_back(*other);
      s[h] = static_cast<std::int8_t>(-s[h]);
    }
  }
}

std::optional<std::size_t> CellComplex::find(const SignVector& signs) const {
  const auto it = index_.find(signs);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& CellComplex::neighbors(std::size_t id) const {
  cell(id);
  return adjacency_[id];
}

Polyhedron CellComplex::closure(std::size_t id) const {
  Polyhedron p = arrangement_.domain;
  const Cell& c = cell(id);
  for (std::size_t h = 0; h < c.signs.size(); ++h)
    p.add(arrangement_.hyperplanes[h].halfspace(c.signs[h], Strictness::Closed));
  return p;
}

std::vector<Halfspace> CellComplex::open_constraints(std::size_t id) const {
  std::vector<Halfspace> cons = open_domain(arrangement_.domain);
  const Cell& c = cell(id);
  for (std::size_t h = 0; h < c.signs.size(); ++h)
    cons.push_back(arrangement_.hyperplanes[h].halfspace(c.signs[h], Strictness::Open));
  return cons;
}

Arrangement make_arrangement(const Polyhedron& domain, const std::vector<Hyperplane>& candidates) {
  if (!interior_point(domain))
    throw Error(ErrorKind::DegenerateDomain, "domain has empty interior");
  const std::vector<Halfspace> open_dom = open_domain(domain);
  Arrangement arr;
  arr.domain = domain;
  std::vector<Hyperplane> rejected;
  for (const auto& cand : candidates) {
    if (cand.dim() != domain.dim())
      throw Error(ErrorKind::DimensionMismatch, "hyperplane dimension differs from domain");
    bool merged = false;
    for (auto& h : arr.hyperplanes) {
      if (h.same_set(cand)) {
        h.generators.insert(cand.generators.begin(), cand.generators.end());
        merged = true;
        break;
      }
    }
    if (merged) continue;
    bool known_miss = false;
    for (const auto& r : rejected) known_miss = known_miss || r.same_set(cand);
    if (known_miss) continue;
    if (auto w = point_on_hyperplane(open_dom, cand, domain.dim())) {
      arr.hyperplanes.push_back(cand);
      arr.witnesses.push_back(std::move(*w));
    } else {
      rejected.push_back(cand);
    }
  }
  return arr;
}

Arrangement build_hyperplanes(const ComponentSet& components, const Polyhedron& gamma) {
  const auto& g = components.components;
  for (const auto& c : g)
    if (c.dim() != gamma.dim())
      throw Error(ErrorKind::DimensionMismatch, "component dimension differs from domain");
  std::vector<Hyperplane> candidates;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const AffineFunc diff = g[i] - g[j];
      if (diff.is_constant()) continue;
      Hyperplane h = normalize_hyperplane(diff.coeffs, -diff.offset);
      h.generators.emplace(i, j);
      candidates.push_back(std::move(h));
    }
  }
  Arrangement arr = make_arrangement(gamma, candidates);
  arr.components = components;
  return arr;
}

CellComplex enumerate_cells(const Arrangement& arr, const RunOptions& opts) {
  const std::size_t dim = arr.domain.dim();
  auto start = interior_point(arr.domain);
  if (!start) throw Error(ErrorKind::DegenerateDomain, "domain has empty interior");
  const std::vector<Halfspace> open_dom = open_domain(arr.domain);

  std::vector<Partial> level{Partial{{}, std::move(*start)}};
  for (std::size_t k = 0; k < arr.hyperplanes.size(); ++k) {
    const Hyperplane& h = arr.hyperplanes[k];
    // Slot 0 holds the '-' extension, slot 1 the '+' extension.
    std::vector<std::array<std::optional<Partial>, 2>> ext(level.size());
    parallel_for(level.size(), opts.threads, [&](std::size_t i) {
      const Partial& p = level[i];
      const int side = h.side(p.witness);
      for (int slot = 0; slot < 2; ++slot) {
        const int sign = slot == 0 ? -1 : +1;
        Partial next{p.signs, {}};
        next.signs.push_back(static_cast<std::int8_t>(sign));
        if (side == sign) {
          next.witness = p.witness;
        } else {
          std::vector<Halfspace> cons = open_dom;
          for (std::size_t j = 0; j < next.signs.size(); ++j)
            cons.push_back(arr.hyperplanes[j].halfspace(next.signs[j], Strictness::Open));
          auto w = find_point(dim, cons, &p.witness);
          if (!w) continue;
          next.witness = std::move(*w);
        }
        ext[i][slot] = std::move(next);
      }
    });
    std::vector<Partial> next_level;
    next_level.reserve(2 * level.size());
    for (auto& pair : ext)
      for (auto& slot : pair)
        if (slot) next_level.push_back(std::move(*slot));
    level = std::move(next_level);
  }

  std::vector<Cell> cells;
  cells.reserve(level.size());
  for (auto& p : level) cells.push_back(Cell{0, std::move(p.signs), std::move(p.witness)});
  return CellComplex(arr, std::move(cells));
}

Separation separation(const CellComplex& complex, std::size_t p, std::size_t q) {
  const SignVector& a = complex.cell(p).signs;
  const SignVector& b = complex.cell(q).signs;
  Separation s;
  for (std::size_t h = 0; h < a.size(); ++h)
    if (a[h] != b[h]) s.hyperplanes.push_back(h);
  s.distance = s.hyperplanes.size();
  return s;
}

std::vector<std::size_t> geodesic(const CellComplex& complex, std::size_t p, std::size_t q) {
  const std::size_t n = complex.size();
  if (p >= n || q >= n) throw Error(ErrorKind::InvalidArgument, "geodesic: cell id out of range");
  std::vector<std::size_t> parent(n, n);
  std::deque<std::size_t> queue{p};
  parent[p] = p;
  while (!queue.empty() && parent[q] == n) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t nb : complex.neighbors(cur)) {
      if (parent[nb] != n) continue;
      parent[nb] = cur;
      queue.push_back(nb);
    }
  }
  if (parent[q] == n) throw Error(ErrorKind::NoPath, "no chain of adjacent cells between cells");
  std::vector<std::size_t> path{q};
  while (path.back() != p) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  if (path.size() != separation(complex, p, q).distance + 1)
    throw Error(ErrorKind::NoPath, "adjacency distance differs from separation distance");
  return path;
}

bool sign_vector_infeasible(const Arrangement& arr, const SignVector& signs) {
  if (signs.size() != arr.hyperplanes.size())
    throw Error(ErrorKind::InvalidArgument, "sign vector length differs from hyperplane count");
  std::vector<Halfspace> cons = open_domain(arr.domain);
  for (std::size_t h = 0; h < signs.size(); ++h)
    cons.push_back(arr.hyperplanes[h].halfspace(signs[h], Strictness::Open));
  return !find_point(arr.domain.dim(), cons).has_value();
}

}  // namespace maxmin
