#include "hgraphon/polytope.hpp"

#include "hgraphon/linalg.hpp"
#include "hgraphon/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgraphon {

namespace {

void check_simplex_point(int q, const RatVector& x, const char* who) {
  if (x.size() != q) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  if (!is_probability_vector(x))
    throw std::invalid_argument(std::string(who) + ": point is not in the standard simplex");
}

}  // namespace

EdgePolytope edge_polytope(const SkeletonGraph& s) {
  return EdgePolytope{s, incidence_matrix(s)};
}

std::vector<int> extremal_generators(const EdgePolytope& p) {
  std::vector<int> idx = p.skeleton.loop_indices();
  for (int j : p.skeleton.unsupported_plain_indices()) idx.push_back(j);
  std::sort(idx.begin(), idx.end());
  return idx;
}

int polytope_rank(const SkeletonGraph& s) {
  if (!is_connected(s)) throw std::invalid_argument("polytope_rank: skeleton is disconnected");
  if (s.edge_count() == 0) throw std::invalid_argument("polytope_rank: skeleton has no edges");
  return has_odd_cycle(s) ? s.q - 1 : s.q - 2;
}

std::optional<RatVector> membership(const EdgePolytope& p, const RatVector& x) {
  check_simplex_point(p.q(), x, "membership");
  const int m = p.generator_count();
  const int q = p.q();

  LinearProgram lp;
  lp.eq_lhs.resize(q + 1, m);
  lp.eq_lhs.topRows(q) = p.generators;
  for (int j = 0; j < m; ++j) lp.eq_lhs(q, j) = 1;
  lp.eq_rhs.resize(q + 1);
  lp.eq_rhs.head(q) = x;
  lp.eq_rhs(q) = 1;
  lp.objective = RatVector::Zero(m);
  lp.lower_bounds = RatVector::Zero(m);

  LPOutcome out = solve_lp(lp);
  if (out.kind != LPOutcome::Kind::Optimal) return std::nullopt;
  return out.solution;
}

PointClass classify_point(const EdgePolytope& p, const RatVector& x) {
  check_simplex_point(p.q(), x, "classify_point");
  PointClass result;
  auto witness = membership(p, x);
  if (!witness) {
    result.kind = PointClass::Kind::Outside;
    return result;
  }

  // maximize eps subject to Z lambda = x, sum lambda = 1, lambda_j >= eps.
  // Substituting lambda = mu + eps * 1 with mu >= 0, eps >= 0 keeps the
  // program in equality form; eps >= 0 loses nothing because x is already
  // known to be a member.
  const int m = p.generator_count();
  const int q = p.q();
  LinearProgram lp;
  lp.eq_lhs.resize(q + 1, m + 1);
  lp.eq_lhs.topLeftCorner(q, m) = p.generators;
  for (int i = 0; i < q; ++i) {
    Rat rowsum = 0;
    for (int j = 0; j < m; ++j) rowsum += p.generators(i, j);
    lp.eq_lhs(i, m) = rowsum;
  }
  for (int j = 0; j < m; ++j) lp.eq_lhs(q, j) = 1;
  lp.eq_lhs(q, m) = m;
  lp.eq_rhs.resize(q + 1);
  lp.eq_rhs.head(q) = x;
  lp.eq_rhs(q) = 1;
  lp.objective = RatVector::Zero(m + 1);
  lp.objective(m) = 1;
  lp.lower_bounds = RatVector::Zero(m + 1);

  LPOutcome out = solve_lp(lp);
  if (out.kind != LPOutcome::Kind::Optimal)
    throw std::logic_error("classify_point: interior program must be solvable for members");

  const Rat eps = out.value;
  result.min_weight = eps;
  result.witness = out.solution.head(m) + RatVector::Constant(m, eps);
  result.kind = eps > 0 ? PointClass::Kind::Interior : PointClass::Kind::Boundary;
  return result;
}

bool is_amatrix(const SkeletonGraph& s, const AMatrix& a) {
  if (a.rows() != s.q || a.cols() != s.q) return false;
  Rat total = 0;
  for (int i = 0; i < s.q; ++i) {
    for (int j = 0; j < s.q; ++j) {
      const Rat& v = a(i, j);
      if (v < 0) return false;
      if (v > 0) {
        if (i == j && !s.has_loop(i)) return false;
        if (i != j &&
            !std::binary_search(s.plain_edges.begin(), s.plain_edges.end(),
                                std::make_pair(std::min(i, j), std::max(i, j))))
          return false;
      }
      total += v;
    }
  }
  if (total != 1) return false;
  for (int i = 0; i < s.q; ++i) {
    Rat row = 0, col = 0;
    for (int j = 0; j < s.q; ++j) {
      row += a(i, j);
      col += a(j, i);
    }
    if (row != col) return false;
  }
  return true;
}

std::optional<AMatrix> rowsum_membership(const SkeletonGraph& s, const RatVector& x) {
  check_simplex_point(s.q, x, "rowsum_membership");

  // Directed entry variables: loops (i,i), then both orientations of each
  // plain edge. Constraints: row sums = x and column sums = x, which forces
  // A 1 = A^T 1 and a total of 1.
  std::vector<std::pair<int, int>> slots;
  for (int u : s.loops) slots.emplace_back(u, u);
  for (auto [u, v] : s.plain_edges) {
    slots.emplace_back(u, v);
    slots.emplace_back(v, u);
  }
  const int nvars = static_cast<int>(slots.size());
  const int q = s.q;

  LinearProgram lp;
  lp.eq_lhs = RatMatrix::Zero(2 * q, nvars);
  for (int k = 0; k < nvars; ++k) {
    auto [from, to] = slots[k];
    lp.eq_lhs(from, k) += 1;      // row sum
    lp.eq_lhs(q + to, k) += 1;    // column sum
  }
  lp.eq_rhs.resize(2 * q);
  lp.eq_rhs.head(q) = x;
  lp.eq_rhs.tail(q) = x;
  lp.objective = RatVector::Zero(nvars);
  lp.lower_bounds = RatVector::Zero(nvars);

  LPOutcome out = solve_lp(lp);
  if (out.kind != LPOutcome::Kind::Optimal) return std::nullopt;

  AMatrix a = RatMatrix::Zero(q, q);
  for (int k = 0; k < nvars; ++k) a(slots[k].first, slots[k].second) = out.solution(k);
  return a;
}

bool caratheodory_membership(const EdgePolytope& p, const RatVector& x) {
  if (p.generator_count() > 20)
    throw std::invalid_argument("caratheodory_membership: generator count exceeds guard (20)");
  check_simplex_point(p.q(), x, "caratheodory_membership");

  const int q = p.q();

  // Any generator putting mass on a coordinate where x vanishes can only
  // appear with weight zero; drop it up front.
  std::vector<int> pool;
  for (int j = 0; j < p.generator_count(); ++j) {
    bool ok = true;
    for (int i = 0; i < q && ok; ++i)
      if (x(i) == 0 && p.generators(i, j) != 0) ok = false;
    if (ok) pool.push_back(j);
  }
  if (pool.empty()) return false;

  // Convex combinations cannot exceed the coordinatewise maximum.
  for (int i = 0; i < q; ++i) {
    Rat best = 0;
    for (int j : pool) best = std::max(best, Rat(p.generators(i, j)));
    if (x(i) > best) return false;
  }

  std::vector<RatVector> points;
  points.reserve(pool.size());
  for (int j : pool) points.push_back(p.generator(j));
  if (!in_affine_hull(points, x)) return false;

  // Carathéodory: x is in the hull iff it is in the hull of some affinely
  // independent subset of at most q+1 generators. Subsets whose system is
  // underdetermined are skipped; their independent subsets are enumerated
  // anyway.
  const int pool_size = static_cast<int>(pool.size());
  const int max_size = std::min(q + 1, pool_size);
  RatVector target(q + 1);
  target.head(q) = x;
  target(q) = 1;

  std::vector<int> pick;
  for (int size = 1; size <= max_size; ++size) {
    pick.assign(size, 0);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      RatMatrix sys(q + 1, size);
      for (int c = 0; c < size; ++c) {
        sys.col(c).head(q) = points[pick[c]];
        sys(q, c) = 1;
      }
      auto solved = solve_linear<Rat>(sys, target);
      if (solved.kind == SolveKind::Unique) {
        bool nonneg = true;
        for (int c = 0; c < size && nonneg; ++c)
          if (solved.solution(c) < 0) nonneg = false;
        if (nonneg) return true;
      }
      // next combination
      int i = size - 1;
      while (i >= 0 && pick[i] == pool_size - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int k = i + 1; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return false;
}

RatMatrix cycle_arc_matrix(const std::vector<int>& nodes, int q) {
  RatMatrix m = RatMatrix::Zero(q, q);
  if (nodes.empty()) throw std::invalid_argument("empty cycle");
  if (nodes.size() == 1) {
    m(nodes[0], nodes[0]) = 1;
    return m;
  }
  for (size_t k = 0; k < nodes.size(); ++k) m(nodes[k], nodes[(k + 1) % nodes.size()]) = 1;
  return m;
}

RatMatrix cycle_laplacian(const std::vector<int>& nodes, int q) {
  if (nodes.size() < 2) throw std::invalid_argument("cycle_laplacian: cycle length must be >= 2");
  RatMatrix m = cycle_arc_matrix(nodes, q);
  for (int u : nodes) m(u, u) -= 1;
  return m;
}

std::vector<WeightedCycle> cycle_laplacian_decomposition(const AMatrix& a) {
  const int q = static_cast<int>(a.rows());
  if (a.cols() != q) throw std::invalid_argument("cycle decomposition: matrix must be square");
  Rat total = 0;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      if (a(i, j) < 0) throw std::invalid_argument("cycle decomposition: negative entry");
      total += a(i, j);
    }
  if (total != 1) throw std::invalid_argument("cycle decomposition: entries must sum to 1");
  for (int i = 0; i < q; ++i) {
    Rat row = 0, col = 0;
    for (int j = 0; j < q; ++j) {
      row += a(i, j);
      col += a(j, i);
    }
    if (row != col)
      throw std::invalid_argument("cycle decomposition: row/column sums are unbalanced");
  }

  std::vector<WeightedCycle> out;
  for (int i = 0; i < q; ++i)
    if (a(i, i) > 0) out.push_back({{i}, a(i, i)});

  RatMatrix b = a;
  for (int i = 0; i < q; ++i) b(i, i) = 0;

  // The off-diagonal part stays balanced after every peel, so a walk along
  // positive entries never stalls and must close a directed cycle.
  for (;;) {
    int start = -1;
    for (int i = 0; i < q && start < 0; ++i)
      for (int j = 0; j < q; ++j)
        if (b(i, j) > 0) {
          start = i;
          break;
        }
    if (start < 0) break;

    std::vector<int> path{start};
    std::vector<int> seen_at(q, -1);
    seen_at[start] = 0;
    std::vector<int> cycle;
    for (;;) {
      int u = path.back();
      int next = -1;
      for (int v = 0; v < q; ++v)
        if (b(u, v) > 0) {
          next = v;
          break;
        }
      if (next < 0) throw std::logic_error("cycle decomposition: walk stalled");
      if (seen_at[next] >= 0) {
        cycle.assign(path.begin() + seen_at[next], path.end());
        break;
      }
      seen_at[next] = static_cast<int>(path.size());
      path.push_back(next);
    }

    Rat t = b(cycle.back(), cycle.front());
    for (size_t k = 0; k + 1 < cycle.size(); ++k) t = std::min(t, Rat(b(cycle[k], cycle[k + 1])));
    for (size_t k = 0; k < cycle.size(); ++k) b(cycle[k], cycle[(k + 1) % cycle.size()]) -= t;
    out.push_back({cycle, t});
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FailsNoOddCycle: return "fails-no-odd-cycle";
    case Verdict::FailsMembership: return "fails-membership";
    case Verdict::BoundaryIndeterminate: return "boundary-indeterminate";
    case Verdict::SatisfiesSufficiency: return "satisfies-sufficiency";
  }
  return "?";
}

namespace {

SkeletonGraph induced_subgraph(const SkeletonGraph& s, const std::vector<int>& nodes) {
  std::vector<int> index(s.q, -1);
  for (size_t k = 0; k < nodes.size(); ++k) index[nodes[k]] = static_cast<int>(k);
  SkeletonGraph sub;
  sub.q = static_cast<int>(nodes.size());
  for (int u : s.loops)
    if (index[u] >= 0) sub.loops.push_back(index[u]);
  for (auto [u, v] : s.plain_edges)
    if (index[u] >= 0 && index[v] >= 0) sub.plain_edges.emplace_back(index[u], index[v]);
  std::sort(sub.loops.begin(), sub.loops.end());
  std::sort(sub.plain_edges.begin(), sub.plain_edges.end());
  return sub;
}

}  // namespace

VerdictReport analyze_verdict(const StepGraphon& w) {
  VerdictReport report;
  SkeletonGraph s = skeleton_of(w);
  report.components = connected_components(s);
  report.disconnected = report.components.size() > 1;

  bool all_odd = true;
  for (const auto& comp : report.components) {
    bool odd = has_odd_cycle(induced_subgraph(s, comp));
    report.component_has_odd_cycle.push_back(odd);
    all_odd = all_odd && odd;
  }

  report.point_class = classify_point(edge_polytope(s), concentration(w));

  if (!all_odd)
    report.verdict = Verdict::FailsNoOddCycle;
  else if (report.point_class.kind == PointClass::Kind::Outside)
    report.verdict = Verdict::FailsMembership;
  else if (report.point_class.kind == PointClass::Kind::Interior)
    report.verdict = Verdict::SatisfiesSufficiency;
  else
    report.verdict = Verdict::BoundaryIndeterminate;
  return report;
}

Verdict verdict(const StepGraphon& w) { return analyze_verdict(w).verdict; }

}  // namespace hgraphon
