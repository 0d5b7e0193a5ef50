#include "hgraphon/hamdec.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hgraphon {

Digraph directed_version(const SampledGraph& g) {
  Digraph d;
  d.n = g.n;
  d.out.resize(g.n);
  for (auto [i, j] : g.edges) {
    if (i == j) throw std::invalid_argument("directed_version: self-edge");
    if (i < 0 || j < 0 || i >= g.n || j >= g.n)
      throw std::invalid_argument("directed_version: node index out of range");
    d.out[i].push_back(j);
    d.out[j].push_back(i);
  }
  for (auto& adj : d.out) std::sort(adj.begin(), adj.end());
  return d;
}

Digraph doubled_digraph(int n, const std::vector<std::pair<int, int>>& edges) {
  SampledGraph g;
  g.n = n;
  g.q = 1;
  g.edges = edges;
  return directed_version(g);
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp over tails (left) and heads (right). Adjacency is scanned
// in ascending order and augmenting DFS follows it, so the matching is a
// deterministic function of the digraph.
class Matcher {
 public:
  explicit Matcher(const Digraph& d) : d_(d), pair_u_(d.n, -1), pair_v_(d.n, -1), dist_(d.n) {}

  int run() {
    int matched = 0;
    while (bfs()) {
      for (int u = 0; u < d_.n; ++u)
        if (pair_u_[u] < 0 && dfs(u)) ++matched;
    }
    return matched;
  }

  const std::vector<int>& pair_u() const { return pair_u_; }

 private:
  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < d_.n; ++u) {
      if (pair_u_[u] < 0) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool reachable = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : d_.out[u]) {
        if (v == u) continue;
        int w = pair_v_[v];
        if (w < 0) {
          reachable = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable;
  }

  bool dfs(int u) {
    for (int v : d_.out[u]) {
      if (v == u) continue;
      int w = pair_v_[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        pair_u_[u] = v;
        pair_v_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const Digraph& d_;
  std::vector<int> pair_u_, pair_v_, dist_;
};

}  // namespace

bool has_hamiltonian_decomposition(const Digraph& d) {
  if (d.n == 0) return true;
  Matcher m(d);
  return m.run() == d.n;
}

std::optional<HamDecomposition> extract_decomposition(const Digraph& d) {
  Matcher m(d);
  if (m.run() != d.n) return std::nullopt;
  const auto& succ = m.pair_u();

  HamDecomposition h;
  std::vector<bool> visited(d.n, false);
  for (int start = 0; start < d.n; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int u = start;
    do {
      visited[u] = true;
      cycle.push_back(u);
      u = succ[u];
    } while (u != start);
    h.cycles.push_back(std::move(cycle));
  }
  return h;
}

bool brute_force_ham(const Digraph& d) {
  if (d.n > 10) throw std::invalid_argument("brute_force_ham: n exceeds guard (10)");
  if (d.n == 0) return true;

  std::vector<std::vector<bool>> arc(d.n, std::vector<bool>(d.n, false));
  for (int u = 0; u < d.n; ++u)
    for (int v : d.out[u]) arc[u][v] = true;

  std::vector<bool> used(d.n, false);
  // Assign successors node by node; a valid full assignment is a
  // fixed-point-free permutation supported on arcs.
  auto rec = [&](auto&& self, int u) -> bool {
    if (u == d.n) return true;
    for (int v = 0; v < d.n; ++v) {
      if (v == u || used[v] || !arc[u][v]) continue;
      used[v] = true;
      if (self(self, u + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

RatMatrix rho(const HamDecomposition& h, const std::vector<int>& blocks, int q) {
  long n = 0;
  for (const auto& c : h.cycles) n += static_cast<long>(c.size());
  RatMatrix m = RatMatrix::Zero(q, q);
  for (const auto& c : h.cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      int u = c[k], v = c[(k + 1) % c.size()];
      if (u < 0 || v < 0 || u >= static_cast<int>(blocks.size()) ||
          v >= static_cast<int>(blocks.size()))
        throw std::invalid_argument("rho: node outside block assignment");
      int bu = blocks[u], bv = blocks[v];
      if (bu < 0 || bu >= q || bv < 0 || bv >= q)
        throw std::invalid_argument("rho: block index out of range");
      m(bu, bv) += 1;
    }
  }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) m(i, j) /= n;
  return m;
}

bool valid_decomposition(const Digraph& d, const HamDecomposition& h) {
  std::vector<bool> covered(d.n, false);
  long total = 0;
  for (const auto& c : h.cycles) {
    if (c.size() < 2) return false;
    total += static_cast<long>(c.size());
    for (int u : c) {
      if (u < 0 || u >= d.n || covered[u]) return false;
      covered[u] = true;
    }
    for (size_t k = 0; k < c.size(); ++k) {
      int u = c[k], v = c[(k + 1) % c.size()];
      if (!std::binary_search(d.out[u].begin(), d.out[u].end(), v)) return false;
    }
  }
  return total == d.n;
}

}  // namespace hgraphon
