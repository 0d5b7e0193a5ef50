#include "hgraphon/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hgraphon {

bool SkeletonGraph::has_loop(int node) const {
  return std::binary_search(loops.begin(), loops.end(), node);
}

std::pair<int, int> SkeletonGraph::edge(int j) const {
  const int nloops = static_cast<int>(loops.size());
  if (j < 0 || j >= edge_count()) throw std::out_of_range("edge index");
  if (j < nloops) return {loops[j], loops[j]};
  return plain_edges[j - nloops];
}

std::vector<int> SkeletonGraph::loop_indices() const {
  std::vector<int> idx(loops.size());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

std::vector<int> SkeletonGraph::plain_indices() const {
  std::vector<int> idx(plain_edges.size());
  std::iota(idx.begin(), idx.end(), static_cast<int>(loops.size()));
  return idx;
}

std::vector<int> SkeletonGraph::unsupported_plain_indices() const {
  std::vector<int> idx;
  const int nloops = static_cast<int>(loops.size());
  for (size_t k = 0; k < plain_edges.size(); ++k) {
    auto [u, v] = plain_edges[k];
    if (!(has_loop(u) && has_loop(v))) idx.push_back(nloops + static_cast<int>(k));
  }
  return idx;
}

SkeletonGraph skeleton_of(const StepGraphon& w) {
  SkeletonGraph s;
  s.q = w.q();
  for (int i = 0; i < s.q; ++i)
    if (w.values(i, i) > 0) s.loops.push_back(i);
  for (int i = 0; i < s.q; ++i)
    for (int j = i + 1; j < s.q; ++j)
      if (w.values(i, j) > 0) s.plain_edges.emplace_back(i, j);
  return s;
}

SkeletonGraph make_skeleton(int q, std::vector<int> loops,
                            std::vector<std::pair<int, int>> plain_edges) {
  SkeletonGraph s;
  s.q = q;
  s.loops = std::move(loops);
  s.plain_edges = std::move(plain_edges);
  std::sort(s.loops.begin(), s.loops.end());
  for (auto& [u, v] : s.plain_edges) {
    if (u == v) throw std::invalid_argument("plain edge cannot be a loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= q) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(s.plain_edges.begin(), s.plain_edges.end());
  s.plain_edges.erase(std::unique(s.plain_edges.begin(), s.plain_edges.end()),
                      s.plain_edges.end());
  s.loops.erase(std::unique(s.loops.begin(), s.loops.end()), s.loops.end());
  for (int u : s.loops)
    if (u < 0 || u >= q) throw std::invalid_argument("loop node out of range");
  return s;
}

RatMatrix incidence_matrix(const SkeletonGraph& s) {
  RatMatrix z = RatMatrix::Zero(s.q, s.edge_count());
  int col = 0;
  for (int u : s.loops) z(u, col++) = 1;
  const Rat half(1, 2);
  for (auto [u, v] : s.plain_edges) {
    z(u, col) = half;
    z(v, col) = half;
    ++col;
  }
  return z;
}

namespace {

std::vector<std::vector<int>> adjacency(const SkeletonGraph& s) {
  std::vector<std::vector<int>> adj(s.q);
  for (auto [u, v] : s.plain_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace

bool has_odd_cycle(const SkeletonGraph& s) {
  if (!s.loops.empty()) return true;
  auto adj = adjacency(s);
  std::vector<int> color(s.q, -1);
  std::vector<int> stack;
  for (int start = 0; start < s.q; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return true;  // odd cycle witnessed by the 2-coloring clash
        }
      }
    }
  }
  return false;
}

std::vector<std::vector<int>> connected_components(const SkeletonGraph& s) {
  auto adj = adjacency(s);
  std::vector<int> comp(s.q, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int start = 0; start < s.q; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int v : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const SkeletonGraph& s) { return connected_components(s).size() == 1; }

std::string adjacency_listing(const SkeletonGraph& s) {
  std::vector<std::vector<int>> adj(s.q);
  for (int u : s.loops) adj[u].push_back(u);
  for (auto [u, v] : s.plain_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::string out;
  for (int u = 0; u < s.q; ++u) {
    std::sort(adj[u].begin(), adj[u].end());
    out += "  u" + std::to_string(u + 1) + " --";
    if (adj[u].empty()) out += " (none)";
    for (int v : adj[u]) out += " u" + std::to_string(v + 1);
    out += "\n";
  }
  return out;
}

}  // namespace hgraphon
