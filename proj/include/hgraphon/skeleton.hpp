#pragma once

#include "hgraphon/graphon.hpp"
#include "hgraphon/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hgraphon {

// Zero/nonzero pattern of a step-graphon: q nodes, loops where a diagonal
// block is positive, plain edges where an off-diagonal block is positive.
// The edge enumeration is canonical: loops by node index first, then plain
// edges in lexicographic order. Index sets follow that enumeration:
// I0 = loops, I1 = plain edges, I2 = plain edges not joining two looped
// nodes.
struct SkeletonGraph {
  int q = 0;
  std::vector<int> loops;                       // sorted node ids (F0)
  std::vector<std::pair<int, int>> plain_edges; // sorted, u < v (F1)

  int edge_count() const { return static_cast<int>(loops.size() + plain_edges.size()); }
  bool has_loop(int node) const;

  // Edge j of the canonical enumeration as a node pair (u == v for loops).
  std::pair<int, int> edge(int j) const;
  bool is_loop_index(int j) const { return j < static_cast<int>(loops.size()); }

  std::vector<int> loop_indices() const;           // I0
  std::vector<int> plain_indices() const;          // I1
  std::vector<int> unsupported_plain_indices() const;  // I2
};

SkeletonGraph skeleton_of(const StepGraphon& w);

// Convenience for tests and generators.
SkeletonGraph make_skeleton(int q, std::vector<int> loops,
                            std::vector<std::pair<int, int>> plain_edges);

// q x |F| matrix: a loop column has a single 1, a plain-edge column has 1/2
// at both endpoints. Every column sums to 1.
RatMatrix incidence_matrix(const SkeletonGraph& s);

// True iff some node carries a loop (a closed walk of length 1) or some
// connected component is non-bipartite.
bool has_odd_cycle(const SkeletonGraph& s);

// Maximal connected node sets, ascending by smallest member; loops do not
// affect connectivity.
std::vector<std::vector<int>> connected_components(const SkeletonGraph& s);

bool is_connected(const SkeletonGraph& s);

// Stable adjacency listing used by the CLI report (1-based node names).
std::string adjacency_listing(const SkeletonGraph& s);

}  // namespace hgraphon
