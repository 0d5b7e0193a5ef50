#pragma once

#include "hgraphon/graphon.hpp"
#include "hgraphon/rational.hpp"

#include <optional>
#include <vector>

namespace hgraphon {

// Directed graph as sorted adjacency lists. Self-arcs are not represented;
// cycle covers are fixed-point-free by definition.
struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;
};

// Each undirected edge becomes two opposite arcs. Throws on self-edges
// (sampled graphs never contain them).
Digraph directed_version(const SampledGraph& g);

// Test/CLI helper: the doubled digraph of an explicit undirected edge list.
Digraph doubled_digraph(int n, const std::vector<std::pair<int, int>>& edges);

// Vertex-disjoint directed cycles covering all nodes; every cycle has
// length >= 2.
struct HamDecomposition {
  std::vector<std::vector<int>> cycles;
};

// A spanning disjoint union of directed cycles exists iff the bipartite
// graph (tails x heads, one edge per arc) has a perfect matching: a cycle
// cover is exactly a fixed-point-free permutation supported on the arcs.
// Decided by Hopcroft-Karp with deterministic scan order.
bool has_hamiltonian_decomposition(const Digraph& d);

// The decomposition induced by the (deterministic) perfect matching, or
// nullopt when none exists. Cycles are reported starting from their
// smallest node, ordered by that node.
std::optional<HamDecomposition> extract_decomposition(const Digraph& d);

// Exhaustive oracle over fixed-point-free permutations; guarded to n <= 10.
bool brute_force_ham(const Digraph& d);

// Block-to-block arc counts of a decomposition, divided by n (exact).
// blocks[v] in [0,q) for every node v.
RatMatrix rho(const HamDecomposition& h, const std::vector<int>& blocks, int q);

// Checks the decomposition invariants against the digraph: disjoint cover,
// all arcs present, cycle lengths >= 2.
bool valid_decomposition(const Digraph& d, const HamDecomposition& h);

}  // namespace hgraphon
