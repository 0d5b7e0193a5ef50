#pragma once

#include "hgraphon/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgraphon {

// Parse failure with the 1-based line it occurred on; what() includes both.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& cause)
      : std::runtime_error("line " + std::to_string(line) + ": " + cause), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Piecewise-constant symmetric kernel on [0,1]^2. sigma holds the q+1
// breakpoints 0 = sigma_0 < ... < sigma_q = 1; values is the symmetric q x q
// block matrix with entries in [0,1]. Blocks are indexed 0-based: block i is
// the interval [sigma_i, sigma_{i+1}).
struct StepGraphon {
  RatVector sigma;
  RatMatrix values;

  int q() const { return static_cast<int>(values.rows()); }
};

// One random draw. Nodes are 0-based internally; blocks[j] in [0,q). Edges
// are sorted pairs (i,j) with i < j. coords may be empty for graphs read
// from files that omit them.
struct SampledGraph {
  int n = 0;
  int q = 0;
  std::vector<double> coords;
  std::vector<int> blocks;
  std::vector<std::pair<int, int>> edges;
};

// Throws std::invalid_argument when an invariant fails (used by both the
// parser and programmatic construction).
void validate_graphon(const StepGraphon& w);

StepGraphon make_graphon(RatVector sigma, RatMatrix values);

// Reads the `hgraphon v1` format. Throws ParseError.
StepGraphon parse_graphon(std::istream& in);
StepGraphon parse_graphon_string(const std::string& text);
StepGraphon load_graphon(const std::string& path);

// Block lookup: half-open intervals [sigma_i, sigma_{i+1}), with s == 1
// assigned to the last block. The comparison against the breakpoints is
// exact (a double is a dyadic rational).
int block_of(const StepGraphon& w, const Rat& s);

Rat value_at(const StepGraphon& w, const Rat& s, const Rat& t);
Rat value_at(const StepGraphon& w, double s, double t);

// Concentration vector x*: block lengths sigma_{i+1} - sigma_i.
RatVector concentration(const StepGraphon& w);

// Draws G_n ~ W. One SplitMix64 stream seeded with `seed` is consumed in a
// fixed order: the n node coordinates first, then one uniform per node pair
// in lexicographic order (i,j), i < j — every pair consumes a draw whether
// or not the edge appears, so the stream layout is independent of W.
SampledGraph sample(const StepGraphon& w, int n, std::uint64_t seed);

// Coordinate phase of `sample` only (identical stream prefix): coords and
// blocks, no edges. Used by statistics that never look at edges.
SampledGraph sample_coordinates(const StepGraphon& w, int n, std::uint64_t seed);

// Empirical concentration x(G_n): block occupancy counts over n, exact.
RatVector empirical_concentration(const SampledGraph& g);

// Splits block `block` (0-based) at t, sigma[block] < t < sigma[block+1],
// duplicating the corresponding row and column. Represents the identical
// kernel with q+1 blocks.
StepGraphon refine_partition(const StepGraphon& w, int block, const Rat& t);

// `hgraph v1` sampled-graph files.
SampledGraph read_hgraph(std::istream& in);
SampledGraph load_hgraph(const std::string& path);
void write_hgraph(std::ostream& out, const SampledGraph& g);

}  // namespace hgraphon
