#pragma once

#include "hgraphon/graphon.hpp"
#include "hgraphon/rational.hpp"
#include "hgraphon/skeleton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hgraphon {

// Edge polytope X(S): convex hull of the incidence-matrix columns, a
// subpolytope of the standard simplex in R^q.
struct EdgePolytope {
  SkeletonGraph skeleton;
  RatMatrix generators;  // q x |F|, column j is z_j

  int q() const { return static_cast<int>(generators.rows()); }
  int generator_count() const { return static_cast<int>(generators.cols()); }
  RatVector generator(int j) const { return generators.col(j); }
};

EdgePolytope edge_polytope(const SkeletonGraph& s);

// Indices of the extremal generators: loops plus plain edges that do not
// join two looped nodes (I0 union I2).
std::vector<int> extremal_generators(const EdgePolytope& p);

// Affine dimension of X(S) for connected S: q-1 with an odd cycle, q-2
// without. Throws std::invalid_argument when S is disconnected (the formula
// is stated per component).
int polytope_rank(const SkeletonGraph& s);

// Exact convex-combination witness: some lambda >= 0 with Z lambda = x and
// sum(lambda) = 1, or nullopt when x is outside X(S). Decided by exact LP
// feasibility. x must lie in the standard simplex.
std::optional<RatVector> membership(const EdgePolytope& p, const RatVector& x);

struct PointClass {
  enum class Kind { Outside, Boundary, Interior };
  Kind kind = Kind::Outside;
  RatVector witness;  // convex weights; empty when Outside
  Rat min_weight;     // optimal epsilon of the interior LP (0 on the boundary)
};

// Outside / Boundary / Interior relative to the polytope's affine hull.
// Interior is decided by maximizing the smallest convex weight over all
// generators: the relative interior of a V-polytope is exactly the set of
// strictly positive convex combinations of all its generators.
PointClass classify_point(const EdgePolytope& p, const RatVector& x);

// Matrices of the A(S) class: nonnegative, supported on the skeleton's
// adjacency pattern (diagonal entries require loops), balanced row/column
// sums, total sum 1.
using AMatrix = RatMatrix;

bool is_amatrix(const SkeletonGraph& s, const AMatrix& a);

// Row-sum characterization of the edge polytope: some A in A(S) with
// A 1 = x, found by exact LP over the directed entry variables, or nullopt.
std::optional<AMatrix> rowsum_membership(const SkeletonGraph& s, const RatVector& x);

// Independent brute-force membership oracle: enumerates generator subsets
// of size at most q+1 and solves each convex-combination system exactly.
// Guarded to |F| <= 20.
bool caratheodory_membership(const EdgePolytope& p, const RatVector& x);

// One directed cycle with a positive weight. A single node means a
// self-loop record.
struct WeightedCycle {
  std::vector<int> nodes;
  Rat weight;
};

// Arc-indicator matrix of a cycle: ones on the consecutive arcs (including
// the wrap-around), or a single diagonal one for a loop record.
RatMatrix cycle_arc_matrix(const std::vector<int>& nodes, int q);

// Laplacian of a directed cycle of length >= 2: arc indicator minus the
// identity on the cycle's nodes (row sums zero).
RatMatrix cycle_laplacian(const std::vector<int>& nodes, int q);

// Peels a balanced nonnegative matrix with total sum 1 into weighted
// directed cycles: loop records carry the diagonal, and the balanced
// off-diagonal part is greedily decomposed by repeatedly removing the
// minimum entry along a directed cycle of the positive support. The records
// reconstruct the input exactly: sum of weight * arc matrix == a.
std::vector<WeightedCycle> cycle_laplacian_decomposition(const AMatrix& a);

enum class Verdict {
  FailsNoOddCycle,
  FailsMembership,
  BoundaryIndeterminate,
  SatisfiesSufficiency,
};

std::string verdict_name(Verdict v);

struct VerdictReport {
  Verdict verdict = Verdict::FailsNoOddCycle;
  std::vector<std::vector<int>> components;
  std::vector<bool> component_has_odd_cycle;
  PointClass point_class;   // classification of x* against the full X(S)
  bool disconnected = false;  // membership was tested against the full polytope
};

// Necessary-condition analysis of a step-graphon: every component must
// carry an odd cycle and x* must lie in X(S); sufficiency additionally
// wants x* in the relative interior.
VerdictReport analyze_verdict(const StepGraphon& w);
Verdict verdict(const StepGraphon& w);

}  // namespace hgraphon
