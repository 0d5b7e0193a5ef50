#include "hgraphon/lp.hpp"

#include "doctest.h"
#include "hgraphon/rng.hpp"

#include <stdexcept>

using namespace hgraphon;

TEST_SUITE_BEGIN("lp");

TEST_CASE("vertex optimum on the unit segment") {
  // maximize l1 s.t. l1 + l2 = 1, l >= 0
  LinearProgram lp;
  lp.eq_lhs.resize(1, 2);
  lp.eq_lhs << 1, 1;
  lp.eq_rhs.resize(1);
  lp.eq_rhs << 1;
  lp.objective.resize(2);
  lp.objective << 1, 0;
  lp.lower_bounds = RatVector::Zero(2);

  auto out = solve_lp(lp);
  REQUIRE(out.kind == LPOutcome::Kind::Optimal);
  CHECK(out.value == 1);
  CHECK(out.solution(0) == 1);
  CHECK(out.solution(1) == 0);
}

TEST_CASE("contradictory bound is infeasible") {
  // maximize 0 s.t. l1 = 2, l1 >= 3
  LinearProgram lp;
  lp.eq_lhs.resize(1, 1);
  lp.eq_lhs << 1;
  lp.eq_rhs.resize(1);
  lp.eq_rhs << 2;
  lp.objective = RatVector::Zero(1);
  lp.lower_bounds.resize(1);
  lp.lower_bounds << 3;
  CHECK(solve_lp(lp).kind == LPOutcome::Kind::Infeasible);
}

TEST_CASE("triangle centroid interior program") {
  // Generators of the triangle edge polytope: (1/2,1/2,0), (1/2,0,1/2),
  // (0,1/2,1/2); target x = centroid (1/3,1/3,1/3). With lambda = mu +
  // eps*1 the constraints force lambda = (1/3,1/3,1/3) uniquely, hence
  // eps* = 1/3. (Verified by eliminating the 3x3 system by hand: the rows
  // give lambda_i + lambda_j = 2/3 for each pair.)
  const Rat h(1, 2);
  LinearProgram lp;
  lp.eq_lhs.resize(4, 4);
  lp.eq_lhs << h, h, 0, 1,
               h, 0, h, 1,
               0, h, h, 1,
               1, 1, 1, 3;
  lp.eq_rhs.resize(4);
  lp.eq_rhs << Rat(1, 3), Rat(1, 3), Rat(1, 3), 1;
  lp.objective.resize(4);
  lp.objective << 0, 0, 0, 1;
  lp.lower_bounds = RatVector::Zero(4);

  auto out = solve_lp(lp);
  REQUIRE(out.kind == LPOutcome::Kind::Optimal);
  CHECK(out.value == Rat(1, 3));
  RatVector lambda = out.solution.head(3) + RatVector::Constant(3, out.solution(3));
  CHECK(lambda(0) == Rat(1, 3));
  CHECK(lambda(1) == Rat(1, 3));
  CHECK(lambda(2) == Rat(1, 3));
}

TEST_CASE("unbounded objective is reported") {
  // maximize l1 with no constraints
  LinearProgram lp;
  lp.eq_lhs.resize(0, 1);
  lp.eq_rhs.resize(0);
  lp.objective.resize(1);
  lp.objective << 1;
  lp.lower_bounds = RatVector::Zero(1);
  CHECK(solve_lp(lp).kind == LPOutcome::Kind::Unbounded);
}

TEST_CASE("redundant constraints are tolerated") {
  // l1 + l2 = 1 stated twice
  LinearProgram lp;
  lp.eq_lhs.resize(2, 2);
  lp.eq_lhs << 1, 1, 1, 1;
  lp.eq_rhs.resize(2);
  lp.eq_rhs << 1, 1;
  lp.objective.resize(2);
  lp.objective << 0, 1;
  lp.lower_bounds = RatVector::Zero(2);
  auto out = solve_lp(lp);
  REQUIRE(out.kind == LPOutcome::Kind::Optimal);
  CHECK(out.value == 1);
}

TEST_CASE("dimension mismatch raises") {
  LinearProgram lp;
  lp.eq_lhs.resize(1, 2);
  lp.eq_lhs << 1, 1;
  lp.eq_rhs.resize(1);
  lp.eq_rhs << 1;
  lp.objective = RatVector::Zero(3);
  lp.lower_bounds = RatVector::Zero(2);
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);
}

TEST_CASE("random feasible programs are never infeasible") {
  SplitMix64 rng(2024);
  for (int iter = 0; iter < 120; ++iter) {
    const int m = 1 + static_cast<int>(rng.next_u64() % 4);
    const int n = m + static_cast<int>(rng.next_u64() % 4);

    RatMatrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        a(i, j) = Rat(static_cast<long>(rng.next_u64() % 9) - 4,
                      1 + static_cast<long>(rng.next_u64() % 3));

    RatVector lb(n), feasible(n);
    for (int j = 0; j < n; ++j) {
      lb(j) = Rat(static_cast<long>(rng.next_u64() % 7) - 3);
      feasible(j) = lb(j) + Rat(static_cast<long>(rng.next_u64() % 5),
                                1 + static_cast<long>(rng.next_u64() % 3));
    }

    LinearProgram lp;
    lp.eq_lhs = a;
    lp.eq_rhs = a * feasible;  // constructed feasible point
    lp.lower_bounds = lb;
    lp.objective.resize(n);
    for (int j = 0; j < n; ++j)
      lp.objective(j) = Rat(static_cast<long>(rng.next_u64() % 5) - 2);

    auto out = solve_lp(lp);
    REQUIRE(out.kind != LPOutcome::Kind::Infeasible);
    if (out.kind == LPOutcome::Kind::Optimal) {
      // optimal value dominates the constructed feasible point; exact
      // constraint satisfaction is asserted inside solve_lp itself
      CHECK(out.value >= lp.objective.dot(feasible));
    }
  }
}

TEST_CASE("degenerate vertices terminate under Bland") {
  // Several coinciding vertices at the origin; cycling-prone without an
  // anti-cycling rule.
  LinearProgram lp;
  lp.eq_lhs.resize(3, 6);
  lp.eq_lhs << 1, 0, 0, 1, -1, 2,
               0, 1, 0, 2, -3, 1,
               0, 0, 1, -1, 1, 1;
  lp.eq_rhs.resize(3);
  lp.eq_rhs << 0, 0, 1;
  lp.objective.resize(6);
  lp.objective << 0, 0, 0, 1, 2, -1;
  lp.lower_bounds = RatVector::Zero(6);
  auto out = solve_lp(lp);
  CHECK(out.kind != LPOutcome::Kind::Infeasible);
}

TEST_SUITE_END();
