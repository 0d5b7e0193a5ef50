#include "hgraphon/linalg.hpp"

#include "doctest.h"
#include "hgraphon/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace hgraphon;

namespace {

RatVector rv(std::initializer_list<Rat> xs) {
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("affine rank of simple point sets") {
  CHECK(affine_rank({rv({1, 0}), rv({0, 1})}) == 1);
  CHECK(affine_rank({rv({Rat(1, 2), Rat(1, 2)})}) == 0);
  // triangle edge-polytope generators span a 2-dimensional affine hull
  CHECK(affine_rank({rv({Rat(1, 2), Rat(1, 2), 0}), rv({0, Rat(1, 2), Rat(1, 2)}),
                     rv({Rat(1, 2), 0, Rat(1, 2)})}) == 2);
  CHECK_THROWS_AS(affine_rank({}), std::invalid_argument);
}

TEST_CASE("affine rank ignores permutation and duplicates") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    int dim = 2 + static_cast<int>(rng.next_u64() % 4);
    int count = 1 + static_cast<int>(rng.next_u64() % 6);
    std::vector<RatVector> pts;
    for (int k = 0; k < count; ++k) {
      RatVector v(dim);
      for (int i = 0; i < dim; ++i)
        v(i) = Rat(static_cast<long>(rng.next_u64() % 11) - 5, 1 + static_cast<long>(rng.next_u64() % 4));
      pts.push_back(v);
    }
    int base = affine_rank(pts);

    std::vector<RatVector> shuffled = pts;
    for (size_t k = shuffled.size(); k > 1; --k)
      std::swap(shuffled[k - 1], shuffled[rng.next_u64() % k]);
    CHECK(affine_rank(shuffled) == base);

    std::vector<RatVector> dup = pts;
    dup.push_back(pts[rng.next_u64() % pts.size()]);
    CHECK(affine_rank(dup) == base);
  }
}

TEST_CASE("solve_linear classifies systems") {
  RatMatrix a(2, 2);
  a << 1, 1, 1, -1;
  auto s = solve_linear<Rat>(a, rv({3, 1}));
  REQUIRE(s.kind == SolveKind::Unique);
  CHECK(s.solution(0) == 2);
  CHECK(s.solution(1) == 1);

  RatMatrix b(2, 2);
  b << 1, 1, 2, 2;
  CHECK(solve_linear<Rat>(b, rv({1, 3})).kind == SolveKind::Inconsistent);
  CHECK(solve_linear<Rat>(b, rv({1, 2})).kind == SolveKind::Underdetermined);
}

TEST_CASE("affine hull membership") {
  std::vector<RatVector> line{rv({0, 0, 1}), rv({1, 1, 1})};
  CHECK(in_affine_hull(line, rv({Rat(1, 2), Rat(1, 2), 1})));
  CHECK(in_affine_hull(line, rv({2, 2, 1})));  // outside the segment, on the line
  CHECK_FALSE(in_affine_hull(line, rv({1, 0, 1})));
  std::vector<RatVector> point{rv({1, 2})};
  CHECK(in_affine_hull(point, rv({1, 2})));
  CHECK_FALSE(in_affine_hull(point, rv({1, 3})));
}

TEST_CASE("row echelon keeps rank under random row ops") {
  SplitMix64 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 3 + static_cast<int>(rng.next_u64() % 3);
    RatMatrix m = RatMatrix::Zero(n, n);
    int planned = static_cast<int>(rng.next_u64() % (n + 1));
    for (int r = 0; r < planned; ++r)
      for (int c = 0; c < n; ++c)
        m(r, c) = Rat(static_cast<long>(rng.next_u64() % 7) - 3);
    int base = matrix_rank<Rat>(m);
    CHECK(base <= planned);

    // adding a multiple of one row to another does not change the rank
    RatMatrix m2 = m;
    int i = static_cast<int>(rng.next_u64() % n), j = static_cast<int>(rng.next_u64() % n);
    if (i != j) m2.row(i) += Rat(2) * m2.row(j);
    CHECK(matrix_rank<Rat>(m2) == base);
  }
}

TEST_SUITE_END();
