#pragma once

#include "hgraphon/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hgraphon {

// Exact fraction-free-ish elimination over any field scalar. Pivots are the
// first nonzero entry in each column (no magnitude heuristics; the scalar is
// exact). Returns the rank; `m` is left in row-echelon form.
template <class Scalar>
int row_echelon(Mat<Scalar>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return static_cast<int>(r);
}

template <class Scalar>
int matrix_rank(Mat<Scalar> m) {
  return row_echelon(m);
}

enum class SolveKind { Inconsistent, Unique, Underdetermined };

template <class Scalar>
struct LinearSolve {
  SolveKind kind = SolveKind::Inconsistent;
  Vec<Scalar> solution;  // valid when kind == Unique
};

// Solves a x = b exactly. Detects inconsistency and free variables; the
// solution is reported only when it is unique.
template <class Scalar>
LinearSolve<Scalar> solve_linear(const Mat<Scalar>& a, const Vec<Scalar>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Mat<Scalar> aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  row_echelon(aug);

  LinearSolve<Scalar> out;
  std::vector<Eigen::Index> pivot_col;
  for (Eigen::Index i = 0; i < rows; ++i) {
    Eigen::Index lead = -1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (aug(i, j) != 0) {
        lead = j;
        break;
      }
    }
    if (lead < 0) {
      if (aug(i, cols) != 0) {
        out.kind = SolveKind::Inconsistent;
        return out;
      }
      continue;
    }
    pivot_col.push_back(lead);
  }
  if (static_cast<Eigen::Index>(pivot_col.size()) < cols) {
    out.kind = SolveKind::Underdetermined;
    return out;
  }
  out.kind = SolveKind::Unique;
  out.solution = Vec<Scalar>::Zero(cols);
  for (size_t i = 0; i < pivot_col.size(); ++i) out.solution(pivot_col[i]) = aug(i, cols);
  return out;
}

// Dimension of the affine hull: rank of {v_j - v_1 : j >= 2}.
inline int affine_rank(const std::vector<RatVector>& points) {
  if (points.empty()) throw std::invalid_argument("affine_rank: empty input");
  const Eigen::Index dim = points.front().size();
  RatMatrix diffs(static_cast<Eigen::Index>(points.size()) - 1, dim);
  for (size_t j = 1; j < points.size(); ++j) {
    if (points[j].size() != dim) throw std::invalid_argument("affine_rank: mixed dimensions");
    diffs.row(static_cast<Eigen::Index>(j - 1)) = (points[j] - points[0]).transpose();
  }
  if (diffs.rows() == 0) return 0;
  return row_echelon(diffs);
}

// Whether x lies in the affine hull of `points` (consistency of the
// difference system; free variables are fine).
inline bool in_affine_hull(const std::vector<RatVector>& points, const RatVector& x) {
  if (points.empty()) return false;
  const Eigen::Index dim = points.front().size();
  RatMatrix a(dim, static_cast<Eigen::Index>(points.size()) - 1);
  for (size_t j = 1; j < points.size(); ++j) a.col(static_cast<Eigen::Index>(j - 1)) = points[j] - points[0];
  RatVector b = x - points[0];
  if (a.cols() == 0) {
    for (Eigen::Index i = 0; i < dim; ++i)
      if (b(i) != 0) return false;
    return true;
  }
  auto solved = solve_linear<Rat>(a, b);
  return solved.kind != SolveKind::Inconsistent;
}

}  // namespace hgraphon
