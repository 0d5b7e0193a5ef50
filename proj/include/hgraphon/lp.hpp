#pragma once

#include "hgraphon/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hgraphon {

// Equality-form program: maximize objective . x subject to
// eq_lhs x = eq_rhs and x >= lower_bounds (componentwise).
struct LinearProgram {
  RatVector objective;
  RatMatrix eq_lhs;
  RatVector eq_rhs;
  RatVector lower_bounds;
};

struct LPOutcome {
  enum class Kind { Infeasible, Unbounded, Optimal };
  Kind kind = Kind::Infeasible;
  Rat value;           // valid when Optimal
  RatVector solution;  // valid when Optimal; satisfies constraints exactly
};

namespace detail {

// Dense two-phase primal simplex with Bland's pivoting rule. Everything is
// exact: pivots use field division, feasibility and optimality are decided
// by sign tests on exact scalars. Bland's rule (entering: lowest improving
// column index; leaving: lowest basic variable index among minimum ratios)
// guarantees termination.
template <class Scalar>
class SimplexTableau {
 public:
  SimplexTableau(const Mat<Scalar>& a, const Vec<Scalar>& b) {
    m_ = a.rows();
    n_ = a.cols();
    tab_.resize(m_, n_ + m_ + 1);
    tab_.setZero();
    tab_.leftCols(n_) = a;
    basis_.resize(m_);
    allowed_.assign(n_ + m_, true);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const bool flip = b(i) < 0;
      if (flip) tab_.row(i) = -tab_.row(i);
      tab_(i, rhs()) = flip ? Scalar(-b(i)) : b(i);
      tab_(i, n_ + i) = 1;
      basis_[i] = n_ + i;
    }
  }

  // Returns false when the constraints are infeasible.
  bool phase1() {
    cost_ = Vec<Scalar>::Zero(n_ + m_ + 1);
    for (Eigen::Index j = 0; j < n_; ++j)
      for (Eigen::Index i = 0; i < m_; ++i) cost_(j) += tab_(i, j);
    for (Eigen::Index i = 0; i < m_; ++i) cost_(rhs()) += tab_(i, rhs());
    run_bland();
    if (cost_(rhs()) != 0) return false;  // some artificial stuck positive
    drive_out_artificials();
    return true;
  }

  // Runs phase 2 for the given objective (over the n structural columns).
  // Returns false when unbounded.
  bool phase2(const Vec<Scalar>& objective) {
    for (Eigen::Index j = n_; j < n_ + m_; ++j) allowed_[j] = false;
    cost_ = Vec<Scalar>::Zero(n_ + m_ + 1);
    cost_.head(n_) = objective;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;  // redundant row kept with artificial basis
      const Scalar cb = objective(basis_[i]);
      if (cb == 0) continue;
      cost_ -= cb * tab_.row(i).transpose();
    }
    return run_bland();
  }

  Vec<Scalar> structural_solution() const {
    Vec<Scalar> x = Vec<Scalar>::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i)
      if (basis_[i] < n_) x(basis_[i]) = tab_(i, rhs());
    return x;
  }

  Scalar objective_value() const { return -cost_(rhs()); }

 private:
  Eigen::Index rhs() const { return n_ + m_; }

  // Bland: smallest column index with positive reduced cost enters; among
  // minimum-ratio rows the smallest basic variable index leaves.
  bool run_bland() {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < n_ + m_; ++j) {
        if (allowed_[j] && cost_(j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;  // optimal
      Eigen::Index leave = -1;
      Scalar best_ratio;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (tab_(i, enter) <= 0) continue;
        Scalar ratio = tab_(i, rhs()) / tab_(i, enter);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded direction
      pivot(leave, enter);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index e) {
    const Eigen::Index old = basis_[r];
    if (old >= n_) allowed_[old] = false;  // artificials never re-enter
    const Scalar inv = Scalar(1) / tab_(r, e);
    tab_.row(r) *= inv;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == r || tab_(i, e) == 0) continue;
      const Scalar factor = tab_(i, e);
      tab_.row(i) -= factor * tab_.row(r);
    }
    if (cost_(e) != 0) {
      const Scalar ce = cost_(e);
      cost_ -= ce * tab_.row(r).transpose();
    }
    basis_[r] = e;
  }

  void drive_out_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      Eigen::Index e = -1;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (tab_(i, j) != 0) {
          e = j;
          break;
        }
      }
      // All-zero structural row: redundant constraint; the artificial stays
      // basic at zero and its row never pivots again.
      if (e >= 0) pivot(i, e);
    }
  }

  Eigen::Index m_ = 0, n_ = 0;
  Mat<Scalar> tab_;
  Vec<Scalar> cost_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> allowed_;
};

}  // namespace detail

inline LPOutcome solve_lp(const LinearProgram& lp) {
  const Eigen::Index n = lp.eq_lhs.cols();
  const Eigen::Index m = lp.eq_lhs.rows();
  if (lp.objective.size() != n || lp.lower_bounds.size() != n || lp.eq_rhs.size() != m)
    throw std::invalid_argument("solve_lp: inconsistent dimensions");

  // Shift to y = x - lower_bounds >= 0.
  RatVector b = lp.eq_rhs - lp.eq_lhs * lp.lower_bounds;
  detail::SimplexTableau<Rat> tableau(lp.eq_lhs, b);

  LPOutcome out;
  if (!tableau.phase1()) {
    out.kind = LPOutcome::Kind::Infeasible;
    return out;
  }
  if (!tableau.phase2(lp.objective)) {
    out.kind = LPOutcome::Kind::Unbounded;
    return out;
  }
  out.kind = LPOutcome::Kind::Optimal;
  out.solution = tableau.structural_solution() + lp.lower_bounds;
  out.value = tableau.objective_value() + lp.objective.dot(lp.lower_bounds);

  // The solver must never hand back an approximate answer; check exactly.
  RatVector residual = lp.eq_lhs * out.solution - lp.eq_rhs;
  for (Eigen::Index i = 0; i < m; ++i)
    if (residual(i) != 0) throw std::logic_error("solve_lp: equality residual nonzero");
  for (Eigen::Index j = 0; j < n; ++j)
    if (out.solution(j) < lp.lower_bounds(j)) throw std::logic_error("solve_lp: bound violated");
  if (out.value != lp.objective.dot(out.solution))
    throw std::logic_error("solve_lp: objective value mismatch");
  return out;
}

}  // namespace hgraphon
