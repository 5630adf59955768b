// Copyright 2026 The robsel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBSEL_SIMPLEX_HPP
#define ROBSEL_SIMPLEX_HPP

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace robsel {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

/// min objective . x  subject to  ineq_lhs x <= ineq_rhs,
/// eq_lhs x == eq_rhs, x >= 0. Either constraint block may be empty
/// (zero rows), but column counts of nonempty blocks must agree.
template <typename Scalar = double>
struct LpProblem {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Matrix ineq_lhs;
  Vector ineq_rhs;
  Matrix eq_lhs;
  Vector eq_rhs;
  Vector objective;
};

template <typename Scalar = double>
struct LpSolution {
  LpStatus status = LpStatus::IterationLimit;
  Scalar objective = Scalar(0);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
  int iterations = 0;
};

/// Dense two-phase tableau simplex. Bland's rule (lowest eligible index for
/// the entering column, lowest basic index among ratio-test ties) keeps every
/// pivot sequence finite, including fully degenerate ones.
template <typename Scalar = double>
class SimplexSolver {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

  explicit SimplexSolver(Scalar tolerance = Scalar(1e-9), int max_iterations = 0)
      : tol_(tolerance), max_iterations_(max_iterations) {}

  LpSolution<Scalar> solve(const LpProblem<Scalar>& problem) {
    build(problem);
    LpSolution<Scalar> result;

    if (artificial_count_ > 0) {
      run_phase(phase1_costs());
      if (iterations_ >= iteration_cap_) {
        result.status = LpStatus::IterationLimit;
        result.iterations = iterations_;
        return result;
      }
      if (phase_objective_value() > tol_) {
        result.status = LpStatus::Infeasible;
        result.iterations = iterations_;
        return result;
      }
      expel_basic_artificials();
      for (int c = first_artificial_; c < total_cols_; ++c) allowed_[c] = false;
    }

    const bool unbounded = !run_phase(phase2_costs());
    result.iterations = iterations_;
    if (unbounded) {
      result.status = LpStatus::Unbounded;
      return result;
    }
    if (iterations_ >= iteration_cap_) {
      result.status = LpStatus::IterationLimit;
      return result;
    }

    result.status = LpStatus::Optimal;
    result.x = Vector::Zero(structural_count_);
    for (int i = 0; i < row_count_; ++i) {
      if (!row_active_[i]) continue;
      if (basis_[i] < structural_count_) result.x(basis_[i]) = rhs(i);
    }
    result.objective = result.x.dot(objective_);
    return result;
  }

 private:
  // Tableau columns: [structural | slacks | artificials | rhs].
  void build(const LpProblem<Scalar>& problem) {
    const int m_ineq = static_cast<int>(problem.ineq_lhs.rows());
    const int m_eq = static_cast<int>(problem.eq_lhs.rows());
    structural_count_ = static_cast<int>(problem.objective.size());
    row_count_ = m_ineq + m_eq;

    // Slack columns for <= rows; artificial columns for == rows and for
    // <= rows whose slack starts negative (rhs < 0 after normalization).
    slack_count_ = m_ineq;
    first_slack_ = structural_count_;
    first_artificial_ = first_slack_ + slack_count_;

    std::vector<int> needs_artificial;
    needs_artificial.reserve(static_cast<std::size_t>(row_count_));
    for (int i = 0; i < m_ineq; ++i)
      if (problem.ineq_rhs(i) < Scalar(0)) needs_artificial.push_back(i);
    for (int i = 0; i < m_eq; ++i) needs_artificial.push_back(m_ineq + i);
    artificial_count_ = static_cast<int>(needs_artificial.size());
    total_cols_ = first_artificial_ + artificial_count_;

    tableau_ = Matrix::Zero(row_count_, total_cols_ + 1);
    basis_.assign(static_cast<std::size_t>(row_count_), -1);
    row_active_.assign(static_cast<std::size_t>(row_count_), true);
    allowed_.assign(static_cast<std::size_t>(total_cols_), true);

    for (int i = 0; i < m_ineq; ++i) {
      const Scalar sign = problem.ineq_rhs(i) < Scalar(0) ? Scalar(-1) : Scalar(1);
      tableau_.block(i, 0, 1, structural_count_) = sign * problem.ineq_lhs.row(i);
      tableau_(i, first_slack_ + i) = sign;
      tableau_(i, total_cols_) = sign * problem.ineq_rhs(i);
    }
    for (int i = 0; i < m_eq; ++i) {
      const int row = m_ineq + i;
      const Scalar sign = problem.eq_rhs(i) < Scalar(0) ? Scalar(-1) : Scalar(1);
      tableau_.block(row, 0, 1, structural_count_) = sign * problem.eq_lhs.row(i);
      tableau_(row, total_cols_) = sign * problem.eq_rhs(i);
    }

    for (int i = 0; i < m_ineq; ++i)
      if (problem.ineq_rhs(i) >= Scalar(0)) basis_[static_cast<std::size_t>(i)] = first_slack_ + i;
    for (int a = 0; a < artificial_count_; ++a) {
      const int row = needs_artificial[static_cast<std::size_t>(a)];
      tableau_(row, first_artificial_ + a) = Scalar(1);
      basis_[static_cast<std::size_t>(row)] = first_artificial_ + a;
    }

    objective_ = problem.objective;
    iterations_ = 0;
    iteration_cap_ = max_iterations_ > 0 ? max_iterations_
                                         : 200 * (row_count_ + total_cols_) + 5000;
  }

  Vector phase1_costs() const {
    Vector costs = Vector::Zero(total_cols_);
    for (int a = 0; a < artificial_count_; ++a) costs(first_artificial_ + a) = Scalar(1);
    return costs;
  }

  Vector phase2_costs() const {
    Vector costs = Vector::Zero(total_cols_);
    costs.head(structural_count_) = objective_;
    return costs;
  }

  Scalar rhs(int row) const { return tableau_(row, total_cols_); }

  Scalar phase_objective_value() const { return -cost_row_(total_cols_); }

  // Returns false on unboundedness.
  bool run_phase(const Vector& costs) {
    cost_row_ = RowVector::Zero(total_cols_ + 1);
    cost_row_.head(total_cols_) = costs.transpose();
    for (int i = 0; i < row_count_; ++i) {
      if (!row_active_[static_cast<std::size_t>(i)]) continue;
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b >= 0 && costs(b) != Scalar(0)) cost_row_ -= costs(b) * tableau_.row(i);
    }

    while (iterations_ < iteration_cap_) {
      const int entering = pick_entering();
      if (entering < 0) return true;  // optimal for this phase
      const int leaving = pick_leaving(entering);
      if (leaving < 0) return false;  // unbounded
      pivot(leaving, entering);
      ++iterations_;
    }
    return true;
  }

  int pick_entering() const {
    for (int c = 0; c < total_cols_; ++c) {
      if (!allowed_[static_cast<std::size_t>(c)]) continue;
      if (cost_row_(c) < -tol_) return c;
    }
    return -1;
  }

  int pick_leaving(int entering) const {
    int best_row = -1;
    Scalar best_ratio = Scalar(0);
    for (int i = 0; i < row_count_; ++i) {
      if (!row_active_[static_cast<std::size_t>(i)]) continue;
      const Scalar coef = tableau_(i, entering);
      if (coef <= tol_) continue;
      const Scalar ratio = rhs(i) / coef;
      if (best_row < 0 || ratio < best_ratio - tol_ ||
          (ratio < best_ratio + tol_ &&
           basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(best_row)])) {
        best_row = i;
        best_ratio = ratio;
      }
    }
    return best_row;
  }

  void pivot(int row, int col) {
    tableau_.row(row) /= tableau_(row, col);
    const RowVector pivot_row = tableau_.row(row);
    for (int i = 0; i < row_count_; ++i) {
      if (i == row) continue;
      const Scalar factor = tableau_(i, col);
      if (factor != Scalar(0)) tableau_.row(i) -= factor * pivot_row;
    }
    const Scalar cost_factor = cost_row_(col);
    if (cost_factor != Scalar(0)) cost_row_ -= cost_factor * pivot_row;
    const int leaving_var = basis_[static_cast<std::size_t>(row)];
    if (leaving_var >= first_artificial_) allowed_[static_cast<std::size_t>(leaving_var)] = false;
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // After phase 1 an artificial variable may still sit in the basis at value
  // zero; pivot it out on any usable column, or retire the row as redundant.
  void expel_basic_artificials() {
    for (int i = 0; i < row_count_; ++i) {
      if (!row_active_[static_cast<std::size_t>(i)]) continue;
      if (basis_[static_cast<std::size_t>(i)] < first_artificial_) continue;
      int col = -1;
      for (int c = 0; c < first_artificial_; ++c) {
        if (std::abs(tableau_(i, c)) > tol_) {
          col = c;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        row_active_[static_cast<std::size_t>(i)] = false;
        basis_[static_cast<std::size_t>(i)] = -1;
      }
    }
  }

  Scalar tol_;
  int max_iterations_;

  Matrix tableau_;
  RowVector cost_row_;
  Vector objective_;
  std::vector<int> basis_;
  std::vector<bool> row_active_;
  std::vector<bool> allowed_;
  int structural_count_ = 0;
  int slack_count_ = 0;
  int artificial_count_ = 0;
  int first_slack_ = 0;
  int first_artificial_ = 0;
  int total_cols_ = 0;
  int row_count_ = 0;
  int iterations_ = 0;
  int iteration_cap_ = 0;
};

template <typename Scalar = double>
LpSolution<Scalar> solve_lp(const LpProblem<Scalar>& problem, Scalar tolerance = Scalar(1e-9),
                            int max_iterations = 0) {
  SimplexSolver<Scalar> solver(tolerance, max_iterations);
  return solver.solve(problem);
}

}  // namespace robsel

#endif  // ROBSEL_SIMPLEX_HPP
