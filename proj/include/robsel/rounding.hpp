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

#ifndef ROBSEL_ROUNDING_HPP
#define ROBSEL_ROUNDING_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "robsel/instance.hpp"
#include "robsel/relax.hpp"

namespace robsel {

/// Raised by build_scaled when l_star == 0: scaling is undefined and the
/// trivial zero-cost selection is optimal (see zero_threshold_selection).
struct ZeroThresholdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cost matrix restricted to the tools surviving the L* filter and divided
/// by L*, with an optional dyadic bit-plane decomposition.
///
/// planes[l] is a 0/1 matrix of weight 2^-l; plane 0 carries the entries that
/// equal 1 exactly (cost equal to L*), planes 1..bit_count truncate the
/// fractional entries to bit_count bits, so every reconstructed entry is
/// within < 2^-bit_count of matrix(k, j).
struct ScaledMatrix {
  Eigen::MatrixXd matrix;                ///< K x n' entries in [0, 1]
  Eigen::VectorXd mu;                    ///< per-scenario loads (matrix * x)
  Eigen::VectorXd x;                     ///< weights restricted to kept tools
  std::vector<int> kept_tools;           ///< original tool index per column
  std::vector<std::vector<int>> groups;  ///< group members as column indices
  int bit_count = 0;                     ///< t = ceil(log2 n')
  std::vector<Eigen::MatrixXi> planes;   ///< bit_count + 1 binary matrices

  /// Dyadic reconstruction sum_l 2^-l planes[l].
  Eigen::MatrixXd tilde() const;
};

struct RoundingReport {
  Selection selection;
  Cost max_cost = 0;               ///< cost_1 of the selection, original units
  Eigen::VectorXd scaled_loads;    ///< per-scenario loads divided by L*
  bool zero_threshold = false;

  // Estimator system (derandomized modes only; empty otherwise). For the
  // binary-expansion wrapper these run over the stacked plane rows.
  Eigen::VectorXd mu;              ///< expected load per estimator row
  Eigen::VectorXd thresholds;      ///< tau_k = mu_k + lambda * max(1, mu_k)
  Eigen::VectorXi estimator_loads; ///< integer row loads of the rounded z
  std::vector<double> log_phi_trace;  ///< log Phi after each group decision
  double log_phi0 = 0.0;
  double lambda = 0.0;

  std::uint64_t seed = 0;  ///< randomized mode only

  // Binary-expansion wrapper only: per-plane |(C^l z)_k - (C^l x)_k|, their
  // weighted recombination, and the deviation of the reconstructed matrix.
  Eigen::MatrixXd plane_deviation;   ///< (bit_count + 1) x K
  Eigen::VectorXd recombined_bound;  ///< sum_l 2^-l plane_deviation(l, k)
  Eigen::VectorXd tilde_deviation;   ///< |(tilde z)_k - (tilde x)_k|
};

/// Per group, the tool of maximal fractional weight (lowest index on ties).
/// Guarantees cost_1 <= r_max * l_star.
Selection round_rmax(const Instance& instance, const LpResult& lp);

/// Lowest-index tool with all-zero costs in each group; the optimal
/// selection whenever l_star == 0.
Selection zero_threshold_selection(const Instance& instance);

/// Independent categorical sample per group, weights given by the fractional
/// solution, drawn by cumulative sums over ascending tool index.
/// Deterministic for a fixed seed.
RoundingReport round_randomized(const Instance& instance, const LpResult& lp, std::uint64_t seed);

ScaledMatrix build_scaled(const Instance& instance, const LpResult& lp, bool with_bit_planes);

/// Derandomized rounding of a group-stochastic x against a 0/1 matrix by the
/// method of pessimistic estimators. Finds the smallest lambda (geometric
/// bracketing, then bisection to the given relative precision) for which the
/// initial estimator drops below 1, then fixes each group in ascending order
/// to the support tool minimizing the updated estimator. The result satisfies
/// (Cz)_k <= tau_k for every row.
RoundingReport round_pessimistic_binary(const Eigen::MatrixXi& binary,
                                        const std::vector<std::vector<int>>& groups,
                                        const Eigen::VectorXd& x,
                                        double lambda_precision = 1e-3);

/// Binary-expansion wrapper: scales by L*, decomposes into bit planes, stacks
/// all plane rows into one binary system, runs round_pessimistic_binary once,
/// and maps the result back to the original instance.
RoundingReport round_pessimistic(const Instance& instance, const LpResult& lp);

}  // namespace robsel

#endif  // ROBSEL_ROUNDING_HPP
