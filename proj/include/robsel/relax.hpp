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

#ifndef ROBSEL_RELAX_HPP
#define ROBSEL_RELAX_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "robsel/instance.hpp"

namespace robsel {

/// A fractional selection: weights over all n tools, zero outside `filter`,
/// summing to 1 (within tolerance) inside each group.
struct FractionalSolution {
  Eigen::VectorXd x;
  std::vector<int> filter;  ///< tools allowed to carry weight, ascending
};

struct LpResult {
  double l_star = 0.0;              ///< smallest L with LP(L) feasible
  FractionalSolution solution;      ///< feasible for LP(l_star)
  std::vector<Cost> breakpoints;    ///< sorted distinct d_j = max_k c_kj
  Cost chosen_breakpoint = 0;       ///< filter threshold attaining the optimum
};

/// T(L) = { j : max_k c_kj <= L }. Negative thresholds behave like 0.
std::vector<int> filter_set(const Instance& instance, double threshold);

/// Feasibility of LP(L): minimizes the worst per-scenario load over the
/// filter T(L) and accepts when that minimum is <= L. Returns a certifying
/// fractional solution, or nothing (also when some group has no tool in
/// the filter).
std::optional<FractionalSolution> lp_feasible(const Instance& instance, double threshold);

/// Exact L* by scanning the breakpoints of d_j: L* = min_m max(t_m, L_m)
/// over breakpoints t_m whose filter covers every group, where L_m is the
/// LP-optimal worst load restricted to that filter.
LpResult solve_lstar(const Instance& instance);

/// Bisection on lp_feasible, accurate to `tolerance`. Cross-check companion
/// for solve_lstar, not the primary path.
double solve_lstar_bisection(const Instance& instance, double tolerance = 1e-6);

/// Re-verifies, independently of the solver, that `candidate` satisfies the
/// relaxation at threshold L: group sums equal 1, weights nonnegative and
/// supported on T(L), and every scenario load is at most L. Returns the list
/// of violations (empty when the certificate holds).
std::vector<std::string> check_certificate(const Instance& instance,
                                           const FractionalSolution& candidate, double threshold,
                                           double tolerance = 1e-9);

}  // namespace robsel

#endif  // ROBSEL_RELAX_HPP
