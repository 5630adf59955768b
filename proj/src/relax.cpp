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

#include "robsel/relax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "robsel/simplex.hpp"

namespace robsel {
namespace {

constexpr double kTol = 1e-9;

/// Worst per-scenario load minimized over fractional selections supported on
/// `filter`. Scenario rows enter the working LP lazily: the simplex solves a
/// small system, the full K loads are checked by one dense product, and the
/// most violated row joins the system until none is violated.
struct MinMaxLoad {
  double value = 0.0;
  Eigen::VectorXd x;  // full length n
};

std::optional<MinMaxLoad> min_max_load(const Instance& instance, const std::vector<int>& filter) {
  const int scenarios = instance.scenario_count();
  const int groups = instance.group_count();
  const int cols = static_cast<int>(filter.size());

  std::vector<std::vector<int>> sub_groups(static_cast<std::size_t>(groups));
  {
    std::vector<int> column_of(static_cast<std::size_t>(instance.tool_count()), -1);
    for (int c = 0; c < cols; ++c) column_of[static_cast<std::size_t>(filter[c])] = c;
    for (int i = 0; i < groups; ++i) {
      for (int j : instance.groups[i]) {
        const int c = column_of[static_cast<std::size_t>(j)];
        if (c >= 0) sub_groups[static_cast<std::size_t>(i)].push_back(c);
      }
      if (sub_groups[static_cast<std::size_t>(i)].empty()) return std::nullopt;
      std::sort(sub_groups[static_cast<std::size_t>(i)].begin(),
                sub_groups[static_cast<std::size_t>(i)].end());
    }
  }

  Eigen::MatrixXd sub_costs(scenarios, cols);
  for (int c = 0; c < cols; ++c)
    sub_costs.col(c) = instance.costs.col(filter[static_cast<std::size_t>(c)]).cast<double>();

  // Variables: x_0..x_{cols-1}, then the load bound t.
  const int vars = cols + 1;
  LpProblem<double> lp;
  lp.objective = Eigen::VectorXd::Zero(vars);
  lp.objective(cols) = 1.0;
  lp.eq_lhs = Eigen::MatrixXd::Zero(groups, vars);
  lp.eq_rhs = Eigen::VectorXd::Ones(groups);
  for (int i = 0; i < groups; ++i)
    for (int c : sub_groups[static_cast<std::size_t>(i)]) lp.eq_lhs(i, c) = 1.0;

  std::vector<int> working;
  Eigen::VectorXd x_sub = Eigen::VectorXd::Zero(cols);
  double bound = 0.0;

  for (int round = 0; round <= scenarios; ++round) {
    lp.ineq_lhs = Eigen::MatrixXd::Zero(static_cast<int>(working.size()), vars);
    lp.ineq_rhs = Eigen::VectorXd::Zero(static_cast<int>(working.size()));
    for (std::size_t w = 0; w < working.size(); ++w) {
      lp.ineq_lhs.row(static_cast<int>(w)).head(cols) = sub_costs.row(working[w]);
      lp.ineq_lhs(static_cast<int>(w), cols) = -1.0;
    }

    const LpSolution<double> sol = solve_lp(lp, kTol);
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error("load LP unexpectedly not optimal");
    x_sub = sol.x.head(cols);
    bound = sol.x(cols);

    const Eigen::VectorXd loads = sub_costs * x_sub;
    int worst = -1;
    double worst_violation = kTol;
    for (int k = 0; k < scenarios; ++k) {
      const double violation = loads(k) - bound;
      if (violation > worst_violation) {
        worst_violation = violation;
        worst = k;
      }
    }
    if (worst < 0) break;
    if (std::find(working.begin(), working.end(), worst) != working.end()) break;
    working.push_back(worst);
  }

  MinMaxLoad result;
  result.value = bound;
  result.x = Eigen::VectorXd::Zero(instance.tool_count());
  for (int c = 0; c < cols; ++c) result.x(filter[static_cast<std::size_t>(c)]) = x_sub(c);
  return result;
}

std::vector<Cost> tool_maxima(const Instance& instance) {
  std::vector<Cost> d(static_cast<std::size_t>(instance.tool_count()));
  for (int j = 0; j < instance.tool_count(); ++j)
    d[static_cast<std::size_t>(j)] = instance.costs.col(j).maxCoeff();
  return d;
}

}  // namespace

std::vector<int> filter_set(const Instance& instance, double threshold) {
  const double level = std::max(threshold, 0.0);
  const std::vector<Cost> d = tool_maxima(instance);
  std::vector<int> filter;
  for (int j = 0; j < instance.tool_count(); ++j)
    if (static_cast<double>(d[static_cast<std::size_t>(j)]) <= level) filter.push_back(j);
  return filter;
}

std::optional<FractionalSolution> lp_feasible(const Instance& instance, double threshold) {
  if (threshold < 0) return std::nullopt;
  const std::vector<int> filter = filter_set(instance, threshold);
  const auto load = min_max_load(instance, filter);
  if (!load || load->value > threshold + kTol) return std::nullopt;
  return FractionalSolution{load->x, filter};
}

LpResult solve_lstar(const Instance& instance) {
  const std::vector<Cost> d = tool_maxima(instance);

  LpResult result;
  result.breakpoints = d;
  std::sort(result.breakpoints.begin(), result.breakpoints.end());
  result.breakpoints.erase(std::unique(result.breakpoints.begin(), result.breakpoints.end()),
                           result.breakpoints.end());

  // Below this breakpoint some group has an empty filter.
  Cost cover = 0;
  for (const auto& group : instance.groups) {
    Cost group_min = std::numeric_limits<Cost>::max();
    for (int j : group) group_min = std::min(group_min, d[static_cast<std::size_t>(j)]);
    cover = std::max(cover, group_min);
  }

  bool have_best = false;
  double best = 0.0;
  Cost best_breakpoint = 0;
  Eigen::VectorXd best_x;

  for (Cost t : result.breakpoints) {
    if (t < cover) continue;
    const auto load = min_max_load(instance, filter_set(instance, static_cast<double>(t)));
    if (!load) throw std::logic_error("covering filter lost a group");
    const double candidate = std::max(static_cast<double>(t), load->value);
    if (!have_best || candidate < best - kTol) {
      have_best = true;
      best = candidate;
      best_breakpoint = t;
      best_x = load->x;
    }
    // Larger breakpoints can only produce candidates above t.
    if (load->value <= static_cast<double>(t)) break;
  }
  if (!have_best) throw std::invalid_argument("instance has no coverable filter");

  result.l_star = best;
  result.chosen_breakpoint = best_breakpoint;
  result.solution.x = best_x;
  result.solution.filter = filter_set(instance, result.l_star + kTol);

  const auto violations = check_certificate(instance, result.solution, result.l_star);
  if (!violations.empty())
    throw std::logic_error("L* certificate failed re-verification: " + violations.front());
  return result;
}

double solve_lstar_bisection(const Instance& instance, double tolerance) {
  const std::vector<Cost> d = tool_maxima(instance);
  Cost max_d = 0;
  for (Cost v : d) max_d = std::max(max_d, v);

  double lo = 0.0;
  double hi = static_cast<double>(instance.group_count()) * static_cast<double>(max_d);
  if (lp_feasible(instance, lo)) return lo;
  if (!lp_feasible(instance, hi)) throw std::logic_error("upper bisection bound infeasible");
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (lp_feasible(instance, mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

std::vector<std::string> check_certificate(const Instance& instance,
                                           const FractionalSolution& candidate, double threshold,
                                           double tolerance) {
  std::vector<std::string> violations;
  if (candidate.x.size() != instance.tool_count()) {
    violations.push_back("solution length mismatch");
    return violations;
  }

  std::vector<bool> allowed(static_cast<std::size_t>(instance.tool_count()), false);
  for (int j : candidate.filter) allowed[static_cast<std::size_t>(j)] = true;

  for (int j = 0; j < instance.tool_count(); ++j) {
    if (candidate.x(j) < -tolerance)
      violations.push_back("negative weight on tool " + std::to_string(j));
    if (!allowed[static_cast<std::size_t>(j)] && std::abs(candidate.x(j)) > tolerance)
      violations.push_back("weight outside filter on tool " + std::to_string(j));
  }

  for (int i = 0; i < instance.group_count(); ++i) {
    double sum = 0.0;
    for (int j : instance.groups[i]) sum += candidate.x(j);
    if (std::abs(sum - 1.0) > tolerance)
      violations.push_back("group " + std::to_string(i) + " weight sum " + std::to_string(sum));
  }

  const Eigen::VectorXd loads = instance.costs.cast<double>() * candidate.x;
  for (int k = 0; k < instance.scenario_count(); ++k) {
    if (loads(k) > threshold + tolerance)
      violations.push_back("scenario " + std::to_string(k) + " load " + std::to_string(loads(k)) +
                           " exceeds " + std::to_string(threshold));
  }
  return violations;
}

}  // namespace robsel
