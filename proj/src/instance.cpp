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

#include "robsel/instance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace robsel {

int Instance::max_group_size() const {
  std::size_t r = 0;
  for (const auto& group : groups) r = std::max(r, group.size());
  return static_cast<int>(r);
}

bool Instance::operator==(const Instance& other) const {
  return groups == other.groups && names == other.names &&
         costs.rows() == other.costs.rows() && costs.cols() == other.costs.cols() &&
         (costs.array() == other.costs.array()).all();
}

std::vector<std::string> validate(const Instance& instance) {
  std::vector<std::string> violations;
  const int n = instance.tool_count();

  if (instance.scenario_count() < 1) violations.push_back("scenario count K must be >= 1");
  if (instance.groups.empty()) violations.push_back("group count p must be >= 1");

  std::vector<int> owner(static_cast<std::size_t>(std::max(n, 0)), -1);
  for (int i = 0; i < instance.group_count(); ++i) {
    const auto& group = instance.groups[i];
    if (group.empty()) violations.push_back("group " + std::to_string(i) + " is empty");
    for (int j : group) {
      if (j < 0 || j >= n) {
        violations.push_back("group " + std::to_string(i) + " references tool " +
                             std::to_string(j) + " outside [0, " + std::to_string(n) + ")");
      } else if (owner[static_cast<std::size_t>(j)] >= 0) {
        violations.push_back("groups not disjoint: tool " + std::to_string(j) +
                             " appears in group " + std::to_string(owner[static_cast<std::size_t>(j)]) +
                             " and group " + std::to_string(i));
      } else {
        owner[static_cast<std::size_t>(j)] = i;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (owner[static_cast<std::size_t>(j)] < 0)
      violations.push_back("tool " + std::to_string(j) + " belongs to no group");
  }

  for (int k = 0; k < instance.scenario_count(); ++k) {
    for (int j = 0; j < n; ++j) {
      if (instance.costs(k, j) < 0) {
        violations.push_back("negative cost at scenario " + std::to_string(k) + ", tool " +
                             std::to_string(j));
      }
    }
  }

  if (!instance.names.empty() && static_cast<int>(instance.names.size()) != n)
    violations.push_back("names has " + std::to_string(instance.names.size()) +
                         " entries, expected " + std::to_string(n));

  return violations;
}

InstanceBuildResult make_instance(std::vector<std::vector<int>> groups,
                                  const std::vector<std::vector<Cost>>& cost_rows,
                                  std::vector<std::string> names) {
  InstanceBuildResult result;
  if (cost_rows.empty()) {
    result.errors.push_back("scenario count K must be >= 1");
    return result;
  }
  const std::size_t n = cost_rows.front().size();
  for (std::size_t k = 0; k < cost_rows.size(); ++k) {
    if (cost_rows[k].size() != n) {
      result.errors.push_back("ragged costs: row " + std::to_string(k) + " has length " +
                              std::to_string(cost_rows[k].size()) + ", expected " +
                              std::to_string(n));
    }
  }
  if (!result.errors.empty()) return result;

  Instance instance;
  instance.groups = std::move(groups);
  instance.names = std::move(names);
  instance.costs.resize(static_cast<Eigen::Index>(cost_rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < cost_rows.size(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      instance.costs(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = cost_rows[k][j];

  result.errors = validate(instance);
  if (result.errors.empty()) result.instance = std::move(instance);
  return result;
}

bool is_valid_selection(const Instance& instance, const Selection& selection) {
  if (static_cast<int>(selection.chosen.size()) != instance.group_count()) return false;
  for (int i = 0; i < instance.group_count(); ++i) {
    const auto& group = instance.groups[i];
    if (std::find(group.begin(), group.end(), selection.chosen[i]) == group.end()) return false;
  }
  return true;
}

Cost eval_scenario(const Instance& instance, const Selection& selection, int k) {
  if (k < 0 || k >= instance.scenario_count())
    throw std::out_of_range("scenario index " + std::to_string(k) + " outside [0, " +
                            std::to_string(instance.scenario_count()) + ")");
  if (!is_valid_selection(instance, selection))
    throw std::invalid_argument("selection does not pick one tool per group");
  Cost total = 0;
  for (int j : selection.chosen) total += instance.costs(k, j);
  return total;
}

Cost scenario_optimum(const Instance& instance, int k) {
  if (k < 0 || k >= instance.scenario_count())
    throw std::out_of_range("scenario index " + std::to_string(k) + " outside [0, " +
                            std::to_string(instance.scenario_count()) + ")");
  Cost total = 0;
  for (const auto& group : instance.groups) {
    Cost best = std::numeric_limits<Cost>::max();
    for (int j : group) best = std::min(best, instance.costs(k, j));
    total += best;
  }
  return total;
}

EvaluationReport evaluate(const Instance& instance, const Selection& selection) {
  if (!is_valid_selection(instance, selection))
    throw std::invalid_argument("selection does not pick one tool per group");
  const int scenarios = instance.scenario_count();
  EvaluationReport report;
  report.per_scenario_cost.resize(scenarios);
  report.scenario_optima.resize(scenarios);
  report.regrets.resize(scenarios);
  for (int k = 0; k < scenarios; ++k) {
    report.per_scenario_cost(k) = eval_scenario(instance, selection, k);
    report.scenario_optima(k) = scenario_optimum(instance, k);
    report.regrets(k) = report.per_scenario_cost(k) - report.scenario_optima(k);
  }
  report.max_cost = report.per_scenario_cost.maxCoeff();
  report.max_regret = report.regrets.maxCoeff();
  return report;
}

Cost objective_value(const EvaluationReport& report, Objective objective) {
  return objective == Objective::MinMax ? report.max_cost : report.max_regret;
}

const char* objective_name(Objective objective) {
  return objective == Objective::MinMax ? "minmax" : "regret";
}

}  // namespace robsel
