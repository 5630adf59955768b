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

#ifndef ROBSEL_INSTANCE_HPP
#define ROBSEL_INSTANCE_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace robsel {

using Cost = std::int64_t;
using CostMatrix = Eigen::Matrix<Cost, Eigen::Dynamic, Eigen::Dynamic>;
using CostVector = Eigen::Matrix<Cost, Eigen::Dynamic, 1>;

/// A representatives-selection instance: n tools partitioned into p disjoint
/// groups, with a K x n matrix of nonnegative integer costs (one row per
/// scenario). Instances are immutable after validation; every operation in
/// this library treats them as read-only.
struct Instance {
  std::vector<std::vector<int>> groups;  ///< disjoint tool-index sets T_1..T_p
  CostMatrix costs;                      ///< K x n, costs(k, j) >= 0
  std::vector<std::string> names;        ///< optional per-tool labels

  int group_count() const { return static_cast<int>(groups.size()); }
  int tool_count() const { return static_cast<int>(costs.cols()); }
  int scenario_count() const { return static_cast<int>(costs.rows()); }

  /// Largest group size r_max = max_i |T_i|.
  int max_group_size() const;

  bool operator==(const Instance& other) const;
};

/// One chosen tool index per group: chosen[i] is a member of groups[i].
struct Selection {
  std::vector<int> chosen;

  bool operator==(const Selection&) const = default;
};

enum class Objective { MinMax, MinMaxRegret };

struct EvaluationReport {
  CostVector per_scenario_cost;  ///< F(X, S_k) for each scenario k
  Cost max_cost = 0;             ///< max_k F(X, S_k)
  CostVector scenario_optima;    ///< F*(S_k) for each scenario k
  CostVector regrets;            ///< F(X, S_k) - F*(S_k), nonnegative
  Cost max_regret = 0;           ///< max_k regret
};

/// Returns every violated instance invariant; an empty list means valid.
std::vector<std::string> validate(const Instance& instance);

/// Builds an Instance from raw parts, checking the invariants that are only
/// visible before construction (ragged cost rows in particular) together with
/// the regular ones. On failure `instance` is empty and `errors` lists every
/// violation found.
struct InstanceBuildResult {
  std::optional<Instance> instance;
  std::vector<std::string> errors;
};
InstanceBuildResult make_instance(std::vector<std::vector<int>> groups,
                                  const std::vector<std::vector<Cost>>& cost_rows,
                                  std::vector<std::string> names = {});

/// True iff `selection` picks exactly one in-range member of each group.
bool is_valid_selection(const Instance& instance, const Selection& selection);

/// F(X, S_k): total cost of the selection under scenario k.
/// Throws std::out_of_range / std::invalid_argument on bad k or selection.
Cost eval_scenario(const Instance& instance, const Selection& selection, int k);

/// F*(S_k): sum over groups of the cheapest tool under scenario k.
Cost scenario_optimum(const Instance& instance, int k);

EvaluationReport evaluate(const Instance& instance, const Selection& selection);

Cost objective_value(const EvaluationReport& report, Objective objective);

const char* objective_name(Objective objective);

}  // namespace robsel

#endif  // ROBSEL_INSTANCE_HPP
