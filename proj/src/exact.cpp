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

#include "robsel/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace robsel {
namespace {

std::uint64_t effective_cap(std::uint64_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ROBSEL_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return kDefaultEnumerationCap;
}

std::vector<std::vector<int>> sorted_groups(const Instance& instance) {
  std::vector<std::vector<int>> groups = instance.groups;
  for (auto& group : groups) std::sort(group.begin(), group.end());
  return groups;
}

CostVector regret_offsets(const Instance& instance, Objective objective) {
  CostVector offsets = CostVector::Zero(instance.scenario_count());
  if (objective == Objective::MinMaxRegret) {
    for (int k = 0; k < instance.scenario_count(); ++k) offsets(k) = scenario_optimum(instance, k);
  }
  return offsets;
}

Cost shifted_max(const CostVector& accumulated, const CostVector& offsets) {
  return (accumulated - offsets).maxCoeff();
}

}  // namespace

ExactResult brute_force(const Instance& instance, Objective objective, std::uint64_t cap) {
  const std::uint64_t budget = effective_cap(cap);
  std::uint64_t combinations = 1;
  for (const auto& group : instance.groups) {
    combinations *= group.size();
    if (combinations > budget)
      throw EnumerationCapError("brute force refused: more than " + std::to_string(budget) +
                                " combinations (groups so far give " +
                                std::to_string(combinations) + ")");
  }

  const auto groups = sorted_groups(instance);
  const CostVector offsets = regret_offsets(instance, objective);
  const int group_count = instance.group_count();

  ExactResult result;
  result.optimum = std::numeric_limits<Cost>::max();

  CostVector accumulated = CostVector::Zero(instance.scenario_count());
  Selection current;
  current.chosen.assign(static_cast<std::size_t>(group_count), -1);

  // Depth-first product over groups; ascending tool order makes the first
  // strict improvement the lexicographically smallest optimizer.
  auto descend = [&](auto&& self, int depth) -> void {
    if (depth == group_count) {
      ++result.explored;
      const Cost value = shifted_max(accumulated, offsets);
      if (value < result.optimum) {
        result.optimum = value;
        result.argmin = current;
      }
      return;
    }
    for (int j : groups[static_cast<std::size_t>(depth)]) {
      accumulated += instance.costs.col(j);
      current.chosen[static_cast<std::size_t>(depth)] = j;
      self(self, depth + 1);
      accumulated -= instance.costs.col(j);
    }
  };
  descend(descend, 0);
  return result;
}

ExactResult dp_small_k(const Instance& instance, Objective objective, const DpOptions& options) {
  const int scenarios = instance.scenario_count();
  if (scenarios > options.max_scenarios)
    throw std::invalid_argument("dp refused: K=" + std::to_string(scenarios) + " exceeds " +
                                std::to_string(options.max_scenarios));

  const auto groups = sorted_groups(instance);
  const CostVector offsets = regret_offsets(instance, objective);

  // Per-scenario caps derived from the aggregation baseline: a partial vector
  // exceeding the cap in any coordinate cannot finish below the baseline.
  CostVector caps = CostVector::Constant(scenarios, std::numeric_limits<Cost>::max());
  if (options.prune_upper_bound) {
    const Selection baseline = aggregate_approx(instance, AggregationMode::MaxAggregate);
    const EvaluationReport report = evaluate(instance, baseline);
    const Cost bound = objective_value(report, objective);
    for (int k = 0; k < scenarios; ++k) caps(k) = offsets(k) + bound;
  }

  struct Layer {
    std::vector<CostVector> accumulated;
    std::vector<int> parent;
    std::vector<int> tool;
  };
  std::vector<Layer> layers(static_cast<std::size_t>(instance.group_count()) + 1);
  layers[0].accumulated.push_back(CostVector::Zero(scenarios));
  layers[0].parent.push_back(-1);
  layers[0].tool.push_back(-1);

  ExactResult result;

  for (int i = 0; i < instance.group_count(); ++i) {
    const Layer& previous = layers[static_cast<std::size_t>(i)];
    Layer& next = layers[static_cast<std::size_t>(i) + 1];
    for (std::size_t s = 0; s < previous.accumulated.size(); ++s) {
      for (int j : groups[static_cast<std::size_t>(i)]) {
        CostVector candidate = previous.accumulated[s] + instance.costs.col(j);
        ++result.explored;
        if (options.prune_upper_bound && (candidate.array() > caps.array()).any()) continue;

        if (options.prune_dominated) {
          bool dominated = false;
          for (std::size_t t = 0; t < next.accumulated.size() && !dominated; ++t)
            dominated = (next.accumulated[t].array() <= candidate.array()).all();
          if (dominated) continue;
          std::size_t kept = 0;
          for (std::size_t t = 0; t < next.accumulated.size(); ++t) {
            if ((candidate.array() <= next.accumulated[t].array()).all()) continue;
            if (kept != t) {
              next.accumulated[kept] = std::move(next.accumulated[t]);
              next.parent[kept] = next.parent[t];
              next.tool[kept] = next.tool[t];
            }
            ++kept;
          }
          next.accumulated.resize(kept);
          next.parent.resize(kept);
          next.tool.resize(kept);
        }
        next.accumulated.push_back(std::move(candidate));
        next.parent.push_back(static_cast<int>(s));
        next.tool.push_back(j);
      }
    }
    if (next.accumulated.empty())
      throw std::logic_error("dp lost all states; upper bound pruning is inconsistent");
  }

  const Layer& final_layer = layers.back();
  std::size_t best_state = 0;
  Cost best_value = std::numeric_limits<Cost>::max();
  for (std::size_t s = 0; s < final_layer.accumulated.size(); ++s) {
    const Cost value = shifted_max(final_layer.accumulated[s], offsets);
    if (value < best_value) {
      best_value = value;
      best_state = s;
    }
  }

  result.optimum = best_value;
  result.argmin.chosen.assign(static_cast<std::size_t>(instance.group_count()), -1);
  int state = static_cast<int>(best_state);
  for (int i = instance.group_count(); i >= 1; --i) {
    const Layer& layer = layers[static_cast<std::size_t>(i)];
    result.argmin.chosen[static_cast<std::size_t>(i - 1)] =
        layer.tool[static_cast<std::size_t>(state)];
    state = layer.parent[static_cast<std::size_t>(state)];
  }
  return result;
}

Selection aggregate_approx(const Instance& instance, AggregationMode mode) {
  Selection selection;
  selection.chosen.reserve(instance.groups.size());
  for (const auto& group : instance.groups) {
    int best_tool = -1;
    Cost best_score = 0;
    for (int j : group) {
      const Cost score = mode == AggregationMode::MaxAggregate
                             ? instance.costs.col(j).maxCoeff()
                             : instance.costs.col(j).sum();
      if (best_tool < 0 || score < best_score ||
          (score == best_score && j < best_tool)) {
        best_tool = j;
        best_score = score;
      }
    }
    selection.chosen.push_back(best_tool);
  }
  return selection;
}

}  // namespace robsel
