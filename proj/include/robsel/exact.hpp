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

#ifndef ROBSEL_EXACT_HPP
#define ROBSEL_EXACT_HPP

#include <cstdint>
#include <stdexcept>

#include "robsel/instance.hpp"

namespace robsel {

/// Raised when an exact solver would exceed its enumeration budget.
struct EnumerationCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExactResult {
  Cost optimum = 0;
  Selection argmin;
  std::uint64_t explored = 0;  ///< enumerated selections / generated DP states
};

/// Default brute-force budget; override per call or through the
/// ROBSEL_ORACLE_CAP environment variable.
constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Exhaustive enumeration over all selections. Ties resolve to the
/// lexicographically smallest selection (group members visited in ascending
/// tool order). Refuses with an EnumerationCapError when the combination
/// count exceeds the cap (0 means: environment override or default).
ExactResult brute_force(const Instance& instance, Objective objective, std::uint64_t cap = 0);

struct DpOptions {
  int max_scenarios = 3;
  bool prune_dominated = true;
  bool prune_upper_bound = true;
};

/// Group-by-group dynamic program over Pareto-minimal accumulated cost
/// vectors (u dominates v when u <= v componentwise). Regret offsets are
/// applied only at the final aggregation, never to per-state vectors.
/// Refuses (std::invalid_argument) when K exceeds options.max_scenarios.
ExactResult dp_small_k(const Instance& instance, Objective objective,
                       const DpOptions& options = {});

enum class AggregationMode { MaxAggregate, Midpoint };

/// Scenario-aggregation baseline: per group the tool minimizing the
/// aggregated cost, max_k c_kj for MaxAggregate (the K-approximation for the
/// min-max objective) or the scenario mean for Midpoint. Ties take the lowest
/// tool index.
Selection aggregate_approx(const Instance& instance, AggregationMode mode);

}  // namespace robsel

#endif  // ROBSEL_EXACT_HPP
