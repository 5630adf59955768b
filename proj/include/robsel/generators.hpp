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

#ifndef ROBSEL_GENERATORS_HPP
#define ROBSEL_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "robsel/exact.hpp"
#include "robsel/instance.hpp"

namespace robsel {

/// Worst-case family for the relaxation: p groups of p tools, one scenario
/// per tuple in [p]^p charging cost 1 to the tuple's tool in each group.
/// L* = 1 while every selection costs exactly p. Refuses when p^p exceeds
/// the scenario cap.
Instance gen_gap(int p, std::uint64_t scenario_cap = 100'000);

/// Bipartite constraint system: vertices 0..v_count-1 on one side,
/// 0..w_count-1 on the other, labels 0..label_count-1, and a partial
/// label map per edge.
struct LabelCoverInstance {
  struct Edge {
    int v = 0;
    int w = 0;
    std::map<int, int> sigma;  ///< partial map, label on v side -> label on w side
  };
  int v_count = 0;
  int w_count = 0;
  int label_count = 0;
  std::vector<Edge> edges;
};

std::vector<std::string> validate(const LabelCoverInstance& lc);

/// A tool of the reduced instance: the label pair (v_label, w_label) it
/// assigns on its edge.
struct ToolLabel {
  int edge = 0;
  int v = 0;
  int w = 0;
  int v_label = 0;
  int w_label = 0;
};

/// True iff the pair never assigns the same label twice to a shared vertex.
bool label_distinct(const ToolLabel& a, const ToolLabel& b);

struct ReductionConfig {
  int gap_target = 1;                      ///< g: unit tools per scenario
  std::uint64_t scenario_cap = 100'000;    ///< limit on enumerated tuples
};

struct ReductionResult {
  Instance instance;
  std::vector<ToolLabel> tools;      ///< annotation per tool index
  std::uint64_t enumerated = 0;      ///< label-distinct tuples before dedup
  std::uint64_t duplicates = 0;      ///< scenarios dropped as duplicates
  std::uint64_t scenario_bound = 0;  ///< |V||W|^g N^g + |W||V|^g N^g + 1
};

/// One group per edge with tools (i, sigma(i)); for every vertex, every
/// g-set of distinct incident edges and every pairwise label-distinct tool
/// tuple yields a 0/1 scenario, plus one final all-zero scenario. Identical
/// scenario vectors are deduplicated (counted in `duplicates`).
ReductionResult reduce_labelcover(const LabelCoverInstance& lc, const ReductionConfig& config);

struct Labeling {
  std::vector<std::set<int>> v_labels;
  std::vector<std::set<int>> w_labels;
};

/// Labels induced by a selection of the reduced instance: each selected tool
/// (i, j) contributes i to its v endpoint and j to its w endpoint.
Labeling extract_labeling(const ReductionResult& reduction, const Selection& selection);

bool labeling_satisfies_all(const LabelCoverInstance& lc, const Labeling& labeling);

int labeling_value(const Labeling& labeling);

/// Exhaustive val(L): the minimal worst-case label-set size over total
/// labelings, or nothing when no labeling satisfies every edge. Restricted
/// to tiny instances (at most `max_vertices` vertices, `max_labels` labels).
std::optional<int> label_cover_value(const LabelCoverInstance& lc, int max_vertices = 6,
                                     int max_labels = 3);

/// Regret gadget: appends to each group a dummy tool that is free under every
/// original scenario, plus one scenario charging `large_cost` to every dummy.
/// For large_cost above every achievable max cost, the regret optimum of the
/// result equals the min-max optimum of the input.
Instance augment_regret(const Instance& instance, Cost large_cost);

/// Same, with large_cost = cost_1 of the max-aggregation baseline + 1.
Instance augment_regret(const Instance& instance);

/// Uniform integer costs in [0, cost_max], p groups of r tools each.
/// Byte-identical output for a fixed seed.
Instance gen_random(int p, int r, int scenarios, Cost cost_max, std::uint64_t seed);

/// Appends all-zero cost scenarios. Neither objective nor L* changes; the
/// harness uses this to grow K in ratio experiments.
Instance pad_zero_scenarios(const Instance& instance, int extra_scenarios);

/// DOT text of the layered digraph whose s-t paths correspond one-to-one to
/// selections: nodes v0=s .. vp=t, one solid arc per tool between consecutive
/// layers, labeled with the tool's per-scenario costs.
std::string export_layered_graph(const Instance& instance);

}  // namespace robsel

#endif  // ROBSEL_GENERATORS_HPP
