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

#include "robsel/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace robsel {
namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    result *= base;
  }
  return result;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}

/// Scenario supports for one side of the bipartite graph: for each vertex,
/// each g-combination of distinct incident edges, and each pairwise
/// label-distinct tool tuple.
void enumerate_side(const std::vector<std::vector<int>>& incident_edges,
                    const std::vector<std::vector<int>>& edge_tools,
                    const std::vector<ToolLabel>& tools, int tuple_size, std::uint64_t cap,
                    std::uint64_t& enumerated, std::uint64_t& duplicates,
                    std::set<std::vector<int>>& seen, std::vector<std::vector<int>>& supports) {
  for (const auto& incident : incident_edges) {
    if (static_cast<int>(incident.size()) < tuple_size) continue;

    std::vector<int> combo(static_cast<std::size_t>(tuple_size));
    auto pick_edges = [&](auto&& self, int slot, int from) -> void {
      if (slot == tuple_size) {
        std::vector<int> tuple(static_cast<std::size_t>(tuple_size));
        auto pick_tools = [&](auto&& inner, int position) -> void {
          if (position == tuple_size) {
            ++enumerated;
            if (enumerated > cap)
              throw EnumerationCapError("label-cover reduction refused: more than " +
                                        std::to_string(cap) + " scenario tuples");
            std::vector<int> support = tuple;
            std::sort(support.begin(), support.end());
            if (seen.insert(support).second)
              supports.push_back(std::move(support));
            else
              ++duplicates;
            return;
          }
          for (int tool : edge_tools[static_cast<std::size_t>(combo[static_cast<std::size_t>(position)])]) {
            bool distinct = true;
            for (int q = 0; q < position && distinct; ++q)
              distinct = label_distinct(tools[static_cast<std::size_t>(tuple[static_cast<std::size_t>(q)])],
                                        tools[static_cast<std::size_t>(tool)]);
            if (!distinct) continue;
            tuple[static_cast<std::size_t>(position)] = tool;
            inner(inner, position + 1);
          }
        };
        pick_tools(pick_tools, 0);
        return;
      }
      for (int e = from; e < static_cast<int>(incident.size()); ++e) {
        combo[static_cast<std::size_t>(slot)] = incident[static_cast<std::size_t>(e)];
        self(self, slot + 1, e + 1);
      }
    };
    pick_edges(pick_edges, 0, 0);
  }
}

}  // namespace

Instance gen_gap(int p, std::uint64_t scenario_cap) {
  if (p < 2) throw std::invalid_argument("gap family needs p >= 2");
  const std::uint64_t scenarios = saturating_pow(static_cast<std::uint64_t>(p), p);
  if (scenarios > scenario_cap)
    throw EnumerationCapError("gap family refused: p^p = " + std::to_string(scenarios) +
                              " scenarios exceed cap " + std::to_string(scenario_cap));

  Instance instance;
  instance.groups.resize(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i)
    for (int e = 0; e < p; ++e) instance.groups[static_cast<std::size_t>(i)].push_back(i * p + e);

  instance.costs = CostMatrix::Zero(static_cast<Eigen::Index>(scenarios), p * p);
  std::vector<int> tuple(static_cast<std::size_t>(p), 0);
  for (std::uint64_t k = 0; k < scenarios; ++k) {
    for (int i = 0; i < p; ++i)
      instance.costs(static_cast<Eigen::Index>(k), i * p + tuple[static_cast<std::size_t>(i)]) = 1;
    for (int i = p - 1; i >= 0; --i) {
      if (++tuple[static_cast<std::size_t>(i)] < p) break;
      tuple[static_cast<std::size_t>(i)] = 0;
    }
  }
  return instance;
}

std::vector<std::string> validate(const LabelCoverInstance& lc) {
  std::vector<std::string> violations;
  if (lc.v_count < 1 || lc.w_count < 1) violations.push_back("both vertex sides must be nonempty");
  if (lc.label_count < 1) violations.push_back("label count must be >= 1");

  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < lc.edges.size(); ++e) {
    const auto& edge = lc.edges[e];
    if (edge.v < 0 || edge.v >= lc.v_count || edge.w < 0 || edge.w >= lc.w_count)
      violations.push_back("edge " + std::to_string(e) + " has an endpoint out of range");
    if (!seen.insert({edge.v, edge.w}).second)
      violations.push_back("duplicate edge (" + std::to_string(edge.v) + ", " +
                           std::to_string(edge.w) + ")");
    for (const auto& [from, to] : edge.sigma) {
      if (from < 0 || from >= lc.label_count || to < 0 || to >= lc.label_count)
        violations.push_back("edge " + std::to_string(e) + " maps labels out of range");
    }
  }
  return violations;
}

bool label_distinct(const ToolLabel& a, const ToolLabel& b) {
  if (a.v_label == b.v_label && a.v == b.v) return false;
  if (a.w_label == b.w_label && a.w == b.w) return false;
  return true;
}

ReductionResult reduce_labelcover(const LabelCoverInstance& lc, const ReductionConfig& config) {
  if (config.gap_target < 1) throw std::invalid_argument("gap target must be >= 1");
  const auto violations = validate(lc);
  if (!violations.empty())
    throw std::invalid_argument("invalid label-cover instance: " + violations.front());

  std::vector<LabelCoverInstance::Edge> edges = lc.edges;
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.v, a.w) < std::pair(b.v, b.w);
  });

  ReductionResult result;
  std::vector<std::vector<int>> edge_tools(edges.size());
  std::vector<std::vector<int>> groups(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].sigma.empty())
      throw std::invalid_argument("edge (" + std::to_string(edges[e].v) + ", " +
                                  std::to_string(edges[e].w) +
                                  ") has an empty label map: empty group");
    for (const auto& [from, to] : edges[e].sigma) {
      const int tool = static_cast<int>(result.tools.size());
      result.tools.push_back({static_cast<int>(e), edges[e].v, edges[e].w, from, to});
      edge_tools[e].push_back(tool);
      groups[e].push_back(tool);
    }
  }
  const int tool_count = static_cast<int>(result.tools.size());

  std::vector<std::vector<int>> incident_v(static_cast<std::size_t>(lc.v_count));
  std::vector<std::vector<int>> incident_w(static_cast<std::size_t>(lc.w_count));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident_v[static_cast<std::size_t>(edges[e].v)].push_back(static_cast<int>(e));
    incident_w[static_cast<std::size_t>(edges[e].w)].push_back(static_cast<int>(e));
  }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> supports;
  enumerate_side(incident_v, edge_tools, result.tools, config.gap_target, config.scenario_cap,
                 result.enumerated, result.duplicates, seen, supports);
  enumerate_side(incident_w, edge_tools, result.tools, config.gap_target, config.scenario_cap,
                 result.enumerated, result.duplicates, seen, supports);

  const int scenarios = static_cast<int>(supports.size()) + 1;  // + all-zero scenario
  result.instance.groups = std::move(groups);
  result.instance.costs = CostMatrix::Zero(scenarios, tool_count);
  for (std::size_t k = 0; k < supports.size(); ++k)
    for (int tool : supports[k]) result.instance.costs(static_cast<Eigen::Index>(k), tool) = 1;

  const int g = config.gap_target;
  const std::uint64_t per_tuple = saturating_pow(static_cast<std::uint64_t>(lc.label_count), g);
  result.scenario_bound = saturating_add(
      saturating_add(
          saturating_mul(static_cast<std::uint64_t>(lc.v_count),
                         saturating_mul(saturating_pow(static_cast<std::uint64_t>(lc.w_count), g),
                                        per_tuple)),
          saturating_mul(static_cast<std::uint64_t>(lc.w_count),
                         saturating_mul(saturating_pow(static_cast<std::uint64_t>(lc.v_count), g),
                                        per_tuple))),
      1);
  return result;
}

Labeling extract_labeling(const ReductionResult& reduction, const Selection& selection) {
  Labeling labeling;
  int max_v = 0;
  int max_w = 0;
  for (const auto& tool : reduction.tools) {
    max_v = std::max(max_v, tool.v + 1);
    max_w = std::max(max_w, tool.w + 1);
  }
  labeling.v_labels.resize(static_cast<std::size_t>(max_v));
  labeling.w_labels.resize(static_cast<std::size_t>(max_w));
  for (int j : selection.chosen) {
    const ToolLabel& tool = reduction.tools[static_cast<std::size_t>(j)];
    labeling.v_labels[static_cast<std::size_t>(tool.v)].insert(tool.v_label);
    labeling.w_labels[static_cast<std::size_t>(tool.w)].insert(tool.w_label);
  }
  return labeling;
}

bool labeling_satisfies_all(const LabelCoverInstance& lc, const Labeling& labeling) {
  for (const auto& edge : lc.edges) {
    if (edge.v >= static_cast<int>(labeling.v_labels.size()) ||
        edge.w >= static_cast<int>(labeling.w_labels.size()))
      return false;
    bool satisfied = false;
    for (int a : labeling.v_labels[static_cast<std::size_t>(edge.v)]) {
      const auto found = edge.sigma.find(a);
      if (found != edge.sigma.end() &&
          labeling.w_labels[static_cast<std::size_t>(edge.w)].count(found->second) > 0) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

int labeling_value(const Labeling& labeling) {
  std::size_t value = 0;
  for (const auto& labels : labeling.v_labels) value = std::max(value, labels.size());
  for (const auto& labels : labeling.w_labels) value = std::max(value, labels.size());
  return static_cast<int>(value);
}

std::optional<int> label_cover_value(const LabelCoverInstance& lc, int max_vertices,
                                     int max_labels) {
  if (lc.v_count + lc.w_count > max_vertices || lc.label_count > max_labels)
    throw std::invalid_argument("label-cover value: instance above the exhaustive-search cap");

  const int vertices = lc.v_count + lc.w_count;
  const int masks = 1 << lc.label_count;
  std::vector<int> assignment(static_cast<std::size_t>(vertices), 0);

  const auto popcount_ok = [&](int mask, int budget) {
    int bits = 0;
    for (int b = mask; b != 0; b >>= 1) bits += b & 1;
    return bits <= budget;
  };

  const auto satisfied = [&]() {
    for (const auto& edge : lc.edges) {
      const int v_mask = assignment[static_cast<std::size_t>(edge.v)];
      const int w_mask = assignment[static_cast<std::size_t>(lc.v_count + edge.w)];
      bool ok = false;
      for (const auto& [from, to] : edge.sigma) {
        if ((v_mask >> from & 1) != 0 && (w_mask >> to & 1) != 0) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };

  for (int budget = 1; budget <= lc.label_count; ++budget) {
    auto search = [&](auto&& self, int vertex) -> bool {
      if (vertex == vertices) return satisfied();
      for (int mask = 0; mask < masks; ++mask) {
        if (!popcount_ok(mask, budget)) continue;
        assignment[static_cast<std::size_t>(vertex)] = mask;
        if (self(self, vertex + 1)) return true;
      }
      return false;
    };
    if (search(search, 0)) return budget;
  }
  return std::nullopt;
}

Instance augment_regret(const Instance& instance, Cost large_cost) {
  const int n = instance.tool_count();
  const int p = instance.group_count();
  const int scenarios = instance.scenario_count();

  Instance augmented;
  augmented.groups = instance.groups;
  for (int i = 0; i < p; ++i) augmented.groups[static_cast<std::size_t>(i)].push_back(n + i);

  augmented.costs = CostMatrix::Zero(scenarios + 1, n + p);
  augmented.costs.topLeftCorner(scenarios, n) = instance.costs;
  for (int i = 0; i < p; ++i) augmented.costs(scenarios, n + i) = large_cost;

  if (!instance.names.empty()) {
    augmented.names = instance.names;
    for (int i = 0; i < p; ++i) augmented.names.push_back("dummy" + std::to_string(i));
  }
  return augmented;
}

Instance augment_regret(const Instance& instance) {
  const Selection baseline = aggregate_approx(instance, AggregationMode::MaxAggregate);
  return augment_regret(instance, evaluate(instance, baseline).max_cost + 1);
}

Instance gen_random(int p, int r, int scenarios, Cost cost_max, std::uint64_t seed) {
  if (p < 1 || r < 1 || scenarios < 1 || cost_max < 0)
    throw std::invalid_argument("gen_random needs positive p, r, K and cost_max >= 0");

  std::mt19937_64 rng(seed);
  Instance instance;
  instance.groups.resize(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i)
    for (int e = 0; e < r; ++e) instance.groups[static_cast<std::size_t>(i)].push_back(i * r + e);

  instance.costs.resize(scenarios, p * r);
  for (int k = 0; k < scenarios; ++k)
    for (int j = 0; j < p * r; ++j)
      instance.costs(k, j) =
          cost_max == 0
              ? 0
              : static_cast<Cost>(bounded_draw(rng, static_cast<std::uint64_t>(cost_max) + 1));
  return instance;
}

Instance pad_zero_scenarios(const Instance& instance, int extra_scenarios) {
  if (extra_scenarios < 0) throw std::invalid_argument("extra scenario count must be >= 0");
  Instance padded = instance;
  padded.costs = CostMatrix::Zero(instance.scenario_count() + extra_scenarios,
                                  instance.tool_count());
  padded.costs.topRows(instance.scenario_count()) = instance.costs;
  return padded;
}

std::string export_layered_graph(const Instance& instance) {
  std::ostringstream out;
  out << "digraph layered_selection {\n";
  out << "  rankdir=LR;\n";
  out << "  v0 [label=\"s\"];\n";
  for (int i = 1; i < instance.group_count(); ++i) out << "  v" << i << ";\n";
  out << "  v" << instance.group_count() << " [label=\"t\"];\n";
  for (int i = 0; i < instance.group_count(); ++i) {
    std::vector<int> members = instance.groups[static_cast<std::size_t>(i)];
    std::sort(members.begin(), members.end());
    for (int j : members) {
      out << "  v" << i << " -> v" << i + 1 << " [style=solid, label=\"";
      if (!instance.names.empty())
        out << instance.names[static_cast<std::size_t>(j)];
      else
        out << j;
      out << ": ";
      for (int k = 0; k < instance.scenario_count(); ++k) {
        if (k > 0) out << ",";
        out << instance.costs(k, j);
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace robsel
