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

#ifndef ROBSEL_BENCH_HPP
#define ROBSEL_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robsel/instance.hpp"

namespace robsel {

/// One instance of the benchmark corpus, identified by its generator and
/// parameters (family "gap" uses p only; "random" uses all of them).
struct BenchEntry {
  std::string family;
  int p = 0;
  int r = 0;
  int scenarios = 0;
  Cost cost_max = 0;
  std::uint64_t seed = 0;
};

struct BenchSpec {
  std::vector<BenchEntry> entries;
  std::vector<std::string> algorithms;  ///< brute|dp|maxagg|midpoint|rmax|rand|pessimistic
  Objective objective = Objective::MinMax;
  std::uint64_t oracle_cap = 0;      ///< 0: default / environment override
  std::uint64_t rounding_seed = 1;   ///< base seed for the "rand" algorithm
  int pad_scenarios = 0;             ///< extra all-zero scenarios per instance
  bool timings = false;              ///< record wall time (breaks CSV determinism)
};

struct BenchRecord {
  std::string instance_id;
  std::string family;
  int p = 0;
  int r = 0;
  int scenarios = 0;
  Cost cost_max = 0;
  std::uint64_t gen_seed = 0;
  std::string algorithm;
  std::string objective;
  std::optional<Cost> value;
  std::optional<Cost> oracle;            ///< exact optimum, when it ran
  std::optional<double> ratio_opt;       ///< value / oracle, oracle > 0
  std::optional<double> ratio_lstar;     ///< value / l_star, l_star > 0
  std::optional<double> l_star;
  std::optional<std::uint64_t> algo_seed;
  double wall_ms = 0.0;
  std::string error;  ///< per-run failure note; empty on success
};

/// Runs every (instance, algorithm) pair in corpus order. Per-run failures
/// (enumeration caps, refused solvers) are recorded and the run continues.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

/// CSV with a fixed column order, rows in record order. Identical spec and
/// seeds give byte-identical output; the optional wall-time column is the one
/// exception and stays off by default.
std::string bench_csv(const std::vector<BenchRecord>& records, bool timings = false);

/// Growth table for the gap family: p, K = p^p, log K = p log p, and the
/// observed ratio between the exact optimum and the relaxation bound L*.
std::string gap_ratio_table(const std::vector<BenchRecord>& records);

std::optional<Objective> parse_objective(const std::string& name);

/// Algorithms applicable to an objective; the relaxation roundings certify
/// the min-max objective only.
bool algorithm_supports(const std::string& algorithm, Objective objective);

}  // namespace robsel

#endif  // ROBSEL_BENCH_HPP
