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

#include "robsel/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "robsel/exact.hpp"
#include "robsel/generators.hpp"
#include "robsel/relax.hpp"
#include "robsel/rounding.hpp"

namespace robsel {
namespace {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

std::string csv_safe(std::string text) {
  for (char& c : text)
    if (c == ',' || c == '\n') c = ';';
  return text;
}

std::string entry_id(const BenchEntry& entry) {
  std::ostringstream id;
  id << entry.family << "-p" << entry.p;
  if (entry.family == "random")
    id << "-r" << entry.r << "-K" << entry.scenarios << "-c" << entry.cost_max << "-s"
       << entry.seed;
  return id.str();
}

Instance build_entry(const BenchEntry& entry) {
  if (entry.family == "gap") return gen_gap(entry.p);
  if (entry.family == "random")
    return gen_random(entry.p, entry.r, entry.scenarios, entry.cost_max, entry.seed);
  throw std::invalid_argument("unknown bench family: " + entry.family);
}

}  // namespace

std::optional<Objective> parse_objective(const std::string& name) {
  if (name == "minmax") return Objective::MinMax;
  if (name == "regret") return Objective::MinMaxRegret;
  return std::nullopt;
}

bool algorithm_supports(const std::string& algorithm, Objective objective) {
  const bool lp_rounding =
      algorithm == "rmax" || algorithm == "rand" || algorithm == "pessimistic";
  return !lp_rounding || objective == Objective::MinMax;
}

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  for (const auto& algorithm : spec.algorithms)
    if (!algorithm_supports(algorithm, spec.objective))
      throw std::invalid_argument("algorithm " + algorithm +
                                  " certifies the minmax objective only");

  std::vector<BenchRecord> records;
  for (std::size_t index = 0; index < spec.entries.size(); ++index) {
    const BenchEntry& entry = spec.entries[index];

    BenchRecord prototype;
    prototype.instance_id = entry_id(entry);
    prototype.family = entry.family;
    prototype.p = entry.p;
    prototype.r = entry.r;
    prototype.scenarios = entry.scenarios;
    prototype.cost_max = entry.cost_max;
    prototype.gen_seed = entry.seed;
    prototype.objective = objective_name(spec.objective);

    Instance instance;
    try {
      instance = build_entry(entry);
      if (spec.pad_scenarios > 0) instance = pad_zero_scenarios(instance, spec.pad_scenarios);
    } catch (const std::exception& error) {
      for (const auto& algorithm : spec.algorithms) {
        BenchRecord record = prototype;
        record.algorithm = algorithm;
        record.error = error.what();
        records.push_back(std::move(record));
      }
      continue;
    }

    std::optional<LpResult> lp;
    try {
      lp = solve_lstar(instance);
    } catch (const std::exception&) {
      lp.reset();
    }

    std::optional<Cost> oracle;
    try {
      oracle = brute_force(instance, spec.objective, spec.oracle_cap).optimum;
    } catch (const EnumerationCapError&) {
      oracle.reset();
    }

    for (const auto& algorithm : spec.algorithms) {
      BenchRecord record = prototype;
      record.algorithm = algorithm;
      record.oracle = oracle;
      if (lp) record.l_star = lp->l_star;

      const auto start = std::chrono::steady_clock::now();
      try {
        if (algorithm == "brute") {
          if (!oracle)
            throw EnumerationCapError("enumeration cap exceeded");
          record.value = oracle;
        } else if (algorithm == "dp") {
          record.value = dp_small_k(instance, spec.objective).optimum;
        } else if (algorithm == "maxagg" || algorithm == "midpoint") {
          const Selection selection = aggregate_approx(
              instance, algorithm == "maxagg" ? AggregationMode::MaxAggregate
                                              : AggregationMode::Midpoint);
          record.value = objective_value(evaluate(instance, selection), spec.objective);
        } else if (algorithm == "rmax") {
          if (!lp) throw std::runtime_error("relaxation unavailable");
          record.value = evaluate(instance, round_rmax(instance, *lp)).max_cost;
        } else if (algorithm == "rand") {
          if (!lp) throw std::runtime_error("relaxation unavailable");
          const std::uint64_t seed = spec.rounding_seed + index;
          record.algo_seed = seed;
          record.value = round_randomized(instance, *lp, seed).max_cost;
        } else if (algorithm == "pessimistic") {
          if (!lp) throw std::runtime_error("relaxation unavailable");
          record.value = round_pessimistic(instance, *lp).max_cost;
        } else {
          throw std::invalid_argument("unknown algorithm: " + algorithm);
        }
      } catch (const std::exception& error) {
        record.error = error.what();
      }
      if (spec.timings) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        record.wall_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
      }

      if (record.value && record.oracle && *record.oracle > 0)
        record.ratio_opt = static_cast<double>(*record.value) / static_cast<double>(*record.oracle);
      if (record.value && record.l_star && *record.l_star > 0)
        record.ratio_lstar = static_cast<double>(*record.value) / *record.l_star;
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records, bool timings) {
  std::ostringstream out;
  out << "instance,family,p,r,K,cost_max,gen_seed,algorithm,objective,value,oracle,"
         "ratio_opt,ratio_lstar,l_star,algo_seed,error";
  if (timings) out << ",wall_ms";
  out << "\n";
  for (const auto& record : records) {
    out << record.instance_id << ',' << record.family << ',' << record.p << ',' << record.r << ','
        << record.scenarios << ',' << record.cost_max << ',' << record.gen_seed << ','
        << record.algorithm << ',' << record.objective << ',';
    if (record.value) out << *record.value;
    out << ',';
    if (record.oracle) out << *record.oracle;
    out << ',';
    if (record.ratio_opt) out << format_double(*record.ratio_opt);
    out << ',';
    if (record.ratio_lstar) out << format_double(*record.ratio_lstar);
    out << ',';
    if (record.l_star) out << format_double(*record.l_star);
    out << ',';
    if (record.algo_seed) out << *record.algo_seed;
    out << ',';
    out << csv_safe(record.error);
    if (timings) out << ',' << format_double(record.wall_ms);
    out << "\n";
  }
  return out.str();
}

std::string gap_ratio_table(const std::vector<BenchRecord>& records) {
  // One row per gap-family p: the integrality ratio oracle / L*.
  std::map<int, std::pair<std::optional<Cost>, std::optional<double>>> rows;
  for (const auto& record : records) {
    if (record.family != "gap") continue;
    auto& row = rows[record.p];
    if (record.oracle) row.first = record.oracle;
    if (record.l_star) row.second = record.l_star;
  }

  std::ostringstream out;
  out << "p,K,log_K,opt,l_star,gap_ratio\n";
  for (const auto& [p, data] : rows) {
    const double log_k = p * std::log(static_cast<double>(p));
    out << p << ',' << static_cast<std::uint64_t>(std::llround(std::pow(p, p))) << ','
        << format_double(log_k) << ',';
    if (data.first) out << *data.first;
    out << ',';
    if (data.second) out << format_double(*data.second);
    out << ',';
    if (data.first && data.second && *data.second > 0)
      out << format_double(static_cast<double>(*data.first) / *data.second);
    out << "\n";
  }
  return out.str();
}

}  // namespace robsel
