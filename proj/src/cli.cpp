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

#include "robsel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "robsel/bench.hpp"
#include "robsel/exact.hpp"
#include "robsel/generators.hpp"
#include "robsel/instance.hpp"
#include "robsel/io.hpp"
#include "robsel/relax.hpp"
#include "robsel/rounding.hpp"

namespace robsel {
namespace {

using Json = nlohmann::ordered_json;

struct CliError : std::runtime_error {
  int exit_code;
  CliError(int code, const std::string& message) : std::runtime_error(message), exit_code(code) {}
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw CliError(kExitRefused, "cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

Instance load_instance(const std::string& path, std::istream& in) {
  const ParsedInstance parsed = parse_instance(slurp(path, in));
  if (!parsed.instance) {
    std::string message = "invalid instance";
    for (const auto& error : parsed.errors) message += "\n  " + error;
    throw CliError(kExitRefused, message);
  }
  return *parsed.instance;
}

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw CliError(kExitRefused, "cannot write " + out_path);
  file << text;
}

Json selection_json(const Selection& selection) { return Json(selection.chosen); }

Objective objective_from_flag(const std::string& name) {
  const auto parsed = parse_objective(name);
  if (!parsed) throw CliError(kExitUsage, "unknown objective: " + name);
  return *parsed;
}

void command_validate(const std::string& path, std::istream& in, std::ostream& out) {
  const ParsedInstance parsed = parse_instance(slurp(path, in));
  Json result;
  result["ok"] = parsed.errors.empty();
  if (!parsed.errors.empty()) result["violations"] = parsed.errors;
  out << result.dump(2) << "\n";
  if (!parsed.errors.empty()) throw CliError(kExitRefused, "instance invalid");
}

void command_solve(const std::string& path, const std::string& algorithm,
                   const std::string& objective_flag, std::uint64_t seed, std::istream& in,
                   std::ostream& out) {
  const Objective objective = objective_from_flag(objective_flag);
  if (!algorithm_supports(algorithm, objective))
    throw CliError(kExitUsage,
                   "algorithm " + algorithm + " certifies the minmax objective only");
  const Instance instance = load_instance(path, in);

  Json result;
  result["algo"] = algorithm;
  result["objective"] = objective_name(objective);
  try {
    if (algorithm == "brute" || algorithm == "dp") {
      const ExactResult exact = algorithm == "brute" ? brute_force(instance, objective)
                                                     : dp_small_k(instance, objective);
      result["value"] = exact.optimum;
      result["selection"] = selection_json(exact.argmin);
      result["explored"] = exact.explored;
    } else if (algorithm == "maxagg" || algorithm == "midpoint") {
      const Selection selection = aggregate_approx(
          instance,
          algorithm == "maxagg" ? AggregationMode::MaxAggregate : AggregationMode::Midpoint);
      result["value"] = objective_value(evaluate(instance, selection), objective);
      result["selection"] = selection_json(selection);
    } else if (algorithm == "rmax" || algorithm == "rand" || algorithm == "pessimistic") {
      const LpResult lp = solve_lstar(instance);
      result["l_star"] = lp.l_star;
      if (algorithm == "rmax") {
        const Selection selection = round_rmax(instance, lp);
        result["value"] = evaluate(instance, selection).max_cost;
        result["selection"] = selection_json(selection);
      } else if (algorithm == "rand") {
        const RoundingReport report = round_randomized(instance, lp, seed);
        result["value"] = report.max_cost;
        result["selection"] = selection_json(report.selection);
        result["seed"] = report.seed;
      } else {
        const RoundingReport report = round_pessimistic(instance, lp);
        result["value"] = report.max_cost;
        result["selection"] = selection_json(report.selection);
        result["zero_threshold"] = report.zero_threshold;
        if (!report.zero_threshold) {
          result["lambda"] = report.lambda;
          result["log_phi0"] = report.log_phi0;
          result["final_log_phi"] =
              report.log_phi_trace.empty() ? 0.0 : report.log_phi_trace.back();
          result["estimator_rows"] = report.thresholds.size();
        }
      }
    } else {
      throw CliError(kExitUsage, "unknown algorithm: " + algorithm);
    }
  } catch (const EnumerationCapError& error) {
    throw CliError(kExitRefused, error.what());
  } catch (const std::invalid_argument& error) {
    throw CliError(kExitRefused, error.what());
  }
  out << result.dump(2) << "\n";
}

void command_lstar(const std::string& path, std::istream& in, std::ostream& out) {
  const Instance instance = load_instance(path, in);
  const LpResult lp = solve_lstar(instance);
  Json result;
  result["l_star"] = lp.l_star;
  result["chosen_breakpoint"] = lp.chosen_breakpoint;
  result["breakpoints"] = lp.breakpoints;
  result["x"] = std::vector<double>(lp.solution.x.data(),
                                    lp.solution.x.data() + lp.solution.x.size());
  result["filter"] = lp.solution.filter;
  out << result.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"robust representatives selection toolkit"};
  app.require_subcommand(1);

  std::string instance_path = "-";
  std::string out_path;
  std::string algorithm;
  std::string objective_flag = "minmax";
  std::uint64_t seed = 1;

  auto* validate_cmd = app.add_subcommand("validate", "check an instance file");
  validate_cmd->add_option("instance", instance_path, "instance file, or - for stdin");

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  solve_cmd->add_option("--algo", algorithm, "brute|dp|maxagg|midpoint|rmax|rand|pessimistic")
      ->required()
      ->check(CLI::IsMember({"brute", "dp", "maxagg", "midpoint", "rmax", "rand", "pessimistic"}));
  solve_cmd->add_option("--objective", objective_flag, "minmax|regret")
      ->check(CLI::IsMember({"minmax", "regret"}));
  solve_cmd->add_option("--seed", seed, "seed for the randomized rounding");
  solve_cmd->add_option("instance", instance_path, "instance file, or - for stdin");

  auto* lstar_cmd = app.add_subcommand("lstar", "relaxation bound L* and its certificate");
  lstar_cmd->add_option("instance", instance_path, "instance file, or - for stdin");

  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);

  int gap_p = 2;
  auto* gen_gap_cmd = gen_cmd->add_subcommand("gap", "integrality-gap family");
  gen_gap_cmd->add_option("p", gap_p, "group count (and group size)")->required();
  gen_gap_cmd->add_option("--out", out_path, "output file (default stdout)");

  int rnd_p = 4, rnd_r = 3, rnd_k = 3;
  Cost rnd_cost_max = 20;
  std::uint64_t rnd_seed = 1;
  auto* gen_rnd_cmd = gen_cmd->add_subcommand("random", "uniform random instance");
  gen_rnd_cmd->add_option("--p", rnd_p, "group count")->required();
  gen_rnd_cmd->add_option("--r", rnd_r, "tools per group")->required();
  gen_rnd_cmd->add_option("--K", rnd_k, "scenario count")->required();
  gen_rnd_cmd->add_option("--cost-max", rnd_cost_max, "cost upper bound");
  gen_rnd_cmd->add_option("--seed", rnd_seed, "generator seed");
  gen_rnd_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::string lc_path = "-";
  int lc_gap = 1;
  std::uint64_t lc_cap = 100000;
  auto* gen_lc_cmd = gen_cmd->add_subcommand("labelcover", "hardness reduction instance");
  gen_lc_cmd->add_option("labelcover", lc_path, "label-cover file, or - for stdin");
  gen_lc_cmd->add_option("--g", lc_gap, "unit tools per scenario (gap target)")->required();
  gen_lc_cmd->add_option("--cap", lc_cap, "scenario enumeration cap");
  gen_lc_cmd->add_option("--out", out_path, "output file (default stdout)");

  Cost g_plus = -1;
  auto* gen_aug_cmd = gen_cmd->add_subcommand("augment-regret", "regret gadget");
  gen_aug_cmd->add_option("instance", instance_path, "instance file, or - for stdin");
  gen_aug_cmd->add_option("--g-plus", g_plus, "dummy-scenario cost (default: baseline bound + 1)");
  gen_aug_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* graph_cmd = app.add_subcommand("export-graph", "layered digraph in DOT format");
  graph_cmd->add_option("instance", instance_path, "instance file, or - for stdin");
  graph_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::string bench_family = "gap";
  int bench_pmin = 2, bench_pmax = 4;
  int bench_p = 4, bench_r = 3, bench_k = 3, bench_seeds = 10;
  Cost bench_cost_max = 20;
  std::uint64_t bench_seed_base = 1, bench_rounding_seed = 1;
  std::string bench_algos = "brute,maxagg,rmax,pessimistic";
  int bench_pad = 0;
  bool bench_timings = false;
  auto* bench_cmd = app.add_subcommand("bench", "approximation-ratio harness");
  bench_cmd->add_option("--family", bench_family, "gap|random")
      ->check(CLI::IsMember({"gap", "random"}));
  bench_cmd->add_option("--p-min", bench_pmin, "gap family: smallest p");
  bench_cmd->add_option("--p-max", bench_pmax, "gap family: largest p");
  bench_cmd->add_option("--p", bench_p, "random family: group count");
  bench_cmd->add_option("--r", bench_r, "random family: tools per group");
  bench_cmd->add_option("--K", bench_k, "random family: scenario count");
  bench_cmd->add_option("--cost-max", bench_cost_max, "random family: cost bound");
  bench_cmd->add_option("--seeds", bench_seeds, "random family: instance count");
  bench_cmd->add_option("--seed-base", bench_seed_base, "random family: first seed");
  bench_cmd->add_option("--algos", bench_algos, "comma-separated algorithm list");
  bench_cmd->add_option("--objective", objective_flag, "minmax|regret")
      ->check(CLI::IsMember({"minmax", "regret"}));
  bench_cmd->add_option("--rounding-seed", bench_rounding_seed, "seed base for rand rows");
  bench_cmd->add_option("--pad-scenarios", bench_pad, "append all-zero scenarios per instance");
  bench_cmd->add_flag("--timings", bench_timings, "append a wall-time column");
  bench_cmd->add_option("--out", out_path, "CSV file (default stdout)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << error.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      command_validate(instance_path, in, out);
    } else if (solve_cmd->parsed()) {
      command_solve(instance_path, algorithm, objective_flag, seed, in, out);
    } else if (lstar_cmd->parsed()) {
      command_lstar(instance_path, in, out);
    } else if (gen_cmd->parsed()) {
      try {
        if (gen_gap_cmd->parsed()) {
          emit_text(write_instance(gen_gap(gap_p)), out_path, out);
        } else if (gen_rnd_cmd->parsed()) {
          emit_text(write_instance(gen_random(rnd_p, rnd_r, rnd_k, rnd_cost_max, rnd_seed)),
                    out_path, out);
        } else if (gen_lc_cmd->parsed()) {
          const ParsedLabelCover parsed = parse_label_cover(slurp(lc_path, in));
          if (!parsed.label_cover) {
            std::string message = "invalid label-cover instance";
            for (const auto& error : parsed.errors) message += "\n  " + error;
            throw CliError(kExitRefused, message);
          }
          const ReductionResult reduction =
              reduce_labelcover(*parsed.label_cover, ReductionConfig{lc_gap, lc_cap});
          emit_text(write_instance(reduction.instance), out_path, out);
          err << "scenarios=" << reduction.instance.scenario_count()
              << " enumerated=" << reduction.enumerated
              << " duplicates=" << reduction.duplicates << " bound=" << reduction.scenario_bound
              << "\n";
        } else if (gen_aug_cmd->parsed()) {
          const Instance instance = load_instance(instance_path, in);
          const Instance augmented =
              g_plus >= 0 ? augment_regret(instance, g_plus) : augment_regret(instance);
          emit_text(write_instance(augmented), out_path, out);
        }
      } catch (const EnumerationCapError& error) {
        throw CliError(kExitRefused, error.what());
      } catch (const std::invalid_argument& error) {
        throw CliError(kExitRefused, error.what());
      }
    } else if (graph_cmd->parsed()) {
      emit_text(export_layered_graph(load_instance(instance_path, in)), out_path, out);
    } else if (bench_cmd->parsed()) {
      BenchSpec spec;
      spec.objective = objective_from_flag(objective_flag);
      spec.rounding_seed = bench_rounding_seed;
      spec.pad_scenarios = bench_pad;
      spec.timings = bench_timings;
      std::stringstream algos(bench_algos);
      std::string algo;
      while (std::getline(algos, algo, ','))
        if (!algo.empty()) spec.algorithms.push_back(algo);
      if (bench_family == "gap") {
        for (int p = bench_pmin; p <= bench_pmax; ++p)
          spec.entries.push_back({"gap", p, p, 0, 1, 0});
      } else {
        for (int s = 0; s < bench_seeds; ++s)
          spec.entries.push_back({"random", bench_p, bench_r, bench_k, bench_cost_max,
                                  bench_seed_base + static_cast<std::uint64_t>(s)});
      }
      std::vector<BenchRecord> records;
      try {
        records = run_bench(spec);
      } catch (const std::invalid_argument& error) {
        throw CliError(kExitUsage, error.what());
      }
      emit_text(bench_csv(records, bench_timings), out_path, out);
      if (bench_family == "gap") {
        // The growth table goes wherever the CSV does not.
        (out_path.empty() ? err : out) << gap_ratio_table(records);
      }
    }
  } catch (const CliError& error) {
    err << error.what() << "\n";
    return error.exit_code;
  } catch (const std::exception& error) {
    err << error.what() << "\n";
    return kExitRefused;
  }
  return kExitOk;
}

}  // namespace robsel
