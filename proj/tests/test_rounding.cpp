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

#include "robsel/rounding.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "robsel/generators.hpp"
#include "robsel/relax.hpp"

using namespace robsel;
using testing::build;
using testing::ref_a;

namespace {

void check_estimator_contract(const RoundingReport& report) {
  if (report.zero_threshold) return;
  CHECK(report.log_phi0 < 0.0);
  double previous = report.log_phi0;
  for (double entry : report.log_phi_trace) {
    CHECK(entry <= previous + 1e-9 * std::abs(previous) + 1e-12);
    previous = entry;
  }
  if (!report.log_phi_trace.empty()) CHECK(report.log_phi_trace.back() < 0.0);
  for (Eigen::Index k = 0; k < report.thresholds.size(); ++k)
    CHECK(static_cast<double>(report.estimator_loads(k)) <= report.thresholds(k));
}

/// Dyadic example: scaled entries are exactly {0, 1/2, 1}, so the bit planes
/// reproduce the scaled matrix without truncation error.
Instance dyadic_instance() { return build({{0, 1}}, {{2, 1}, {0, 2}}); }

}  // namespace

TEST_CASE("rmax rounding keeps integral certificates") {
  const Instance instance = ref_a();
  const LpResult lp = solve_lstar(instance);
  const Selection selection = round_rmax(instance, lp);
  CHECK(selection.chosen == std::vector<int>{0, 2});
  CHECK(evaluate(instance, selection).max_cost == 3);
}

TEST_CASE("rmax rounding meets its bound on the gap family") {
  const Instance instance = gen_gap(2);
  const LpResult lp = solve_lstar(instance);
  const Selection selection = round_rmax(instance, lp);
  const Cost value = evaluate(instance, selection).max_cost;
  CHECK(value == 2);  // every selection costs p
  CHECK(static_cast<double>(value) <=
        instance.max_group_size() * lp.l_star + 1e-6);
}

TEST_CASE("rmax rounding satisfies the guarantee across a random corpus") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance instance =
        gen_random(1 + static_cast<int>(seed % 6), 1 + static_cast<int>(seed % 4),
                   1 + static_cast<int>(seed % 7), 20, seed);
    const LpResult lp = solve_lstar(instance);
    const Cost value = evaluate(instance, round_rmax(instance, lp)).max_cost;
    CHECK(static_cast<double>(value) <= instance.max_group_size() * lp.l_star + 1e-6);
  }
}

TEST_CASE("randomized rounding is deterministic per seed and degenerate on integral x") {
  const Instance instance = ref_a();
  const LpResult lp = solve_lstar(instance);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RoundingReport report = round_randomized(instance, lp, seed);
    CHECK(report.selection.chosen == std::vector<int>{0, 2});
    CHECK(report.max_cost == 3);
    CHECK(report.seed == seed);
  }

  const Instance gap = gen_gap(2);
  const LpResult gap_lp = solve_lstar(gap);
  const RoundingReport first = round_randomized(gap, gap_lp, 42);
  const RoundingReport second = round_randomized(gap, gap_lp, 42);
  CHECK(first.selection.chosen == second.selection.chosen);
}

TEST_CASE("randomized rounding is unbiased on the gap family") {
  const Instance instance = gen_gap(2);
  const LpResult lp = solve_lstar(instance);
  const int trials = 4000;
  const int scenarios = instance.scenario_count();

  Eigen::VectorXd sum = Eigen::VectorXd::Zero(scenarios);
  Eigen::VectorXd sum_squares = Eigen::VectorXd::Zero(scenarios);
  for (int trial = 0; trial < trials; ++trial) {
    const RoundingReport report =
        round_randomized(instance, lp, static_cast<std::uint64_t>(trial) + 1);
    sum += report.scaled_loads;
    sum_squares += report.scaled_loads.cwiseProduct(report.scaled_loads);
  }

  const Eigen::VectorXd mu = instance.costs.cast<double>() * lp.solution.x / lp.l_star;
  for (int k = 0; k < scenarios; ++k) {
    const double mean = sum(k) / trials;
    const double variance = sum_squares(k) / trials - mean * mean;
    const double stderr_mean = std::sqrt(std::max(variance, 0.0) / trials);
    CHECK(std::abs(mean - mu(k)) <= 3.0 * stderr_mean + 1e-9);
  }
}

TEST_CASE("build_scaled filters and divides by L*") {
  const Instance instance = ref_a();
  const LpResult lp = solve_lstar(instance);
  const ScaledMatrix scaled = build_scaled(instance, lp, false);

  CHECK(scaled.kept_tools == std::vector<int>{0, 1, 2});
  REQUIRE(scaled.matrix.rows() == 2);
  REQUIRE(scaled.matrix.cols() == 3);
  CHECK(scaled.matrix(0, 0) == doctest::Approx(1.0 / 3.0));
  CHECK(scaled.matrix(0, 1) == doctest::Approx(1.0));
  CHECK(scaled.matrix(0, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(scaled.matrix(1, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(scaled.matrix(1, 1) == doctest::Approx(0.0));
  CHECK(scaled.matrix(1, 2) == doctest::Approx(1.0 / 3.0));
  CHECK((scaled.matrix.array() >= 0.0).all());
  CHECK((scaled.matrix.array() <= 1.0).all());
}

TEST_CASE("build_scaled signals zero-threshold instances") {
  const Instance zeros = build({{0, 1}, {2}}, {{0, 0, 0}});
  const LpResult lp = solve_lstar(zeros);
  CHECK_THROWS_AS(build_scaled(zeros, lp, false), ZeroThresholdError);
}

TEST_CASE("bit planes reproduce dyadic matrices exactly") {
  const Instance instance = dyadic_instance();
  const LpResult lp = solve_lstar(instance);
  CHECK(lp.l_star == doctest::Approx(2.0));
  const ScaledMatrix scaled = build_scaled(instance, lp, true);
  REQUIRE(scaled.bit_count == 1);
  REQUIRE(scaled.planes.size() == 2);
  CHECK((scaled.tilde() - scaled.matrix).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("bit-plane truncation stays below the grid step") {
  for (std::uint64_t seed : {4u, 12u, 31u}) {
    const Instance instance = gen_random(3, 3, 4, 17, seed);
    const LpResult lp = solve_lstar(instance);
    if (lp.l_star < 1e-9) continue;
    const ScaledMatrix scaled = build_scaled(instance, lp, true);
    const double step = std::ldexp(1.0, -scaled.bit_count);
    const int columns = static_cast<int>(scaled.kept_tools.size());
    CHECK(step <= 1.0 / columns + 1e-15);
    const Eigen::MatrixXd error = (scaled.tilde() - scaled.matrix).cwiseAbs();
    CHECK(error.maxCoeff() < step);
  }
}

TEST_CASE("binary pessimistic rounding fixes integral solutions") {
  Eigen::MatrixXi binary(3, 4);
  binary << 1, 0, 1, 0,
            0, 1, 0, 1,
            1, 1, 0, 0;
  const std::vector<std::vector<int>> groups{{0, 1}, {2, 3}};
  Eigen::VectorXd x(4);
  x << 1, 0, 0, 1;

  const RoundingReport report = round_pessimistic_binary(binary, groups, x);
  CHECK(report.selection.chosen == std::vector<int>{0, 3});
  check_estimator_contract(report);
  for (Eigen::Index k = 0; k < report.mu.size(); ++k)
    CHECK(static_cast<double>(report.estimator_loads(k)) == doctest::Approx(report.mu(k)));
  // No randomness left: the trace stays at the initial estimator value.
  for (double entry : report.log_phi_trace)
    CHECK(entry == doctest::Approx(report.log_phi0).epsilon(1e-9));
}

TEST_CASE("binary pessimistic rounding on the uniform gap system") {
  const Instance gap = gen_gap(3);
  const Eigen::MatrixXi binary = gap.costs.cast<int>();
  Eigen::VectorXd x = Eigen::VectorXd::Constant(9, 1.0 / 3.0);

  const RoundingReport report = round_pessimistic_binary(binary, gap.groups, x);
  check_estimator_contract(report);
  for (int k = 0; k < 27; ++k) {
    CHECK(report.mu(k) == doctest::Approx(1.0));
    CHECK(static_cast<double>(report.estimator_loads(k)) <= report.thresholds(k));
  }
}

TEST_CASE("a single all-ones row loads every selection identically") {
  Eigen::MatrixXi binary = Eigen::MatrixXi::Ones(1, 4);
  const std::vector<std::vector<int>> groups{{0, 1}, {2, 3}};
  Eigen::VectorXd x = Eigen::VectorXd::Constant(4, 0.5);

  const RoundingReport report = round_pessimistic_binary(binary, groups, x);
  CHECK(report.mu(0) == doctest::Approx(2.0));
  CHECK(report.estimator_loads(0) == 2);
  CHECK(static_cast<double>(report.estimator_loads(0)) <= report.thresholds(0));
}

TEST_CASE("pessimistic wrapper coincides with the others on integral certificates") {
  const Instance instance = ref_a();
  const LpResult lp = solve_lstar(instance);
  const RoundingReport report = round_pessimistic(instance, lp);
  CHECK(report.selection.chosen == std::vector<int>{0, 2});
  CHECK(report.max_cost == 3);
  check_estimator_contract(report);

  const RoundingReport again = round_pessimistic(instance, lp);
  CHECK(again.selection.chosen == report.selection.chosen);
}

TEST_CASE("pessimistic wrapper on the gap family recombines its plane bounds") {
  const Instance instance = gen_gap(4);
  const LpResult lp = solve_lstar(instance);
  const RoundingReport report = round_pessimistic(instance, lp);
  CHECK(report.max_cost == 4);
  check_estimator_contract(report);
  REQUIRE(report.recombined_bound.size() == instance.scenario_count());
  for (int k = 0; k < instance.scenario_count(); ++k)
    CHECK(report.recombined_bound(k) >= report.tilde_deviation(k) - 1e-9);
}

TEST_CASE("dyadic instances have no truncation slack in the wrapper") {
  const Instance instance = dyadic_instance();
  const LpResult lp = solve_lstar(instance);
  const ScaledMatrix scaled = build_scaled(instance, lp, true);
  const RoundingReport report = round_pessimistic(instance, lp);
  check_estimator_contract(report);

  Eigen::VectorXd z = Eigen::VectorXd::Zero(scaled.matrix.cols());
  for (std::size_t i = 0; i < report.selection.chosen.size(); ++i) {
    for (int c = 0; c < static_cast<int>(scaled.kept_tools.size()); ++c)
      if (scaled.kept_tools[static_cast<std::size_t>(c)] == report.selection.chosen[i]) z(c) = 1.0;
  }
  const Eigen::VectorXd direct = (scaled.matrix * (z - scaled.x)).cwiseAbs();
  for (int k = 0; k < instance.scenario_count(); ++k)
    CHECK(report.tilde_deviation(k) == doctest::Approx(direct(k)).epsilon(1e-12));
}

TEST_CASE("zero-threshold instances take the direct zero-cost selection") {
  const Instance zeros = build({{1, 0}, {2, 3}}, {{0, 0, 0, 5}, {0, 0, 0, 0}});
  const LpResult lp = solve_lstar(zeros);
  CHECK(lp.l_star == doctest::Approx(0.0));

  const RoundingReport report = round_pessimistic(zeros, lp);
  CHECK(report.zero_threshold);
  CHECK(report.selection.chosen == std::vector<int>{0, 2});
  CHECK(report.max_cost == 0);

  const RoundingReport sampled = round_randomized(zeros, lp, 5);
  CHECK(sampled.max_cost == 0);
}

TEST_CASE("estimator contract holds across a random corpus") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Instance instance =
        gen_random(1 + static_cast<int>(seed % 6), 1 + static_cast<int>(seed % 4),
                   1 + static_cast<int>(seed % 7), 20, seed);
    const LpResult lp = solve_lstar(instance);
    const RoundingReport report = round_pessimistic(instance, lp);
    check_estimator_contract(report);
    CHECK(is_valid_selection(instance, report.selection));
    for (int k = 0; k < instance.scenario_count(); ++k)
      CHECK(report.recombined_bound(k) >= report.tilde_deviation(k) - 1e-9);
  }
}
