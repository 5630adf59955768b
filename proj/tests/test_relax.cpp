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

#include "robsel/relax.hpp"

#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "robsel/generators.hpp"

using namespace robsel;
using testing::build;
using testing::ref_a;

TEST_CASE("filter_set keeps tools cheap under every scenario") {
  const Instance instance = ref_a();
  CHECK(filter_set(instance, 2) == std::vector<int>{0, 2});
  CHECK(filter_set(instance, 4) == std::vector<int>{0, 1, 2, 3});
  CHECK(filter_set(instance, -1).empty());
}

TEST_CASE("lp_feasible accepts 3 and rejects 2 on the reference instance") {
  const Instance instance = ref_a();

  const auto at3 = lp_feasible(instance, 3);
  REQUIRE(at3.has_value());
  CHECK(check_certificate(instance, *at3, 3).empty());

  CHECK(!lp_feasible(instance, 2).has_value());
}

TEST_CASE("lp_feasible at zero accepts all-zero costs") {
  const Instance zeros = build({{0, 1}, {2, 3}}, {{0, 0, 0, 0}, {0, 0, 0, 0}});
  const auto solution = lp_feasible(zeros, 0);
  REQUIRE(solution.has_value());
  CHECK(check_certificate(zeros, *solution, 0).empty());
}

TEST_CASE("solve_lstar on the reference instance") {
  const Instance instance = ref_a();
  const LpResult lp = solve_lstar(instance);
  CHECK(lp.l_star == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(lp.breakpoints == std::vector<Cost>{2, 3, 4});
  CHECK(lp.chosen_breakpoint == 2);
  CHECK(check_certificate(instance, lp.solution, lp.l_star).empty());
  // The t=2 filter forces the integral certificate (1,0,1,0).
  CHECK(lp.solution.x(0) == doctest::Approx(1.0));
  CHECK(lp.solution.x(2) == doctest::Approx(1.0));
}

TEST_CASE("solve_lstar finds the unit bound on the gap family") {
  const Instance instance = gen_gap(2);
  const LpResult lp = solve_lstar(instance);
  CHECK(lp.l_star == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(check_certificate(instance, lp.solution, lp.l_star).empty());
  CHECK(testing::oracle_best(instance, Objective::MinMax).value == 2);
}

TEST_CASE("solve_lstar with one scenario equals the deterministic optimum") {
  const Instance instance = build({{0, 1, 2}, {3, 4}}, {{4, 2, 7, 1, 3}});
  const LpResult lp = solve_lstar(instance);
  CHECK(lp.l_star ==
        doctest::Approx(static_cast<double>(testing::oracle_scenario_optimum(instance, 0))));
}

TEST_CASE("solve_lstar of an all-zero instance is zero") {
  const Instance zeros = build({{0, 1}, {2}}, {{0, 0, 0}});
  CHECK(solve_lstar(zeros).l_star == doctest::Approx(0.0));
}

TEST_CASE("feasibility is monotone around the optimum") {
  for (std::uint64_t seed : {3u, 11u, 27u}) {
    const Instance instance = gen_random(4, 3, 5, 20, seed);
    const LpResult lp = solve_lstar(instance);
    if (lp.l_star > 0.01) CHECK(!lp_feasible(instance, lp.l_star - 0.01).has_value());
    CHECK(lp_feasible(instance, lp.l_star + 1e-6).has_value());
    CHECK(lp_feasible(instance, lp.l_star + 5.0).has_value());
  }
}

TEST_CASE("L* is a lower bound on the exact optimum") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance instance =
        gen_random(1 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 4),
                   1 + static_cast<int>(seed % 6), 20, seed);
    const LpResult lp = solve_lstar(instance);
    const Cost optimum = testing::oracle_best(instance, Objective::MinMax).value;
    CHECK(lp.l_star <= static_cast<double>(optimum) + 1e-9);
    CHECK(check_certificate(instance, lp.solution, lp.l_star).empty());
  }
}

TEST_CASE("scaling every cost scales L*") {
  const Instance instance = gen_random(3, 3, 4, 15, 77);
  const double base = solve_lstar(instance).l_star;
  for (Cost factor : {2, 7, 100}) {
    Instance scaled = instance;
    scaled.costs *= factor;
    CHECK(solve_lstar(scaled).l_star ==
          doctest::Approx(base * static_cast<double>(factor)).epsilon(1e-9));
  }
}

TEST_CASE("bisection mode agrees with the breakpoint scan") {
  for (std::uint64_t seed : {5u, 19u}) {
    const Instance instance = gen_random(3, 4, 4, 12, seed);
    const double exact = solve_lstar(instance).l_star;
    CHECK(solve_lstar_bisection(instance, 1e-7) == doctest::Approx(exact).epsilon(1e-5));
  }
  CHECK(solve_lstar_bisection(ref_a(), 1e-7) == doctest::Approx(3.0).epsilon(1e-5));
}
