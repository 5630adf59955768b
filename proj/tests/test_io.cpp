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

#include "robsel/io.hpp"

#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "robsel/bench.hpp"
#include "robsel/exact.hpp"
#include "robsel/relax.hpp"
#include "robsel/rounding.hpp"

using namespace robsel;
using testing::ref_a;

TEST_CASE("instance files round-trip through the canonical form") {
  const Instance instance = ref_a();
  const std::string text = write_instance(instance);

  const ParsedInstance parsed = parse_instance(text);
  REQUIRE(parsed.instance.has_value());
  CHECK(parsed.errors.empty());
  CHECK(*parsed.instance == instance);
  CHECK(write_instance(*parsed.instance) == text);
}

TEST_CASE("names survive the round trip") {
  Instance instance = ref_a();
  instance.names = {"a", "b", "c", "d"};
  const ParsedInstance parsed = parse_instance(write_instance(instance));
  REQUIRE(parsed.instance.has_value());
  CHECK(*parsed.instance == instance);
}

TEST_CASE("parse errors name the offending row or field") {
  const std::string ragged = R"({"format_version": 1, "p": 2,
    "groups": [[0, 1], [2, 3]], "K": 2,
    "costs": [[1, 3, 2, 0], [2, 0, 1]]})";
  const ParsedInstance bad_row = parse_instance(ragged);
  REQUIRE(!bad_row.instance.has_value());
  bool named = false;
  for (const auto& error : bad_row.errors)
    named = named || error.find("row 1") != std::string::npos;
  CHECK(named);

  const std::string negative = R"({"format_version": 1, "p": 1,
    "groups": [[0, 1]], "K": 1, "costs": [[3, -1]]})";
  const ParsedInstance bad_cost = parse_instance(negative);
  REQUIRE(!bad_cost.instance.has_value());
  CHECK(bad_cost.errors.front().find("negative cost") != std::string::npos);

  const std::string fractional = R"({"format_version": 1, "p": 1,
    "groups": [[0, 1]], "K": 1, "costs": [[3, 1.5]]})";
  const ParsedInstance bad_fraction = parse_instance(fractional);
  REQUIRE(!bad_fraction.instance.has_value());
  CHECK(bad_fraction.errors.front().find("integer") != std::string::npos);

  CHECK(!parse_instance("{\"costs\": [[NaN]]}").instance.has_value());
  CHECK(!parse_instance("not json").instance.has_value());
}

TEST_CASE("header mismatches are rejected") {
  const std::string wrong_k = R"({"format_version": 1, "p": 1,
    "groups": [[0, 1]], "K": 2, "costs": [[3, 1]]})";
  CHECK(!parse_instance(wrong_k).instance.has_value());

  const std::string wrong_version = R"({"format_version": 9, "p": 1,
    "groups": [[0, 1]], "K": 1, "costs": [[3, 1]]})";
  CHECK(!parse_instance(wrong_version).instance.has_value());
}

TEST_CASE("label cover files round-trip") {
  LabelCoverInstance lc;
  lc.v_count = 2;
  lc.w_count = 2;
  lc.label_count = 2;
  lc.edges.push_back({0, 0, {{0, 0}, {1, 1}}});
  lc.edges.push_back({1, 1, {{0, 1}}});

  const ParsedLabelCover parsed = parse_label_cover(write_label_cover(lc));
  REQUIRE(parsed.label_cover.has_value());
  CHECK(parsed.label_cover->edges.size() == 2);
  CHECK(parsed.label_cover->edges[1].sigma.at(0) == 1);

  CHECK(!parse_label_cover("{\"V\": 1}").label_cover.has_value());
}

TEST_CASE("every algorithm attains the optimum on the reference instance") {
  const Instance instance = ref_a();
  const Cost optimum = testing::oracle_best(instance, Objective::MinMax).value;
  const LpResult lp = solve_lstar(instance);

  CHECK(brute_force(instance, Objective::MinMax).optimum == optimum);
  CHECK(dp_small_k(instance, Objective::MinMax).optimum == optimum);
  CHECK(evaluate(instance, aggregate_approx(instance, AggregationMode::MaxAggregate)).max_cost ==
        optimum);
  CHECK(evaluate(instance, aggregate_approx(instance, AggregationMode::Midpoint)).max_cost ==
        optimum);
  CHECK(evaluate(instance, round_rmax(instance, lp)).max_cost == optimum);
  CHECK(round_randomized(instance, lp, 9).max_cost == optimum);
  CHECK(round_pessimistic(instance, lp).max_cost == optimum);
}

TEST_CASE("bench runs are deterministic and ratio-sane") {
  BenchSpec spec;
  for (std::uint64_t seed = 1; seed <= 3; ++seed)
    spec.entries.push_back({"random", 3, 3, 4, 12, seed});
  spec.algorithms = {"brute", "maxagg", "rmax", "pessimistic"};

  const auto records = run_bench(spec);
  CHECK(records.size() == 12);
  for (const auto& record : records) {
    CHECK(record.error.empty());
    REQUIRE(record.value.has_value());
    REQUIRE(record.oracle.has_value());
    CHECK(*record.value >= *record.oracle);
    if (record.ratio_opt) CHECK(*record.ratio_opt >= 1.0 - 1e-9);
  }

  CHECK(bench_csv(run_bench(spec)) == bench_csv(records));
}

TEST_CASE("gap bench shows the integrality ratio against L*") {
  BenchSpec spec;
  spec.entries.push_back({"gap", 2, 2, 0, 1, 0});
  spec.entries.push_back({"gap", 3, 3, 0, 1, 0});
  spec.algorithms = {"brute", "rmax", "pessimistic", "maxagg"};

  const auto records = run_bench(spec);
  for (const auto& record : records) {
    REQUIRE(record.value.has_value());
    REQUIRE(record.ratio_lstar.has_value());
    CHECK(*record.ratio_lstar == doctest::Approx(static_cast<double>(record.p)).epsilon(1e-6));
    if (record.ratio_opt) CHECK(*record.ratio_opt == doctest::Approx(1.0));
  }

  const std::string table = gap_ratio_table(records);
  CHECK(table.find("p,K,log_K,opt,l_star,gap_ratio") == 0);
  CHECK(table.find("\n2,4,") != std::string::npos);
  CHECK(table.find("\n3,27,") != std::string::npos);
}

TEST_CASE("an empty algorithm list produces a header-only report") {
  BenchSpec spec;
  spec.entries.push_back({"gap", 2, 2, 0, 1, 0});
  const auto records = run_bench(spec);
  CHECK(records.empty());
  const std::string csv = bench_csv(records);
  CHECK(csv.find('\n') == csv.size() - 1);
}

TEST_CASE("per-entry failures are recorded and the run continues") {
  BenchSpec spec;
  spec.entries.push_back({"gap", 3, 3, 0, 1, 0});
  spec.entries.push_back({"random", 2, 2, 5, 9, 1});  // K=5 exceeds the dp cap
  spec.algorithms = {"dp"};

  const auto records = run_bench(spec);
  REQUIRE(records.size() == 2);
  CHECK(!records[0].error.empty());  // gap p=3 has 27 scenarios
  CHECK(!records[1].error.empty());
  CHECK(!records[0].value.has_value());
}

TEST_CASE("regret bench rejects relaxation roundings") {
  BenchSpec spec;
  spec.entries.push_back({"random", 2, 2, 2, 5, 1});
  spec.algorithms = {"rmax"};
  spec.objective = Objective::MinMaxRegret;
  CHECK_THROWS_AS(run_bench(spec), std::invalid_argument);

  spec.algorithms = {"brute", "dp", "maxagg", "midpoint"};
  const auto records = run_bench(spec);
  for (const auto& record : records) {
    CHECK(record.error.empty());
    CHECK(record.objective == "regret");
  }
}
