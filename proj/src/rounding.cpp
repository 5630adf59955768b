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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace robsel {
namespace {

constexpr double kSupportEps = 1e-12;
constexpr double kMuEps = 1e-12;
constexpr double kZeroThreshold = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

double next_unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// log E[e^{t c}] for a 0/1 cost with success weight q.
double log_mgf(double q, double t) {
  if (q <= 0.0) return 0.0;
  if (t < 500.0) return std::log1p(q * std::expm1(t));
  return std::log(q) + t;
}

double log_sum_exp(const Eigen::VectorXd& a) {
  if (a.size() == 0) return -kInf;
  const double peak = a.maxCoeff();
  if (peak == -kInf) return -kInf;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) sum += std::exp(a(i) - peak);
  return peak + std::log(sum);
}

Eigen::VectorXd raw_loads(const Instance& instance, const Selection& selection) {
  Eigen::VectorXd loads = Eigen::VectorXd::Zero(instance.scenario_count());
  for (int j : selection.chosen) loads += instance.costs.col(j).cast<double>();
  return loads;
}

std::vector<int> support_of(const std::vector<int>& group, const Eigen::VectorXd& x) {
  std::vector<int> support;
  for (int j : group)
    if (x(j) > kSupportEps) support.push_back(j);
  std::sort(support.begin(), support.end());
  return support;
}

}  // namespace

Eigen::MatrixXd ScaledMatrix::tilde() const {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(matrix.rows(), matrix.cols());
  for (std::size_t l = 0; l < planes.size(); ++l)
    sum += std::ldexp(1.0, -static_cast<int>(l)) * planes[l].cast<double>();
  return sum;
}

Selection round_rmax(const Instance& instance, const LpResult& lp) {
  Selection selection;
  selection.chosen.reserve(instance.groups.size());
  for (const auto& group : instance.groups) {
    std::vector<int> members = group;
    std::sort(members.begin(), members.end());
    int best = members.front();
    for (int j : members)
      if (lp.solution.x(j) > lp.solution.x(best)) best = j;
    selection.chosen.push_back(best);
  }
  return selection;
}

Selection zero_threshold_selection(const Instance& instance) {
  Selection selection;
  selection.chosen.reserve(instance.groups.size());
  for (std::size_t i = 0; i < instance.groups.size(); ++i) {
    std::vector<int> members = instance.groups[i];
    std::sort(members.begin(), members.end());
    int pick = -1;
    for (int j : members) {
      if (instance.costs.col(j).maxCoeff() == 0) {
        pick = j;
        break;
      }
    }
    if (pick < 0)
      throw std::logic_error("group " + std::to_string(i) +
                             " has no zero-cost tool; l_star cannot be 0");
    selection.chosen.push_back(pick);
  }
  return selection;
}

RoundingReport round_randomized(const Instance& instance, const LpResult& lp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RoundingReport report;
  report.seed = seed;
  report.zero_threshold = lp.l_star < kZeroThreshold;

  for (const auto& group : instance.groups) {
    const std::vector<int> support = support_of(group, lp.solution.x);
    if (support.empty()) throw std::invalid_argument("fractional solution has an empty group");
    double total = 0.0;
    for (int j : support) total += lp.solution.x(j);
    const double u = next_unit_double(rng) * total;
    double cumulative = 0.0;
    int pick = support.back();
    for (int j : support) {
      cumulative += lp.solution.x(j);
      if (u < cumulative) {
        pick = j;
        break;
      }
    }
    report.selection.chosen.push_back(pick);
  }

  report.max_cost = evaluate(instance, report.selection).max_cost;
  report.scaled_loads =
      report.zero_threshold
          ? Eigen::VectorXd::Zero(instance.scenario_count()).eval()
          : (raw_loads(instance, report.selection) / lp.l_star).eval();
  return report;
}

ScaledMatrix build_scaled(const Instance& instance, const LpResult& lp, bool with_bit_planes) {
  if (lp.l_star < kZeroThreshold)
    throw ZeroThresholdError("zero-threshold instance: scaling by l_star undefined");

  ScaledMatrix scaled;
  scaled.kept_tools = filter_set(instance, lp.l_star + kZeroThreshold);
  const int cols = static_cast<int>(scaled.kept_tools.size());
  const int scenarios = instance.scenario_count();

  scaled.matrix.resize(scenarios, cols);
  scaled.x.resize(cols);
  for (int c = 0; c < cols; ++c) {
    const int j = scaled.kept_tools[static_cast<std::size_t>(c)];
    scaled.matrix.col(c) =
        (instance.costs.col(j).cast<double>() / lp.l_star).cwiseMin(1.0);
    scaled.x(c) = lp.solution.x(j);
  }
  scaled.mu = scaled.matrix * scaled.x;

  std::vector<int> column_of(static_cast<std::size_t>(instance.tool_count()), -1);
  for (int c = 0; c < cols; ++c) column_of[static_cast<std::size_t>(scaled.kept_tools[c])] = c;
  scaled.groups.resize(instance.groups.size());
  for (std::size_t i = 0; i < instance.groups.size(); ++i) {
    for (int j : instance.groups[i]) {
      const int c = column_of[static_cast<std::size_t>(j)];
      if (c >= 0) scaled.groups[i].push_back(c);
    }
    std::sort(scaled.groups[i].begin(), scaled.groups[i].end());
    if (scaled.groups[i].empty())
      throw std::logic_error("group " + std::to_string(i) + " empty under the L* filter");
  }

  scaled.bit_count = cols > 1 ? static_cast<int>(std::ceil(std::log2(static_cast<double>(cols))))
                              : 0;
  if (with_bit_planes) {
    const double grid = std::ldexp(1.0, scaled.bit_count);
    scaled.planes.assign(static_cast<std::size_t>(scaled.bit_count) + 1,
                         Eigen::MatrixXi::Zero(scenarios, cols));
    for (int k = 0; k < scenarios; ++k) {
      for (int c = 0; c < cols; ++c) {
        double value = scaled.matrix(k, c);
        if (std::abs(value - 1.0) <= kZeroThreshold) {
          scaled.planes[0](k, c) = 1;
          continue;
        }
        auto bits = static_cast<long long>(std::floor(value * grid + 1e-9));
        bits = std::min(bits, static_cast<long long>(grid) - 1);
        for (int l = 1; l <= scaled.bit_count; ++l)
          scaled.planes[static_cast<std::size_t>(l)](k, c) =
              static_cast<int>((bits >> (scaled.bit_count - l)) & 1);
      }
    }
  }
  return scaled;
}

RoundingReport round_pessimistic_binary(const Eigen::MatrixXi& binary,
                                        const std::vector<std::vector<int>>& groups,
                                        const Eigen::VectorXd& x, double lambda_precision) {
  const int rows = static_cast<int>(binary.rows());
  const int group_count = static_cast<int>(groups.size());

  std::vector<std::vector<int>> supports(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    supports[i] = support_of(groups[i], x);
    if (supports[i].empty()) throw std::invalid_argument("group without fractional support");
  }

  RoundingReport report;
  report.mu = binary.cast<double>() * x;

  std::vector<int> active;
  for (int k = 0; k < rows; ++k)
    if (report.mu(k) > kMuEps) active.push_back(k);
  const int active_count = static_cast<int>(active.size());

  // Success weight of each (active row, group): total x mass on support tools
  // the row charges.
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(active_count, group_count);
  for (int a = 0; a < active_count; ++a)
    for (int i = 0; i < group_count; ++i)
      for (int j : supports[static_cast<std::size_t>(i)])
        if (binary(active[static_cast<std::size_t>(a)], j) != 0) q(a, i) += x(j);

  const auto tau_of = [&](double mu_k, double lambda) {
    return mu_k + lambda * std::max(1.0, mu_k);
  };
  const auto t_of = [&](double mu_k, double lambda) {
    return std::log1p(lambda * std::max(1.0, mu_k) / std::max(mu_k, kMuEps));
  };

  const auto initial_terms = [&](double lambda) {
    Eigen::VectorXd terms(active_count);
    for (int a = 0; a < active_count; ++a) {
      const double mu_k = report.mu(active[static_cast<std::size_t>(a)]);
      const double t = t_of(mu_k, lambda);
      double term = -t * tau_of(mu_k, lambda);
      for (int i = 0; i < group_count; ++i) term += log_mgf(q(a, i), t);
      terms(a) = term;
    }
    return terms;
  };

  double lambda = 0.0;
  if (active_count > 0) {
    const auto feasible = [&](double candidate) {
      return log_sum_exp(initial_terms(candidate)) < 0.0;
    };
    double hi = 1.0;
    if (!feasible(hi)) {
      while (!feasible(hi)) {
        hi *= 2.0;
        if (hi > 1e60) throw std::logic_error("estimator failed to drop below 1");
      }
      double lo = hi / 2.0;
      while (hi - lo > lambda_precision * hi) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
      }
      lambda = hi;
    } else {
      double lo = hi;
      while (feasible(lo) && lo > 1e-12) lo /= 2.0;
      if (feasible(lo)) {
        lambda = lo;
      } else {
        hi = 2.0 * lo;
        while (hi - lo > lambda_precision * hi) {
          const double mid = 0.5 * (lo + hi);
          (feasible(mid) ? hi : lo) = mid;
        }
        lambda = hi;
      }
    }
  }
  report.lambda = lambda;

  report.thresholds.resize(rows);
  for (int k = 0; k < rows; ++k) report.thresholds(k) = tau_of(report.mu(k), lambda);

  Eigen::VectorXd t_row(active_count);
  for (int a = 0; a < active_count; ++a)
    t_row(a) = t_of(report.mu(active[static_cast<std::size_t>(a)]), lambda);

  Eigen::VectorXd exponents = initial_terms(lambda);
  report.log_phi0 = log_sum_exp(exponents);

  // Greedy conditional decisions: per group, keep the support tool whose
  // substitution minimizes the estimator.
  Eigen::VectorXd base(active_count);
  for (int i = 0; i < group_count; ++i) {
    for (int a = 0; a < active_count; ++a)
      base(a) = exponents(a) - log_mgf(q(a, i), t_row(a));

    int chosen = -1;
    double chosen_log_phi = kInf;
    Eigen::VectorXd candidate(active_count);
    for (int j : supports[static_cast<std::size_t>(i)]) {
      for (int a = 0; a < active_count; ++a)
        candidate(a) =
            base(a) + (binary(active[static_cast<std::size_t>(a)], j) != 0 ? t_row(a) : 0.0);
      const double log_phi = log_sum_exp(candidate);
      if (chosen < 0 || log_phi < chosen_log_phi) {
        chosen = j;
        chosen_log_phi = log_phi;
        exponents = candidate;
      }
    }
    report.selection.chosen.push_back(chosen);
    report.log_phi_trace.push_back(active_count > 0 ? log_sum_exp(exponents) : -kInf);
  }
  if (active_count == 0) report.log_phi0 = -kInf;

  report.estimator_loads = Eigen::VectorXi::Zero(rows);
  for (int j : report.selection.chosen) report.estimator_loads += binary.col(j);
  return report;
}

RoundingReport round_pessimistic(const Instance& instance, const LpResult& lp) {
  if (lp.l_star < kZeroThreshold) {
    RoundingReport report;
    report.zero_threshold = true;
    report.selection = zero_threshold_selection(instance);
    report.max_cost = 0;
    report.scaled_loads = Eigen::VectorXd::Zero(instance.scenario_count());
    return report;
  }

  const ScaledMatrix scaled = build_scaled(instance, lp, true);
  const int scenarios = instance.scenario_count();
  const int cols = static_cast<int>(scaled.kept_tools.size());
  const int plane_count = scaled.bit_count + 1;

  Eigen::MatrixXi stacked(plane_count * scenarios, cols);
  for (int l = 0; l < plane_count; ++l)
    stacked.middleRows(l * scenarios, scenarios) = scaled.planes[static_cast<std::size_t>(l)];

  RoundingReport report =
      round_pessimistic_binary(stacked, scaled.groups, scaled.x, 1e-3);

  Selection original;
  original.chosen.reserve(report.selection.chosen.size());
  for (int c : report.selection.chosen)
    original.chosen.push_back(scaled.kept_tools[static_cast<std::size_t>(c)]);

  Eigen::VectorXd z = Eigen::VectorXd::Zero(cols);
  for (int c : report.selection.chosen) z(c) = 1.0;

  report.selection = original;
  report.max_cost = evaluate(instance, report.selection).max_cost;
  report.scaled_loads = raw_loads(instance, report.selection) / lp.l_star;

  report.plane_deviation.resize(plane_count, scenarios);
  report.recombined_bound = Eigen::VectorXd::Zero(scenarios);
  Eigen::VectorXd tilde_signed = Eigen::VectorXd::Zero(scenarios);
  for (int l = 0; l < plane_count; ++l) {
    const Eigen::MatrixXd plane = scaled.planes[static_cast<std::size_t>(l)].cast<double>();
    const Eigen::VectorXd deviation = plane * z - plane * scaled.x;
    const double weight = std::ldexp(1.0, -l);
    for (int k = 0; k < scenarios; ++k) {
      report.plane_deviation(l, k) = std::abs(deviation(k));
      report.recombined_bound(k) += weight * std::abs(deviation(k));
      tilde_signed(k) += weight * deviation(k);
    }
  }
  report.tilde_deviation = tilde_signed.cwiseAbs();
  return report;
}

}  // namespace robsel
