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

#ifndef ROBSEL_TESTS_FIXTURES_HPP
#define ROBSEL_TESTS_FIXTURES_HPP

#include <vector>

#include "robsel/instance.hpp"

namespace robsel::testing {

inline Instance build(std::vector<std::vector<int>> groups,
                      const std::vector<std::vector<Cost>>& cost_rows) {
  Instance instance;
  instance.groups = std::move(groups);
  instance.costs.resize(static_cast<Eigen::Index>(cost_rows.size()),
                        static_cast<Eigen::Index>(cost_rows.front().size()));
  for (std::size_t k = 0; k < cost_rows.size(); ++k)
    for (std::size_t j = 0; j < cost_rows[k].size(); ++j)
      instance.costs(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = cost_rows[k][j];
  return instance;
}

/// Two groups {0,1} and {2,3}, scenarios (1,3,2,0) and (2,0,1,4).
/// Optima: OPT_1 = 3 and OPT_2 = 2, both at selection {0,2}; L* = 3.
inline Instance ref_a() {
  return build({{0, 1}, {2, 3}}, {{1, 3, 2, 0}, {2, 0, 1, 4}});
}

}  // namespace robsel::testing

#endif  // ROBSEL_TESTS_FIXTURES_HPP
