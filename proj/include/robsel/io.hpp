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

#ifndef ROBSEL_IO_HPP
#define ROBSEL_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "robsel/generators.hpp"
#include "robsel/instance.hpp"

namespace robsel {

inline constexpr int kInstanceFormatVersion = 1;

struct ParsedInstance {
  std::optional<Instance> instance;
  std::vector<std::string> errors;
};

/// Parses the JSON instance document (fields: format_version, p, groups, K,
/// costs, optional names). Errors name the offending field or row; negative,
/// fractional or non-numeric costs are rejected.
ParsedInstance parse_instance(const std::string& text);

/// Canonical JSON document; parse_instance(write_instance(i)) == i and
/// writing a parsed canonical document reproduces it byte for byte.
std::string write_instance(const Instance& instance);

struct ParsedLabelCover {
  std::optional<LabelCoverInstance> label_cover;
  std::vector<std::string> errors;
};

/// Label-cover document: {"V": ..., "W": ..., "N": ..., "edges": [{"v", "w",
/// "sigma": {"0": 1, ...}}]}. Labels are 0-based.
ParsedLabelCover parse_label_cover(const std::string& text);

std::string write_label_cover(const LabelCoverInstance& lc);

}  // namespace robsel

#endif  // ROBSEL_IO_HPP
