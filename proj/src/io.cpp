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

#include <json.hpp>

namespace robsel {
namespace {

using Json = nlohmann::ordered_json;

bool require_field(const Json& document, const char* name, std::vector<std::string>& errors) {
  if (document.contains(name)) return true;
  errors.push_back(std::string("missing field \"") + name + "\"");
  return false;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  ParsedInstance result;
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& error) {
    result.errors.push_back(std::string("JSON parse error: ") + error.what());
    return result;
  }
  if (!document.is_object()) {
    result.errors.push_back("top-level value must be an object");
    return result;
  }

  auto& errors = result.errors;
  if (require_field(document, "format_version", errors)) {
    if (!document["format_version"].is_number_integer() ||
        document["format_version"].get<int>() != kInstanceFormatVersion)
      errors.push_back("unsupported format_version (expected " +
                       std::to_string(kInstanceFormatVersion) + ")");
  }

  std::vector<std::vector<int>> groups;
  if (require_field(document, "groups", errors)) {
    const Json& raw = document["groups"];
    if (!raw.is_array()) {
      errors.push_back("\"groups\" must be an array of index arrays");
    } else {
      for (std::size_t i = 0; i < raw.size(); ++i) {
        std::vector<int> group;
        if (!raw[i].is_array()) {
          errors.push_back("groups[" + std::to_string(i) + "] must be an array");
          continue;
        }
        for (const Json& entry : raw[i]) {
          if (!entry.is_number_integer()) {
            errors.push_back("groups[" + std::to_string(i) + "] has a non-integer tool index");
            continue;
          }
          group.push_back(entry.get<int>());
        }
        groups.push_back(std::move(group));
      }
    }
  }
  if (document.contains("p") &&
      (!document["p"].is_number_integer() ||
       document["p"].get<std::size_t>() != groups.size()))
    errors.push_back("\"p\" does not match the number of groups");

  std::vector<std::vector<Cost>> cost_rows;
  if (require_field(document, "costs", errors)) {
    const Json& raw = document["costs"];
    if (!raw.is_array()) {
      errors.push_back("\"costs\" must be an array of rows");
    } else {
      for (std::size_t k = 0; k < raw.size(); ++k) {
        std::vector<Cost> row;
        if (!raw[k].is_array()) {
          errors.push_back("costs row " + std::to_string(k) + " must be an array");
          continue;
        }
        for (std::size_t j = 0; j < raw[k].size(); ++j) {
          const Json& entry = raw[k][j];
          if (!entry.is_number_integer()) {
            errors.push_back("costs row " + std::to_string(k) + ", column " + std::to_string(j) +
                             ": costs must be integers");
            row.push_back(0);
            continue;
          }
          const Cost value = entry.get<Cost>();
          if (value < 0)
            errors.push_back("costs row " + std::to_string(k) + ", column " + std::to_string(j) +
                             ": negative cost");
          row.push_back(value);
        }
        cost_rows.push_back(std::move(row));
      }
    }
  }
  if (document.contains("K") &&
      (!document["K"].is_number_integer() ||
       document["K"].get<std::size_t>() != cost_rows.size()))
    errors.push_back("\"K\" does not match the number of cost rows");

  std::vector<std::string> names;
  if (document.contains("names")) {
    const Json& raw = document["names"];
    if (!raw.is_array()) {
      errors.push_back("\"names\" must be an array of strings");
    } else {
      for (const Json& entry : raw) {
        if (!entry.is_string()) {
          errors.push_back("\"names\" must contain only strings");
          break;
        }
        names.push_back(entry.get<std::string>());
      }
    }
  }

  if (!errors.empty()) return result;

  InstanceBuildResult built = make_instance(std::move(groups), cost_rows, std::move(names));
  result.errors = std::move(built.errors);
  result.instance = std::move(built.instance);
  return result;
}

std::string write_instance(const Instance& instance) {
  Json document;
  document["format_version"] = kInstanceFormatVersion;
  document["p"] = instance.group_count();
  document["groups"] = instance.groups;
  document["K"] = instance.scenario_count();
  Json rows = Json::array();
  for (int k = 0; k < instance.scenario_count(); ++k) {
    Json row = Json::array();
    for (int j = 0; j < instance.tool_count(); ++j) row.push_back(instance.costs(k, j));
    rows.push_back(std::move(row));
  }
  document["costs"] = std::move(rows);
  if (!instance.names.empty()) document["names"] = instance.names;
  return document.dump(2) + "\n";
}

ParsedLabelCover parse_label_cover(const std::string& text) {
  ParsedLabelCover result;
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& error) {
    result.errors.push_back(std::string("JSON parse error: ") + error.what());
    return result;
  }
  if (!document.is_object()) {
    result.errors.push_back("top-level value must be an object");
    return result;
  }

  auto& errors = result.errors;
  LabelCoverInstance lc;
  for (const char* name : {"V", "W", "N", "edges"}) require_field(document, name, errors);
  if (!errors.empty()) return result;

  if (!document["V"].is_number_integer() || !document["W"].is_number_integer() ||
      !document["N"].is_number_integer()) {
    errors.push_back("\"V\", \"W\" and \"N\" must be integers");
    return result;
  }
  lc.v_count = document["V"].get<int>();
  lc.w_count = document["W"].get<int>();
  lc.label_count = document["N"].get<int>();

  if (!document["edges"].is_array()) {
    errors.push_back("\"edges\" must be an array");
    return result;
  }
  for (std::size_t e = 0; e < document["edges"].size(); ++e) {
    const Json& raw = document["edges"][e];
    LabelCoverInstance::Edge edge;
    if (!raw.is_object() || !raw.contains("v") || !raw.contains("w") || !raw.contains("sigma")) {
      errors.push_back("edges[" + std::to_string(e) + "] needs \"v\", \"w\" and \"sigma\"");
      continue;
    }
    if (!raw["v"].is_number_integer() || !raw["w"].is_number_integer()) {
      errors.push_back("edges[" + std::to_string(e) + "] endpoints must be integers");
      continue;
    }
    edge.v = raw["v"].get<int>();
    edge.w = raw["w"].get<int>();
    if (!raw["sigma"].is_object()) {
      errors.push_back("edges[" + std::to_string(e) + "].sigma must be an object");
      continue;
    }
    for (const auto& [key, value] : raw["sigma"].items()) {
      if (!value.is_number_integer()) {
        errors.push_back("edges[" + std::to_string(e) + "].sigma values must be integers");
        continue;
      }
      try {
        edge.sigma[std::stoi(key)] = value.get<int>();
      } catch (const std::exception&) {
        errors.push_back("edges[" + std::to_string(e) + "].sigma has a non-integer label key");
      }
    }
    lc.edges.push_back(std::move(edge));
  }
  if (!errors.empty()) return result;

  const auto violations = validate(lc);
  if (!violations.empty()) {
    result.errors = violations;
    return result;
  }
  result.label_cover = std::move(lc);
  return result;
}

std::string write_label_cover(const LabelCoverInstance& lc) {
  Json document;
  document["V"] = lc.v_count;
  document["W"] = lc.w_count;
  document["N"] = lc.label_count;
  Json edges = Json::array();
  for (const auto& edge : lc.edges) {
    Json raw;
    raw["v"] = edge.v;
    raw["w"] = edge.w;
    Json sigma = Json::object();
    for (const auto& [from, to] : edge.sigma) sigma[std::to_string(from)] = to;
    raw["sigma"] = std::move(sigma);
    edges.push_back(std::move(raw));
  }
  document["edges"] = std::move(edges);
  return document.dump(2) + "\n";
}

}  // namespace robsel
