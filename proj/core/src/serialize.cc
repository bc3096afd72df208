// Copyright 2026 The matchreg Authors.
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

#include "matchreg/serialize.h"

#include <json.hpp>

#include "matchreg/error.h"

namespace matchreg {

namespace {

using Json = nlohmann::ordered_json;

Json SolutionJson(const Solution& sol) {
  Json forced = Json::array();
  for (const auto& [u, t] : sol.forced()) forced.push_back({u, t});
  return Json{{"forced", forced}};
}

Json ConfigurationJson(const DiminishingConfiguration& config) {
  Json bindings = Json::object();
  for (const auto& [name, v] : config.bindings) bindings[name] = v;
  return Json{{"kind", ConfigurationKindName(config.kind)},
              {"bindings", bindings},
              {"path", config.path},
              {"witness_profile", config.witness_profile.choices()},
              {"rewritten_profile", config.rewritten_profile.choices()}};
}

Json EdgesJson(const Matching& m) {
  Json out = Json::array();
  for (const auto& [u, v] : m.edges()) out.push_back({u, v});
  return out;
}

}  // namespace

std::string SolutionToJson(const Solution& sol) {
  return SolutionJson(sol).dump() + "\n";
}

Solution SolutionFromJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParseError, std::string("solution JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("forced") || !doc["forced"].is_array()) {
    Fail(ErrorCode::kParseError, "solution JSON needs a \"forced\" array");
  }
  Solution sol;
  for (const auto& pair : doc["forced"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      Fail(ErrorCode::kParseError, "forced entries must be [u, t] integer pairs");
    }
    const auto u = pair[0].get<long long>();
    const auto t = pair[1].get<long long>();
    if (u < 0 || t < 0 || u > INT32_MAX || t > INT32_MAX) {
      Fail(ErrorCode::kParseError, "forced vertex out of range");
    }
    if (sol.is_forced(static_cast<VertexId>(u))) {
      Fail(ErrorCode::kParseError,
           "vertex " + std::to_string(u) + " forced twice");
    }
    sol.Force(static_cast<VertexId>(u), static_cast<VertexId>(t));
  }
  return sol;
}

std::string SolveResultToJson(const SolveResult& result, bool include_time) {
  Json doc = SolutionJson(result.solution);
  doc["size"] = result.solution.size();
  doc["feasible"] = result.feasible;
  Json stats{{"nodes", result.stats.nodes},
             {"feasibility_checks", result.stats.feasibility_checks}};
  if (include_time) stats["time_ms"] = result.stats.time_ms;
  doc["stats"] = stats;
  if (result.fallback) doc["fallback"] = "approx";
  return doc.dump() + "\n";
}

std::string ConfigurationToJson(const DiminishingConfiguration& config) {
  return ConfigurationJson(config).dump() + "\n";
}

std::string FeasibilityReportToJson(const FeasibilityReport& report) {
  Json doc{{"feasible", report.feasible},
           {"compatible_matching", EdgesJson(report.compatible.matching)},
           {"compatible_is_maximum", report.compatible.maximum_in_graph},
           {"matching_number", report.compatible.graph_matching_number}};
  if (report.configuration) {
    doc["witness"] = ConfigurationJson(*report.configuration);
  }
  if (report.suboptimal_equilibrium) {
    doc["suboptimal_equilibrium"] = report.suboptimal_equilibrium->choices();
  }
  return doc.dump() + "\n";
}

std::string EquilibriumReportToJson(const EquilibriumReport& report) {
  Json doc{{"welfare", report.welfare},
           {"rounds", report.rounds},
           {"matching", EdgesJson(report.matched)},
           {"profile", report.profile.choices()}};
  return doc.dump() + "\n";
}

}  // namespace matchreg
