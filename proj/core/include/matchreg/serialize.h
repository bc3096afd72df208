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

#ifndef MATCHREG_SERIALIZE_H_
#define MATCHREG_SERIALIZE_H_

#include <string>
#include <string_view>

#include "matchreg/feasibility.h"
#include "matchreg/game.h"
#include "matchreg/solvers.h"
#include "matchreg/strategy.h"

namespace matchreg {

// {"forced": [[u, t_u], ...]} sorted by u.
std::string SolutionToJson(const Solution& sol);
// Throws kParseError on malformed JSON or a repeated forced vertex.
Solution SolutionFromJson(std::string_view text);

// Solution fields plus "size", "feasible" and "stats". time_ms is written
// only when include_time is set, so default output is reproducible.
std::string SolveResultToJson(const SolveResult& result, bool include_time);

// {"kind": ..., "bindings": {name: vertex, ...}, "path": [...],
//  "witness_profile": [...], "rewritten_profile": [...]}
std::string ConfigurationToJson(const DiminishingConfiguration& config);

std::string FeasibilityReportToJson(const FeasibilityReport& report);

// {"welfare", "rounds", "matching": [[u, v], ...], "profile": [...]}
std::string EquilibriumReportToJson(const EquilibriumReport& report);

}  // namespace matchreg

#endif  // MATCHREG_SERIALIZE_H_
