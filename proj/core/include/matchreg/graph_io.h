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

#ifndef MATCHREG_GRAPH_IO_H_
#define MATCHREG_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "matchreg/graph.h"
#include "matchreg/matching.h"
#include "matchreg/strategy.h"

namespace matchreg {

// Edge list: "n m" then m lines "u v". Any malformed or invalid input throws
// kParseError; for graph-level problems the message names the underlying
// error (for example "ParseError: DuplicateEdge: ...").
Graph ReadEdgeList(std::string_view text);
// Canonical form: edges sorted, u < v, newline-terminated.
std::string WriteEdgeList(const Graph& g);

// One "u v" line per edge, sorted.
Matching ReadMatching(const Graph& g, std::string_view text);
std::string WriteMatching(const Matching& m);

// n lines "i S_i".
StrategyProfile ReadProfile(const Graph& g, std::string_view text);
std::string WriteProfile(const StrategyProfile& s);

}  // namespace matchreg

#endif  // MATCHREG_GRAPH_IO_H_
