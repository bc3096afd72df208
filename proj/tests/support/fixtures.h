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

#ifndef MATCHREG_TESTS_SUPPORT_FIXTURES_H_
#define MATCHREG_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "matchreg/graph.h"
#include "matchreg/matching.h"
#include "matchreg/strategy.h"

namespace matchreg::testing {

Graph G(int n, std::initializer_list<Edge> edges);
Solution Sol(std::initializer_list<std::pair<VertexId, VertexId>> forced);
StrategyProfile Prof(std::initializer_list<VertexId> choices);
Matching M(const Graph& g, std::initializer_list<Edge> edges);

Graph Petersen();

// A solution with every vertex forced independently with probability
// numerator/denominator to a uniformly random neighbour.
Solution RandomSolution(const Graph& g, std::uint64_t seed, int numerator,
                        int denominator);

}  // namespace matchreg::testing

#endif  // MATCHREG_TESTS_SUPPORT_FIXTURES_H_
