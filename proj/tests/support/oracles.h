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

// Deliberately naive reference implementations used only by tests. None of
// them calls into the library beyond the Graph container.

#ifndef MATCHREG_TESTS_SUPPORT_ORACLES_H_
#define MATCHREG_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "matchreg/graph.h"

namespace matchreg::testing {

// Every matching of g (as edge lists), including the empty one.
std::vector<std::vector<Edge>> AllMatchings(const Graph& g);

// Size of a largest matching, by exhaustive search.
int BruteMatchingNumber(const Graph& g);

// Minimum vertex cover size of the graph on n vertices with these edges.
int BruteMinVertexCover(int n, const std::vector<Edge>& edges);

// True iff some augmenting path for the matching (mate array) exists,
// by enumerating simple paths.
bool BruteHasAugmentingPath(const Graph& g, const std::vector<VertexId>& mate);

// Simple paths a, a', ..., b', b alternating matched / unmatched edges that
// start with (a, a') and end with (b', b) and avoid the excluded vertices.
bool BruteAlternatingPath(const Graph& g, const std::vector<VertexId>& mate,
                          VertexId a, VertexId b,
                          const std::vector<VertexId>& excluded);

// Calls f on every profile (choice vector) in lexicographic order.
void ForEachProfile(const Graph& g,
                    const std::function<void(const std::vector<VertexId>&)>& f);

// Equilibrium by the definition: forced vertices play their target and no
// unforced vertex gains by any unilateral deviation. target[v] = -1 if free.
bool BruteIsEquilibrium(const Graph& g, const std::vector<VertexId>& s,
                        const std::vector<VertexId>& target);

// Number of matched vertices.
int BruteWelfare(const std::vector<VertexId>& s);

// Every compatible equilibrium has welfare 2 * matching number.
bool BruteIsFeasible(const Graph& g, const std::vector<VertexId>& target);

// Every coalition of at most k unforced players and every joint deviation.
bool BruteIsKStrong(const Graph& g, const std::vector<VertexId>& s,
                    const std::vector<VertexId>& target, int k);

// Minimum number of forced vertices of a feasible solution, by trying all
// (Q, T) in size order with BruteIsFeasible.
int BruteOptimum(const Graph& g);

}  // namespace matchreg::testing

#endif  // MATCHREG_TESTS_SUPPORT_ORACLES_H_
