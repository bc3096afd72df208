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

#ifndef MATCHREG_REDUCTIONS_H_
#define MATCHREG_REDUCTIONS_H_

#include <span>
#include <vector>

#include "matchreg/graph.h"
#include "matchreg/matching.h"
#include "matchreg/strategy.h"

namespace matchreg {

// Attaches a pendant n + i to every vertex i. The pendant edges form the
// unique perfect matching, and minimum vertex covers of g correspond to
// optimal solutions of the result.
Graph VcToMfv(const Graph& g);
// Same on a raw edge list, where isolated vertices are allowed.
Graph VcToMfv(int n, std::span<const Edge> edges);

struct VcReduction {
  Graph graph;                       // induced on the degree > 1 vertices
  std::vector<VertexId> to_original;
};

// Throws kNoPerfectMatching when g has none.
VcReduction MfvToVc(const Graph& g);

// Forces every cover vertex (original ids) along the perfect matching m.
// Throws kInvalidCover if cover misses an edge of MfvToVc(g) or names a
// vertex of degree 1, kNoPerfectMatching if m is not perfect.
Solution CoverToSolution(const Graph& g, std::span<const VertexId> cover,
                         const Matching& m);

// Greedy maximal matching on MfvToVc(g), both ends of every edge as the
// cover, then CoverToSolution. At most twice the optimum.
Solution ApproxPerfectMatching(const Graph& g);

}  // namespace matchreg

#endif  // MATCHREG_REDUCTIONS_H_
