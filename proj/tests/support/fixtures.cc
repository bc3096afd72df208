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

#include "support/fixtures.h"

#include <random>

namespace matchreg::testing {

Graph G(int n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::FromEdges(n, list);
}

Solution Sol(std::initializer_list<std::pair<VertexId, VertexId>> forced) {
  Solution s;
  for (const auto& [u, t] : forced) s.Force(u, t);
  return s;
}

StrategyProfile Prof(std::initializer_list<VertexId> choices) {
  return StrategyProfile(std::vector<VertexId>(choices));
}

Matching M(const Graph& g, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Matching::FromEdges(g, list);
}

Graph Petersen() {
  return G(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

Solution RandomSolution(const Graph& g, std::uint64_t seed, int numerator,
                        int denominator) {
  std::mt19937_64 rng(seed);
  Solution s;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (static_cast<int>(rng() % static_cast<std::uint64_t>(denominator)) >=
        numerator) {
      continue;
    }
    const auto nb = g.neighbors(v);
    s.Force(v, nb[rng() % nb.size()]);
  }
  return s;
}

}  // namespace matchreg::testing
