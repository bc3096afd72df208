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

#include "matchreg/reductions.h"

#include <algorithm>
#include <string>

#include "matchreg/error.h"

namespace matchreg {

namespace {

Matching RequirePerfect(const Graph& g) {
  Matching m = MaximumMatching(g);
  if (2 * m.size() != g.num_vertices()) {
    Fail(ErrorCode::kNoPerfectMatching,
         "maximum matching covers " + std::to_string(2 * m.size()) + " of " +
             std::to_string(g.num_vertices()) + " vertices");
  }
  return m;
}

}  // namespace

Graph VcToMfv(int n, std::span<const Edge> edges) {
  std::vector<Edge> out(edges.begin(), edges.end());
  for (VertexId i = 0; i < n; ++i) out.emplace_back(i, n + i);
  return Graph::FromEdges(2 * n, out);
}

Graph VcToMfv(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  return VcToMfv(g.num_vertices(), edges);
}

VcReduction MfvToVc(const Graph& g) {
  RequirePerfect(g);
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 1) keep.push_back(v);
  }
  VcReduction out;
  out.graph = g.InducedSubgraph(keep, &out.to_original);
  return out;
}

Solution CoverToSolution(const Graph& g, std::span<const VertexId> cover,
                         const Matching& m) {
  const int n = g.num_vertices();
  if (m.num_vertices() != n || 2 * m.size() != n) {
    Fail(ErrorCode::kNoPerfectMatching, "matching is not perfect");
  }
  std::vector<char> in_cover(static_cast<std::size_t>(n), false);
  for (VertexId v : cover) {
    if (v < 0 || v >= n || g.degree(v) <= 1) {
      Fail(ErrorCode::kInvalidCover,
           "cover vertex " + std::to_string(v) + " is not in the reduced graph");
    }
    in_cover[static_cast<std::size_t>(v)] = true;
  }
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) > 1 && g.degree(v) > 1 &&
        !in_cover[static_cast<std::size_t>(u)] &&
        !in_cover[static_cast<std::size_t>(v)]) {
      Fail(ErrorCode::kInvalidCover, "edge (" + std::to_string(u) + "," +
                                         std::to_string(v) + ") is uncovered");
    }
  }
  Solution sol;
  for (VertexId v : cover) {
    if (!g.has_edge(v, m.mate(v))) {
      Fail(ErrorCode::kNoPerfectMatching, "matching uses a non-edge");
    }
    sol.Force(v, m.mate(v));
  }
  return sol;
}

Solution ApproxPerfectMatching(const Graph& g) {
  const Matching m = RequirePerfect(g);
  const VcReduction red = MfvToVc(g);
  std::vector<VertexId> cover;
  const std::vector<VertexId> mates =
      detail::GreedyMates(red.graph.adjacency());
  for (VertexId v = 0; v < red.graph.num_vertices(); ++v) {
    if (mates[static_cast<std::size_t>(v)] != kNoVertex) {
      cover.push_back(red.to_original[static_cast<std::size_t>(v)]);
    }
  }
  return CoverToSolution(g, cover, m);
}

}  // namespace matchreg
