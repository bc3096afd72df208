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

#include "matchreg/leaves.h"

namespace matchreg {

namespace {

// For each vertex, the lowest leaf hanging off it (kNoVertex if none).
// An isolated edge is left alone: its ends are each other's only leaf.
std::vector<VertexId> FirstLeafAt(const Graph& g) {
  std::vector<VertexId> first(static_cast<std::size_t>(g.num_vertices()),
                              kNoVertex);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 1) continue;
    const VertexId w = g.neighbors(v).front();
    auto& slot = first[static_cast<std::size_t>(w)];
    if (slot == kNoVertex) slot = v;
  }
  return first;
}

}  // namespace

std::vector<VertexId> Leaves(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

bool HasDistinctLeafNeighbours(const Graph& g) {
  const std::vector<VertexId> first = FirstLeafAt(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 1) continue;
    if (first[static_cast<std::size_t>(g.neighbors(v).front())] != v) {
      return false;
    }
  }
  return true;
}

Solution LeafReduction::Lift(const Solution& reduced_solution) const {
  Solution out;
  for (const auto& [v, t] : reduced_solution.forced()) {
    out.Force(to_original[static_cast<std::size_t>(v)],
              to_original[static_cast<std::size_t>(t)]);
  }
  return out;
}

LeafReduction DedupLeaves(const Graph& g) {
  const std::vector<VertexId> first = FirstLeafAt(g);
  LeafReduction out;
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 1) {
      const VertexId kept = first[static_cast<std::size_t>(g.neighbors(v).front())];
      if (kept != v) {
        out.removed_leaves[v] = kept;
        continue;
      }
    }
    keep.push_back(v);
  }
  out.reduced = g.InducedSubgraph(keep, &out.to_original);
  return out;
}

}  // namespace matchreg
