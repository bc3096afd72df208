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

#ifndef MATCHREG_GRAPH_H_
#define MATCHREG_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace matchreg {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

// Undirected edge. Canonical edges satisfy first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge CanonicalEdge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Every vertex has degree at least one; the empty graph (n = 0) is allowed.
// Instances are immutable once built.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Throws Error with kSelfLoop, kDuplicateEdge,
  // kIsolatedVertex or kIndexOutOfRange.
  static Graph FromEdges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(VertexId v) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
  }
  bool has_edge(VertexId u, VertexId v) const;
  int max_degree() const;

  // All edges in lexicographic order, each as (u, v) with u < v.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  // Connected components, each sorted ascending; components ordered by their
  // smallest vertex.
  std::vector<std::vector<VertexId>> components() const;

  // Subgraph induced by `keep` (any order; relabelled densely by ascending
  // original id). `to_original[i]` receives the original id of vertex i.
  // Throws kIsolatedVertex if a kept vertex loses all its neighbours.
  Graph InducedSubgraph(std::span<const VertexId> keep,
                        std::vector<VertexId>* to_original = nullptr) const;

  const std::vector<std::vector<VertexId>>& adjacency() const {
    return adjacency_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  int num_edges_ = 0;
};

// Same as Graph::FromEdges with the arguments swapped.
inline Graph Validate(std::span<const Edge> raw_edges, int n) {
  return Graph::FromEdges(n, raw_edges);
}

}  // namespace matchreg

#endif  // MATCHREG_GRAPH_H_
