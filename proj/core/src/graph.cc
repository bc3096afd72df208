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

#include "matchreg/graph.h"

#include <algorithm>
#include <string>

#include "matchreg/error.h"

namespace matchreg {

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  if (n < 0) Fail(ErrorCode::kBadParams, "negative vertex count");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      Fail(ErrorCode::kIndexOutOfRange,
           "edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      Fail(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& list = g.adjacency_[static_cast<std::size_t>(v)];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      Fail(ErrorCode::kDuplicateEdge, "duplicate edge (" +
                                          std::to_string(std::min(v, *dup)) +
                                          "," +
                                          std::to_string(std::max(v, *dup)) +
                                          ")");
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (g.adjacency_[static_cast<std::size_t>(v)].empty()) {
      Fail(ErrorCode::kIsolatedVertex,
           "vertex " + std::to_string(v) + " has no neighbour");
    }
  }
  g.num_edges_ = static_cast<int>(edges.size());
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= num_vertices()) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> Graph::components() const {
  const int n = num_vertices();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (VertexId w : neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

Graph Graph::InducedSubgraph(std::span<const VertexId> keep,
                             std::vector<VertexId>* to_original) const {
  std::vector<VertexId> order(keep.begin(), keep.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<VertexId> index(static_cast<std::size_t>(num_vertices()),
                              kNoVertex);
  for (std::size_t i = 0; i < order.size(); ++i) {
    index[static_cast<std::size_t>(order[i])] = static_cast<VertexId>(i);
  }
  std::vector<Edge> sub;
  for (VertexId u : order) {
    for (VertexId v : neighbors(u)) {
      if (u < v && index[static_cast<std::size_t>(v)] != kNoVertex) {
        sub.emplace_back(index[static_cast<std::size_t>(u)],
                         index[static_cast<std::size_t>(v)]);
      }
    }
  }
  if (to_original != nullptr) *to_original = order;
  return FromEdges(static_cast<int>(order.size()), sub);
}

}  // namespace matchreg
