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

#ifndef MATCHREG_MATCHING_H_
#define MATCHREG_MATCHING_H_

#include <optional>
#include <span>
#include <vector>

#include "matchreg/graph.h"

namespace matchreg {

// A set of vertex-disjoint edges, stored as a mate array.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : mate_(static_cast<std::size_t>(n), kNoVertex) {}

  // Throws kPreconditionViolated if an edge is missing from g or two edges
  // share an endpoint.
  static Matching FromEdges(const Graph& g, std::span<const Edge> edges);
  // Throws kPreconditionViolated if the mate array is not symmetric or uses
  // non-edges.
  static Matching FromMates(const Graph& g, std::vector<VertexId> mates);

  int num_vertices() const { return static_cast<int>(mate_.size()); }
  int size() const { return size_; }
  VertexId mate(VertexId v) const { return mate_[static_cast<std::size_t>(v)]; }
  bool is_matched(VertexId v) const { return mate(v) != kNoVertex; }
  bool contains(VertexId u, VertexId v) const {
    return u >= 0 && u < num_vertices() && mate(u) == v && v != kNoVertex;
  }

  // Caller guarantees u and v are currently unmatched.
  void Add(VertexId u, VertexId v);
  // Caller guarantees (u, v) is in the matching.
  void Remove(VertexId u, VertexId v);

  // Sorted, each edge as (u, v) with u < v.
  std::vector<Edge> edges() const;
  const std::vector<VertexId>& mates() const { return mate_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<VertexId> mate_;
  int size_ = 0;
};

// Maximum-cardinality matching (Edmonds' blossom algorithm). The search
// starts from the greedy ascending matching and explores roots and
// neighbours in ascending order, so the output is deterministic.
Matching MaximumMatching(const Graph& g);
int MatchingNumber(const Graph& g);

bool IsMaximum(const Graph& g, const Matching& m);

// Maximum matching covering every leaf. Throws kPreconditionViolated if two
// leaves share a neighbour.
Matching LeafSaturatingMaximumMatching(const Graph& g);

enum class DiffKind { kMprimeEnds, kMixed, kMstarEnds, kCycle };
const char* DiffKindName(DiffKind kind);

// One connected component of m1 Δ m2. For paths, `vertices` runs from the
// lower-index endpoint; for cycles it starts at the smallest vertex and
// leaves it through its m2 edge, without repeating the start.
// kMprimeEnds: both end edges from m1; kMstarEnds: both from m2.
struct DiffComponent {
  DiffKind kind;
  std::vector<VertexId> vertices;

  friend bool operator==(const DiffComponent&, const DiffComponent&) = default;
};

// Components ordered by their smallest vertex.
std::vector<DiffComponent> SymmetricDifference(const Matching& m1,
                                               const Matching& m2);

// Searches a simple path a, a', ..., b', b where (a, a') = first_edge and
// (b', b) = last_edge are edges of m, edges alternate between m and E \ m,
// and no interior vertex (a' and b' included) is in `excluded`.
// Throws kBadEndEdge if an end edge is not an m edge at the right endpoint.
bool AlternatingPathExists(const Graph& g, const Matching& m, VertexId a,
                           VertexId b, Edge first_edge, Edge last_edge,
                           std::span<const VertexId> excluded);
// Same search, returning the path itself.
std::optional<std::vector<VertexId>> FindAlternatingPath(
    const Graph& g, const Matching& m, VertexId a, VertexId b,
    Edge first_edge, Edge last_edge, std::span<const VertexId> excluded);

namespace detail {

// Blossom algorithm on a raw adjacency structure (isolated vertices
// allowed), extending `mates` which must be a valid matching.
std::vector<VertexId> MaxMatchingMates(
    const std::vector<std::vector<VertexId>>& adj,
    std::vector<VertexId> mates);

// Greedy ascending maximal matching on a raw adjacency structure.
std::vector<VertexId> GreedyMates(const std::vector<std::vector<VertexId>>& adj);

}  // namespace detail

}  // namespace matchreg

#endif  // MATCHREG_MATCHING_H_
