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

#ifndef MATCHREG_ENUMERATE_H_
#define MATCHREG_ENUMERATE_H_

#include <cstdint>
#include <vector>

#include "matchreg/graph.h"

namespace matchreg {

inline constexpr int kMaxEnumerationVertices = 10;

// Isomorphism-invariant code of a graph with at most 10 vertices: the
// lexicographically largest upper-triangle adjacency bitstring over the
// labellings produced by colour refinement plus individualisation.
std::uint64_t CanonicalCode(const Graph& g);

// Rebuilds a graph (possibly with isolated vertices, so returned as edges).
std::vector<Edge> EdgesFromCode(int n, std::uint64_t code);

enum class GraphClass {
  kAll,         // isolated vertices allowed
  kNoIsolated,  // every graph without isolated vertices
  kConnected,   // connected with at least one edge
};

// Canonical codes of one representative per isomorphism class on exactly n
// vertices (1 <= n <= 10), ascending. Practical up to n = 8.
std::vector<std::uint64_t> NonIsomorphicCodes(int n, GraphClass cls);

// Same classes as graphs; kAll is rejected with kBadParams because Graph
// cannot hold isolated vertices.
std::vector<Graph> NonIsomorphicGraphs(int n, GraphClass cls);

}  // namespace matchreg

#endif  // MATCHREG_ENUMERATE_H_
