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

#ifndef MATCHREG_LEAVES_H_
#define MATCHREG_LEAVES_H_

#include <map>
#include <vector>

#include "matchreg/graph.h"
#include "matchreg/strategy.h"

namespace matchreg {

// Degree-one vertices, ascending.
std::vector<VertexId> Leaves(const Graph& g);

// True iff no two leaves are attached to the same vertex.
bool HasDistinctLeafNeighbours(const Graph& g);

struct LeafReduction {
  Graph reduced;
  // Original id of every reduced vertex.
  std::vector<VertexId> to_original;
  // Removed leaf -> kept sibling leaf, both as original ids.
  std::map<VertexId, VertexId> removed_leaves;

  // Maps a solution on `reduced` back to original ids.
  Solution Lift(const Solution& reduced_solution) const;
};

// Keeps only the lowest-index leaf at every attachment vertex.
LeafReduction DedupLeaves(const Graph& g);

}  // namespace matchreg

#endif  // MATCHREG_LEAVES_H_
