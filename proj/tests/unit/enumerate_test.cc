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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "matchreg/enumerate.h"
#include "matchreg/error.h"
#include "matchreg/generators.h"

namespace matchreg {
namespace {

// Published counts of unlabelled graphs (all / connected) on n vertices.
constexpr int kAllCounts[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
constexpr int kConnectedCounts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};

TEST(Enumerate, CountsMatchKnownSequences) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(NonIsomorphicCodes(n, GraphClass::kAll).size(),
              static_cast<std::size_t>(kAllCounts[n]))
        << n;
    if (n == 1) continue;  // K1 has no edge, so it is not in kConnected.
    EXPECT_EQ(NonIsomorphicCodes(n, GraphClass::kConnected).size(),
              static_cast<std::size_t>(kConnectedCounts[n]))
        << n;
  }
  EXPECT_TRUE(NonIsomorphicCodes(1, GraphClass::kConnected).empty());
}

TEST(Enumerate, NoIsolatedCountsByInclusionExclusion) {
  // Graphs without isolated vertices on n = all(n) - all(n - 1).
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(NonIsomorphicCodes(n, GraphClass::kNoIsolated).size(),
              static_cast<std::size_t>(kAllCounts[n] - kAllCounts[n - 1]));
  }
}

TEST(Enumerate, CodeIsLabelInvariant) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = RandomGnm(9, 14, seed);
    std::vector<VertexId> perm(9);
    for (int i = 0; i < 9; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabelled;
    for (const auto& [u, v] : g.edges()) {
      relabelled.push_back(CanonicalEdge(perm[static_cast<std::size_t>(u)],
                                         perm[static_cast<std::size_t>(v)]));
    }
    EXPECT_EQ(CanonicalCode(g), CanonicalCode(Graph::FromEdges(9, relabelled)));
  }
}

TEST(Enumerate, CodesRebuildDistinctGraphs) {
  const auto codes = NonIsomorphicCodes(6, GraphClass::kConnected);
  std::set<std::uint64_t> seen;
  for (std::uint64_t code : codes) {
    const auto edges = EdgesFromCode(6, code);
    EXPECT_EQ(CanonicalCode(Graph::FromEdges(6, edges)), code);
    seen.insert(code);
  }
  EXPECT_EQ(seen.size(), codes.size());
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
}

TEST(Enumerate, RejectsBadInput) {
  EXPECT_THROW(NonIsomorphicCodes(0, GraphClass::kAll), Error);
  EXPECT_THROW(NonIsomorphicCodes(11, GraphClass::kAll), Error);
  EXPECT_THROW(NonIsomorphicGraphs(4, GraphClass::kAll), Error);
}

}  // namespace
}  // namespace matchreg
