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

#include <vector>

#include "matchreg/error.h"
#include "matchreg/generators.h"
#include "matchreg/graph.h"
#include "matchreg/leaves.h"
#include "support/fixtures.h"

namespace matchreg {
namespace {

using testing::G;

ErrorCode CodeOf(int n, std::vector<Edge> edges) {
  try {
    Validate(edges, n);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInternalError;
}

TEST(Graph, ValidateAcceptsPath) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const Graph g = Validate(edges, 3);
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(g.is_connected());
}

TEST(Graph, ValidateErrors) {
  EXPECT_EQ(CodeOf(1, {{0, 0}}), ErrorCode::kSelfLoop);
  EXPECT_EQ(CodeOf(3, {{0, 1}}), ErrorCode::kIsolatedVertex);
  EXPECT_EQ(CodeOf(2, {{0, 1}, {1, 0}}), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(CodeOf(2, {{0, 2}}), ErrorCode::kIndexOutOfRange);
}

TEST(Graph, IsolatedVertexMessageNamesVertex) {
  try {
    G(3, {{0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
  }
}

TEST(Graph, DisconnectedAcceptedAndSplit) {
  const Graph g = G(5, {{0, 1}, {2, 3}, {3, 4}});
  EXPECT_FALSE(g.is_connected());
  const auto comps = g.components();
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<VertexId>{2, 3, 4}));
}

TEST(Graph, InducedSubgraphRelabels) {
  const Graph g = PathGraph(5);
  std::vector<VertexId> keep{3, 1, 2};
  std::vector<VertexId> to;
  const Graph h = g.InducedSubgraph(keep, &to);
  EXPECT_EQ(to, (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Leaves, Examples) {
  EXPECT_EQ(Leaves(PathGraph(4)), (std::vector<VertexId>{0, 3}));
  EXPECT_TRUE(Leaves(CycleGraph(5)).empty());
  EXPECT_EQ(Leaves(StarGraph(3)), (std::vector<VertexId>{1, 2, 3}));
}

TEST(Leaves, DedupStar) {
  const LeafReduction r = DedupLeaves(StarGraph(3));
  EXPECT_EQ(r.reduced.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(r.to_original, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(r.removed_leaves, (std::map<VertexId, VertexId>{{2, 1}, {3, 1}}));
}

TEST(Leaves, DedupPathUnchanged) {
  const LeafReduction r = DedupLeaves(PathGraph(4));
  EXPECT_EQ(r.reduced, PathGraph(4));
  EXPECT_TRUE(r.removed_leaves.empty());
}

TEST(Leaves, DedupP3) {
  const LeafReduction r = DedupLeaves(PathGraph(3));
  EXPECT_EQ(r.reduced.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(r.to_original, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(r.removed_leaves, (std::map<VertexId, VertexId>{{2, 0}}));
}

TEST(Leaves, DedupIsIdempotentAndRemovesSharedLeaves) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = RandomConnected(9, 9 + static_cast<int>(seed % 4), seed);
    const LeafReduction once = DedupLeaves(g);
    EXPECT_TRUE(HasDistinctLeafNeighbours(once.reduced));
    const LeafReduction twice = DedupLeaves(once.reduced);
    EXPECT_EQ(twice.reduced, once.reduced);
    EXPECT_TRUE(twice.removed_leaves.empty());
  }
}

// 2*delta vertices, 3*(delta-1) + 1 edges, both hubs of degree delta.
TEST(Generators, PoaGadget) {
  const Graph g = PoaGadget(3);
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 7);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.degree(1), 3);
}

TEST(Generators, Families) {
  EXPECT_EQ(PathGraph(4).num_edges(), 3);
  EXPECT_EQ(CycleGraph(5).num_edges(), 5);
  EXPECT_EQ(StarGraph(4).num_vertices(), 5);
  EXPECT_EQ(CompleteGraph(5).num_edges(), 10);
  const std::vector<std::int64_t> params{6, 7, 1};
  EXPECT_EQ(Generate("random_gnm", params), Generate("random_gnm", params));
  EXPECT_EQ(Generate("random_gnm", params).num_edges(), 7);
}

TEST(Generators, BadParams) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternalError;
  };
  EXPECT_EQ(code([] { PathGraph(1); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] { CycleGraph(2); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] { PoaGadget(1); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] { RandomGnm(6, 2, 0); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] { RandomGnm(4, 7, 0); }), ErrorCode::kBadParams);
  EXPECT_EQ(code([] {
              const std::vector<std::int64_t> p{3};
              Generate("wheel", p);
            }),
            ErrorCode::kBadParams);
  EXPECT_EQ(code([] {
              const std::vector<std::int64_t> p{3, 4};
              Generate("path", p);
            }),
            ErrorCode::kBadParams);
}

TEST(Generators, AdjacencySymmetric) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = RandomGnm(12, 20, seed);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      for (VertexId v : g.neighbors(u)) EXPECT_TRUE(g.has_edge(v, u));
    }
    EXPECT_TRUE(RandomConnected(12, 15, seed).is_connected());
  }
}

}  // namespace
}  // namespace matchreg
