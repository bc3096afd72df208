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

#include "matchreg/enumerate.h"
#include "matchreg/error.h"
#include "matchreg/generators.h"
#include "matchreg/leaves.h"
#include "matchreg/matching.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace matchreg {
namespace {

using testing::G;
using testing::M;

TEST(MaximumMatching, Examples) {
  EXPECT_EQ(MaximumMatching(CycleGraph(5)).size(), 2);
  EXPECT_EQ(MaximumMatching(PoaGadget(3)).size(), 3);
  EXPECT_EQ(MaximumMatching(testing::Petersen()).size(), 5);
  EXPECT_EQ(testing::BruteMatchingNumber(testing::Petersen()), 5);
}

TEST(MaximumMatching, AgreesWithBruteForceOnAllConnectedGraphs) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, GraphClass::kConnected)) {
      const Matching m = MaximumMatching(g);
      ASSERT_EQ(m.size(), testing::BruteMatchingNumber(g));
      ASSERT_FALSE(testing::BruteHasAugmentingPath(g, m.mates()));
    }
  }
}

TEST(MaximumMatching, BergeCertificateOnRandomGraphsUpToTen) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 9 + static_cast<int>(seed % 2);
    const Graph g = RandomGnm(n, n + static_cast<int>(seed % 12), seed);
    EXPECT_FALSE(
        testing::BruteHasAugmentingPath(g, MaximumMatching(g).mates()));
  }
}

TEST(IsMaximum, Examples) {
  const Graph p4 = PathGraph(4);
  EXPECT_FALSE(IsMaximum(p4, M(p4, {{1, 2}})));
  EXPECT_TRUE(IsMaximum(p4, M(p4, {{0, 1}, {2, 3}})));
  const Graph c5 = CycleGraph(5);
  for (const auto& m : testing::AllMatchings(c5)) {
    if (m.size() == 2) {
      EXPECT_TRUE(IsMaximum(c5, Matching::FromEdges(c5, m)));
    }
  }
}

TEST(MatchingType, RejectsInvalid) {
  const Graph p4 = PathGraph(4);
  EXPECT_THROW(M(p4, {{0, 2}}), Error);
  EXPECT_THROW(M(p4, {{0, 1}, {1, 2}}), Error);
  EXPECT_THROW(Matching::FromMates(p4, {1, 0, 3, -1}), Error);
}

TEST(LeafSaturating, Examples) {
  const Graph p4 = PathGraph(4);
  EXPECT_EQ(LeafSaturatingMaximumMatching(p4), M(p4, {{0, 1}, {2, 3}}));
  const Graph edge = DedupLeaves(StarGraph(2)).reduced;
  EXPECT_EQ(LeafSaturatingMaximumMatching(edge).size(), 1);
  const Graph spider = G(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  const Matching m = LeafSaturatingMaximumMatching(spider);
  EXPECT_EQ(m.size(), testing::BruteMatchingNumber(spider));
  EXPECT_TRUE(m.is_matched(0));
}

TEST(LeafSaturating, RejectsSharedLeaves) {
  try {
    LeafSaturatingMaximumMatching(StarGraph(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
}

TEST(LeafSaturating, MaximumAndSaturatingOnAllEligibleGraphs) {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, GraphClass::kNoIsolated)) {
      if (!HasDistinctLeafNeighbours(g)) continue;
      const Matching m = LeafSaturatingMaximumMatching(g);
      ASSERT_EQ(m.size(), testing::BruteMatchingNumber(g));
      for (VertexId v : Leaves(g)) ASSERT_TRUE(m.is_matched(v));
    }
  }
}

TEST(SymmetricDifference, Examples) {
  const Graph p4 = PathGraph(4);
  EXPECT_TRUE(SymmetricDifference(M(p4, {{1, 2}}), M(p4, {{1, 2}})).empty());
  const auto d = SymmetricDifference(M(p4, {{1, 2}}), M(p4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0].kind, DiffKind::kMstarEnds);
  EXPECT_EQ(d[0].vertices, (std::vector<VertexId>{0, 1, 2, 3}));
  const Graph c4 = CycleGraph(4);
  const auto c = SymmetricDifference(M(c4, {{0, 1}, {2, 3}}),
                                     M(c4, {{1, 2}, {0, 3}}));
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].kind, DiffKind::kCycle);
  EXPECT_EQ(c[0].vertices.size(), 4U);
}

// Edge counts per component, checked on every pair of matchings of some
// small graphs.
TEST(SymmetricDifference, EdgeCountsMatchKinds) {
  for (const Graph& g : {CycleGraph(6), testing::Petersen(), PoaGadget(3),
                         G(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4},
                               {0, 5}})}) {
    const auto all = testing::AllMatchings(g);
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); j += 2) {
        const Matching m1 = Matching::FromEdges(g, all[i]);
        const Matching m2 = Matching::FromEdges(g, all[j]);
        std::size_t total = 0;
        for (const auto& comp : SymmetricDifference(m1, m2)) {
          const auto& vs = comp.vertices;
          const bool cycle = comp.kind == DiffKind::kCycle;
          const std::size_t edges = cycle ? vs.size() : vs.size() - 1;
          total += edges;
          int in1 = 0;
          int in2 = 0;
          for (std::size_t k = 0; k < edges; ++k) {
            const VertexId a = vs[k];
            const VertexId b = vs[(k + 1) % vs.size()];
            const bool e1 = m1.contains(a, b);
            const bool e2 = m2.contains(a, b);
            ASSERT_NE(e1, e2);
            in1 += e1;
            in2 += e2;
          }
          switch (comp.kind) {
            case DiffKind::kCycle: EXPECT_EQ(in1, in2); break;
            case DiffKind::kMstarEnds: EXPECT_EQ(in2, in1 + 1); break;
            case DiffKind::kMprimeEnds: EXPECT_EQ(in1, in2 + 1); break;
            case DiffKind::kMixed: EXPECT_EQ(in1, in2); break;
          }
        }
        std::size_t expect = 0;
        for (const auto& [a, b] : m1.edges()) expect += !m2.contains(a, b);
        for (const auto& [a, b] : m2.edges()) expect += !m1.contains(a, b);
        EXPECT_EQ(total, expect);
      }
    }
  }
}

TEST(AlternatingPath, Examples) {
  const Graph p6 = PathGraph(6);
  const Matching m = M(p6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(AlternatingPathExists(p6, m, 0, 5, {0, 1}, {5, 4}, {}));
  const std::vector<VertexId> blocked{2};
  EXPECT_FALSE(AlternatingPathExists(p6, m, 0, 5, {0, 1}, {5, 4}, blocked));
  const Graph chord =
      G(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}});
  const Matching mc = M(chord, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(AlternatingPathExists(chord, mc, 0, 5, {0, 1}, {5, 4}, blocked));
  EXPECT_TRUE(testing::BruteAlternatingPath(chord, mc.mates(), 0, 5, blocked));
  const auto path = FindAlternatingPath(chord, mc, 0, 5, {0, 1}, {5, 4},
                                        blocked);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(*path, (std::vector<VertexId>{0, 1, 4, 5}));
}

TEST(AlternatingPath, BadEndEdge) {
  const Graph p6 = PathGraph(6);
  const Matching m = M(p6, {{0, 1}, {2, 3}, {4, 5}});
  try {
    AlternatingPathExists(p6, m, 0, 5, {1, 2}, {5, 4}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadEndEdge);
  }
}

void CheckPathAgreement(const Graph& g, const Matching& m,
                        std::uint64_t salt) {
  const int n = g.num_vertices();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (a == b || !m.is_matched(a) || !m.is_matched(b)) continue;
      std::vector<VertexId> excluded;
      for (VertexId v = 0; v < n; ++v) {
        if (v != a && v != b && ((salt + 7 * v + 3 * a + b) % 5 == 0)) {
          excluded.push_back(v);
        }
      }
      const Edge first{a, m.mate(a)};
      const Edge last{b, m.mate(b)};
      const auto path = FindAlternatingPath(g, m, a, b, first, last, excluded);
      const bool brute =
          testing::BruteAlternatingPath(g, m.mates(), a, b, excluded);
      ASSERT_EQ(path.has_value(), brute) << a << " " << b;
      if (!path) continue;
      const auto& p = *path;
      ASSERT_EQ(p.front(), a);
      ASSERT_EQ(p.back(), b);
      ASSERT_EQ(p.size() % 2, 0U);
      std::vector<char> seen(static_cast<std::size_t>(n), false);
      for (std::size_t k = 0; k < p.size(); ++k) {
        ASSERT_FALSE(seen[static_cast<std::size_t>(p[k])]);
        seen[static_cast<std::size_t>(p[k])] = true;
        if (k + 1 < p.size()) {
          ASSERT_TRUE(g.has_edge(p[k], p[k + 1]));
          ASSERT_EQ(m.contains(p[k], p[k + 1]), k % 2 == 0);
        }
        if (k > 0 && k + 1 < p.size()) {
          ASSERT_EQ(std::count(excluded.begin(), excluded.end(), p[k]), 0);
        }
      }
    }
  }
}

TEST(AlternatingPath, AgreesWithEnumerationOracleUpToSevenVertices) {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, GraphClass::kConnected)) {
      CheckPathAgreement(g, MaximumMatching(g), static_cast<std::uint64_t>(n));
    }
  }
}

TEST(AlternatingPath, AgreesWithEnumerationOracleOnRandomNineVertexGraphs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = RandomConnected(
        8 + static_cast<int>(seed % 2), 9 + static_cast<int>(seed % 9), seed);
    CheckPathAgreement(g, MaximumMatching(g), seed);
  }
}

}  // namespace
}  // namespace matchreg
