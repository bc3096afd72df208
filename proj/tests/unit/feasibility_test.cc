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
#include <string>

#include "matchreg/enumerate.h"
#include "matchreg/error.h"
#include "matchreg/feasibility.h"
#include "matchreg/game.h"
#include "matchreg/generators.h"
#include "matchreg/reductions.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace matchreg {
namespace {

using testing::M;
using testing::Sol;

TEST(CompatibleMatching, Examples) {
  const Graph p4 = PathGraph(4);
  const CompatibleMatching a = CompatibleMaximumMatching(p4, Sol({{1, 0}}));
  EXPECT_EQ(a.matching, M(p4, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(a.maximum_in_graph);
  const Graph k3 = CycleGraph(3);
  const CompatibleMatching b = CompatibleMaximumMatching(k3, Sol({{1, 0}}));
  EXPECT_EQ(b.matching.size(), 1);
  EXPECT_TRUE(b.matching.contains(0, 1));
  EXPECT_TRUE(b.maximum_in_graph);
  EXPECT_FALSE(IsResidualEdge(Sol({{1, 0}}), 1, 2));
  EXPECT_TRUE(IsResidualEdge(Sol({{1, 0}}), 0, 1));
  const CompatibleMatching c = CompatibleMaximumMatching(p4, {});
  EXPECT_EQ(c.matching.size(), 2);
}

TEST(CompatibleMatching, ContainsMutualPairs) {
  const Graph c6 = CycleGraph(6);
  const CompatibleMatching c =
      CompatibleMaximumMatching(c6, Sol({{1, 2}, {2, 1}}));
  EXPECT_TRUE(c.matching.contains(1, 2));
  EXPECT_EQ(c.matching.size(), 3);
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(IsFeasibleOracle(CycleGraph(5), {}));
  EXPECT_FALSE(IsFeasibleOracle(PathGraph(4), {}));
  for (int k = 1; k <= 6; ++k) EXPECT_TRUE(IsFeasibleOracle(StarGraph(k), {}));
  EXPECT_TRUE(IsFeasibleOracle(PathGraph(4), Sol({{1, 0}})));
}

TEST(Oracle, AgreesWithNaiveOracle) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, GraphClass::kConnected)) {
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Solution sol = testing::RandomSolution(g, seed, 1, 3);
        ASSERT_EQ(IsFeasibleOracle(g, sol),
                  testing::BruteIsFeasible(g, sol.TargetArray(n)));
      }
    }
  }
}

TEST(Configuration, P4EmptyIsLong) {
  const Graph p4 = PathGraph(4);
  const Matching mstar = M(p4, {{0, 1}, {2, 3}});
  const auto c = FindDiminishingConfiguration(p4, {}, mstar);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->kind, ConfigurationKind::kLong);
  EXPECT_EQ(c->path, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(c->at("v1"), 0);
  EXPECT_EQ(c->at("v4"), 3);
  EXPECT_EQ(SocialWelfare(p4, c->rewritten_profile), 2);
  std::string why;
  EXPECT_TRUE(VerifyCertificate(p4, {}, mstar, *c, &why)) << why;
}

TEST(Configuration, AbsentWhenFeasible) {
  const Graph p4 = PathGraph(4);
  EXPECT_FALSE(FindDiminishingConfiguration(p4, Sol({{1, 0}}),
                                            M(p4, {{0, 1}, {2, 3}})));
  const Graph c5 = CycleGraph(5);
  for (const auto& m : testing::AllMatchings(c5)) {
    if (m.size() != 2) continue;
    EXPECT_FALSE(
        FindDiminishingConfiguration(c5, {}, Matching::FromEdges(c5, m)));
  }
}

TEST(Configuration, RejectsBadMatching) {
  const Graph p4 = PathGraph(4);
  try {
    FindDiminishingConfiguration(p4, {}, M(p4, {{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
  EXPECT_THROW(FindDiminishingConfiguration(p4, Sol({{1, 2}}),
                                            M(p4, {{0, 1}, {2, 3}})),
               Error);
}

TEST(Configuration, TamperedCertificateFails) {
  const Graph p4 = PathGraph(4);
  const Matching mstar = M(p4, {{0, 1}, {2, 3}});
  auto c = *FindDiminishingConfiguration(p4, {}, mstar);
  c.rewritten_profile = testing::Prof({1, 0, 3, 2});
  std::string why;
  EXPECT_FALSE(VerifyCertificate(p4, {}, mstar, c, &why));
  EXPECT_FALSE(why.empty());
}

TEST(IsFeasible, Examples) {
  EXPECT_FALSE(IsFeasible(PathGraph(4), {}));
  EXPECT_TRUE(IsFeasible(PathGraph(4), Sol({{1, 0}})));
  EXPECT_TRUE(IsFeasible(CycleGraph(3), {}));
  EXPECT_TRUE(IsFeasible(VcToMfv(CycleGraph(3)), Sol({{0, 3}, {1, 4}})));
  EXPECT_TRUE(IsFeasibleOracle(VcToMfv(CycleGraph(3)), Sol({{0, 3}, {1, 4}})));
}

TEST(IsFeasible, SuboptimalCompatibleMatchingReportsEquilibrium) {
  // The residual graph keeps only (2,3).
  const Graph p4 = PathGraph(4);
  const Solution sol = Sol({{1, 2}, {2, 3}});
  const FeasibilityReport r = CheckFeasibility(p4, sol);
  EXPECT_FALSE(r.feasible);
  EXPECT_FALSE(r.compatible.maximum_in_graph);
  ASSERT_TRUE(r.suboptimal_equilibrium.has_value());
  EXPECT_TRUE(IsStackelbergEquilibrium(p4, *r.suboptimal_equilibrium, sol));
  EXPECT_EQ(SocialWelfare(p4, *r.suboptimal_equilibrium), 2);
  EXPECT_FALSE(IsFeasibleOracle(p4, sol));
}

TEST(IsFeasible, PerfectMatchingFullyForcedIsFeasible) {
  for (int n = 2; n <= 8; n += 2) {
    for (const Graph& g : NonIsomorphicGraphs(n, GraphClass::kConnected)) {
      const Matching m = MaximumMatching(g);
      if (2 * m.size() != n) continue;
      Solution sol;
      for (VertexId v = 0; v < n; ++v) sol.Force(v, m.mate(v));
      ASSERT_TRUE(IsFeasible(g, sol));
    }
  }
}

// Every compatible maximum matching that is maximum in g gives the same
// configuration verdict.
TEST(IsFeasible, MatchingIndependence) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, GraphClass::kConnected)) {
      const auto all = testing::AllMatchings(g);
      const int nu = MatchingNumber(g);
      for (std::uint64_t seed = 0; seed < (n <= 6 ? 6U : 2U); ++seed) {
        const Solution sol = testing::RandomSolution(g, seed * 31 + 1, 1, 4);
        int verdict = -1;
        for (const auto& edges : all) {
          if (static_cast<int>(edges.size()) != nu) continue;
          bool compatible = true;
          for (const auto& [u, v] : edges) {
            if (!IsResidualEdge(sol, u, v)) compatible = false;
          }
          for (const auto& [u, t] : sol.forced()) {
            if (sol.target(t) == u &&
                std::find(edges.begin(), edges.end(), CanonicalEdge(u, t)) ==
                    edges.end()) {
              compatible = false;
            }
          }
          if (!compatible) continue;
          const bool has = FindDiminishingConfiguration(
                               g, sol, Matching::FromEdges(g, edges))
                               .has_value();
          if (verdict == -1) verdict = has;
          ASSERT_EQ(verdict, has) << n;
        }
      }
    }
  }
}

void CheckAgreement(const Graph& g, const Solution& sol) {
  const FeasibilityReport r = CheckFeasibility(g, sol);
  ASSERT_EQ(r.feasible, IsFeasibleOracle(g, sol));
  ASSERT_EQ(r.feasible, IsFeasible(g, sol));
  if (r.configuration) {
    std::string why;
    ASSERT_TRUE(VerifyCertificate(g, sol, r.compatible.matching,
                                  *r.configuration, &why))
        << why;
  }
}

TEST(IsFeasible, AgreesWithOracleOnSmallGraphs) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : NonIsomorphicGraphs(n, GraphClass::kConnected)) {
      CheckAgreement(g, {});
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId t : g.neighbors(u)) CheckAgreement(g, Sol({{u, t}}));
      }
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CheckAgreement(g, testing::RandomSolution(g, seed, 1, 3));
      }
    }
  }
}

TEST(IsFeasible, AgreesWithOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const int n = 7 + static_cast<int>(seed % 3);
    const Graph g = RandomConnected(n, n - 1 + static_cast<int>(seed % 6), seed);
    CheckAgreement(g, testing::RandomSolution(g, seed, 1, 1 + seed % 4));
  }
}

TEST(FeasibilityChecker, MatchesFreeFunction) {
  const Graph g = testing::Petersen();
  const FeasibilityChecker checker(g);
  EXPECT_EQ(checker.matching_number(), 5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Solution sol = testing::RandomSolution(g, seed, 1, 2);
    EXPECT_EQ(checker.IsFeasible(sol), IsFeasible(g, sol));
  }
}

}  // namespace
}  // namespace matchreg
