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

#ifndef MATCHREG_FEASIBILITY_H_
#define MATCHREG_FEASIBILITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchreg/game.h"
#include "matchreg/graph.h"
#include "matchreg/matching.h"
#include "matchreg/strategy.h"

namespace matchreg {

// Edges usable by some compatible equilibrium matching: (u, v) such that a
// forced endpoint targets the other one.
bool IsResidualEdge(const Solution& sol, VertexId u, VertexId v);

struct CompatibleMatching {
  Matching matching;
  bool maximum_in_graph = false;
  int graph_matching_number = 0;
};

// Maximum matching of the residual graph that contains every mutually
// forced pair. Its size bounds every compatible equilibrium matching.
CompatibleMatching CompatibleMaximumMatching(const Graph& g,
                                             const Solution& sol);

// True iff m is induced by some Stackelberg equilibrium compatible with sol.
bool IsEquilibriumMatching(const Graph& g, const Solution& sol,
                           const Matching& m);

// Canonical equilibrium inducing m: matched vertices point at their mates,
// forced ones at T, and every other vertex at its lowest valid anchor, or at
// prefs[v] when that is valid. Throws kPreconditionViolated when m is not an
// equilibrium matching.
StrategyProfile ProfileForMatching(const Graph& g, const Solution& sol,
                                   const Matching& m,
                                   const StrategyProfile* prefs = nullptr);

// Exhaustive check: every compatible equilibrium induces a maximum matching.
bool IsFeasibleOracle(const Graph& g, const Solution& sol,
                      std::uint64_t budget = DefaultEnumerationBudget());

enum class ConfigurationKind { kLong, kB, kC, kD, kE, kF, kG, kH };
// "a_long", "b", ..., "h".
const char* ConfigurationKindName(ConfigurationKind kind);

// Local pattern whose rewrite lowers the equilibrium matching by one edge.
//   a_long: alternating path v1..v2r, matched edges (v_{2i-1}, v_{2i});
//           rewriting shifts the path's matching, leaving v1, v2r unmatched.
//   b..f:   matched edge (v1, v2) dropped; v3 / v4 are the vertices v1 / v2
//           then point at. b: v3 = v4. d: v3, v4 matched together.
//           f: v3 forced and unmatched. e: v4 forced and unmatched. c: other.
//   g, h:   v1 has no other anchor; x (unmatched neighbour of v1) is matched
//           to y, whose old mate z is released, and (v1, v2) dropped.
//           g: x also adjacent to v2. h: otherwise, t is v2's anchor.
struct DiminishingConfiguration {
  ConfigurationKind kind = ConfigurationKind::kLong;
  std::vector<std::pair<std::string, VertexId>> bindings;
  // a_long only: v1..v2r.
  std::vector<VertexId> path;
  // Equilibrium inducing the compatible maximum matching.
  StrategyProfile witness_profile;
  // Equilibrium after the rewrite; it matches one edge fewer.
  StrategyProfile rewritten_profile;

  VertexId at(const std::string& name) const;
};

// Smallest configuration in (kind, bindings) order, or nullopt. mstar must
// be compatible with sol and maximum in g (kPreconditionViolated).
std::optional<DiminishingConfiguration> FindDiminishingConfiguration(
    const Graph& g, const Solution& sol, const Matching& mstar);

// Re-derives every invariant of a configuration; on failure returns false
// and fills *why.
bool VerifyCertificate(const Graph& g, const Solution& sol,
                       const Matching& mstar,
                       const DiminishingConfiguration& config,
                       std::string* why = nullptr);

bool IsFeasible(const Graph& g, const Solution& sol);

struct FeasibilityReport {
  bool feasible = false;
  CompatibleMatching compatible;
  // Set when the compatible matching is maximum but a configuration exists.
  std::optional<DiminishingConfiguration> configuration;
  // Set when the compatible matching is not maximum in g: an equilibrium
  // inducing it.
  std::optional<StrategyProfile> suboptimal_equilibrium;
};

FeasibilityReport CheckFeasibility(const Graph& g, const Solution& sol);

// Repeated feasibility queries on one graph; caches the matching number.
class FeasibilityChecker {
 public:
  explicit FeasibilityChecker(const Graph& g);

  bool IsFeasible(const Solution& sol) const;
  int matching_number() const { return nu_; }
  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  int nu_;
};

}  // namespace matchreg

#endif  // MATCHREG_FEASIBILITY_H_
