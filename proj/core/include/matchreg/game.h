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

#ifndef MATCHREG_GAME_H_
#define MATCHREG_GAME_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "matchreg/graph.h"
#include "matchreg/matching.h"
#include "matchreg/strategy.h"

namespace matchreg {

// Mutual-choice edges of s.
Matching InducedMatching(const Graph& g, const StrategyProfile& s);

// 1 iff i is matched under s.
int Utility(const Graph& g, const StrategyProfile& s, VertexId i);
// Number of matched vertices, 2 * |InducedMatching|.
int SocialWelfare(const Graph& g, const StrategyProfile& s);

// Forced vertices play T and no unforced unmatched vertex has a neighbour
// pointing at it.
bool IsStackelbergEquilibrium(const Graph& g, const StrategyProfile& s,
                              const Solution& sol);
bool IsNashEquilibrium(const Graph& g, const StrategyProfile& s);

struct Schedule {
  enum class Kind { kRoundRobin, kRandom };
  Kind kind = Kind::kRoundRobin;
  std::uint64_t seed = 0;

  static Schedule RoundRobin() { return {}; }
  static Schedule Random(std::uint64_t seed) { return {Kind::kRandom, seed}; }
};

struct EquilibriumReport {
  StrategyProfile profile;
  int welfare = 0;
  Matching matched;
  int rounds = 0;
};

// Sequential best-response rounds. In each round every unforced vertex, in
// schedule order (ascending, or a fresh seeded shuffle per round), switches
// to the lowest-index neighbour pointing at it if it is unmatched and such
// a neighbour exists. Runs until a Stackelberg equilibrium is reached.
// rounds_max < 0 means n. Throws kNonTermination past rounds_max rounds and
// kPreconditionViolated if `initial` is invalid or ignores T.
EquilibriumReport BestResponseDynamics(const Graph& g, const Solution& sol,
                                       const StrategyProfile& initial,
                                       const Schedule& schedule,
                                       int rounds_max = -1);

// MATCHREG_BUDGET if set to a positive integer, else 10^7.
std::uint64_t DefaultEnumerationBudget();

// Product of the degrees of the unforced vertices, saturating at UINT64_MAX.
std::uint64_t ProfileSpaceSize(const Graph& g, const Solution& sol);

// Calls visit on every Stackelberg equilibrium compatible with sol, in
// lexicographic order, until visit returns false. Throws kBudgetExceeded if
// ProfileSpaceSize exceeds budget.
void ForEachEquilibrium(
    const Graph& g, const Solution& sol, std::uint64_t budget,
    const std::function<bool(const StrategyProfile&)>& visit);

std::vector<StrategyProfile> EnumerateEquilibria(const Graph& g,
                                                 const Solution& sol,
                                                 std::uint64_t budget);

// No coalition of at most k unforced players has a joint deviation under
// which every member strictly gains. Exhaustive; throws kBudgetExceeded when
// the number of joint deviations to inspect exceeds budget.
bool IsKStrongEquilibrium(const Graph& g, const StrategyProfile& s,
                          const Solution& sol, int k,
                          std::uint64_t budget = DefaultEnumerationBudget());

// Minimum welfare over all compatible Stackelberg equilibria.
int WorstEquilibriumWelfare(const Graph& g, const Solution& sol,
                            std::uint64_t budget);

}  // namespace matchreg

#endif  // MATCHREG_GAME_H_
