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

#ifndef MATCHREG_SOLVERS_H_
#define MATCHREG_SOLVERS_H_

#include <cstdint>
#include <string>

#include "matchreg/graph.h"
#include "matchreg/matching.h"
#include "matchreg/strategy.h"

namespace matchreg {

struct SolveStats {
  std::uint64_t nodes = 0;               // search nodes (exact solvers)
  std::uint64_t feasibility_checks = 0;
  double time_ms = 0.0;
};

struct SolveResult {
  Solution solution;
  bool feasible = false;  // re-checked after solving
  SolveStats stats;
  // Set by Solve when some component fell back from exact to approx.
  bool fallback = false;
};

struct ApproxTrace {
  Matching initial;   // leaf-saturating maximum matching
  Matching modified;  // after the two matching modification steps
  Solution solution;
};

// 6-approximation for connected graphs in which no two leaves share a
// neighbour (see DedupLeaves). Triangle and C5 get the empty solution.
// Otherwise: leaf-saturating maximum matching, the two matching
// modification steps, then the three forcing steps. Every loop scans in
// ascending vertex order and restarts after each change.
// Throws kPreconditionViolated on disconnected input or shared leaves.
Solution Approx(const Graph& g);
ApproxTrace ApproxWithTrace(const Graph& g);

inline constexpr std::uint64_t kDefaultExactBudget = 50'000'000;

struct ExactOptions {
  std::uint64_t budget = kDefaultExactBudget;  // search nodes
  // Exact: only targets whose basis stays a matching.
  bool prune_good = true;
  // Exact: only bases contained in some maximum matching.
  bool prune_extendable = true;
  // RestrictedExact: only force vertices covered by the matching.
  bool restrict_to_matched = true;
};

// Minimum feasible solution. Sizes |Q| = 0, 1, ... are tried in turn, forced
// sets in lexicographic order and target maps lexicographically within each,
// so the first hit is the lexicographically smallest optimum.
// Throws kBudgetExceeded.
SolveResult Exact(const Graph& g, const ExactOptions& options = {});

// Minimum feasible solution among those compatible with m (matched forced
// vertices target their mate). m must be maximum (kPreconditionViolated).
SolveResult RestrictedExact(const Graph& g, const Matching& m,
                            const ExactOptions& options = {});

// Drops forced vertices until the basis is a matching. Scans Q ascending for
// the first u with T_u forced elsewhere (T_{T_u} != u) or sharing its target
// with another forced vertex, drops it, and re-checks feasibility.
// Throws kPreconditionViolated if sol is infeasible, kInternalError if a
// drop loses feasibility.
Solution ReduceToGood(const Graph& g, const Solution& sol);

enum class Method { kApprox, kExact, kAuto };

struct SolveOptions {
  Method method = Method::kAuto;
  std::uint64_t exact_budget = kDefaultExactBudget;
  // Per-component node budget before kAuto falls back to approx.
  std::uint64_t auto_budget = 200'000;
};

// Splits g into components, removes duplicate leaves per component, solves
// each reduced component and maps the union back to g's vertex ids.
SolveResult Solve(const Graph& g, const SolveOptions& options = {});

}  // namespace matchreg

#endif  // MATCHREG_SOLVERS_H_
