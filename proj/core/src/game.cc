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

#include "matchreg/game.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>

#include "matchreg/error.h"
#include "rng.h"

namespace matchreg {

namespace {

std::size_t Ix(VertexId v) { return static_cast<std::size_t>(v); }

bool Matched(const std::vector<VertexId>& s, VertexId v) {
  return s[Ix(s[Ix(v)])] == v;
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

bool EquilibriumOn(const Graph& g, const std::vector<VertexId>& s,
                   const std::vector<VertexId>& target) {
  const int n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (target[Ix(v)] != kNoVertex && s[Ix(v)] != target[Ix(v)]) return false;
  }
  for (VertexId j = 0; j < n; ++j) {
    const VertexId i = s[Ix(j)];
    if (target[Ix(i)] == kNoVertex && s[Ix(i)] != j && !Matched(s, i)) {
      return false;
    }
  }
  return true;
}

// Lexicographic DFS over choices with a vertex's equilibrium condition
// checked as soon as it and all its neighbours are assigned.
class EquilibriumSearch {
 public:
  EquilibriumSearch(const Graph& g, const Solution& sol,
                    const std::function<bool(const StrategyProfile&)>& visit)
      : g_(g),
        n_(g.num_vertices()),
        target_(sol.TargetArray(g.num_vertices())),
        visit_(visit),
        choice_(Ix(n_), kNoVertex),
        check_at_(Ix(n_)) {
    for (VertexId v = 0; v < n_; ++v) {
      VertexId ready = v;
      for (VertexId w : g.neighbors(v)) ready = std::max(ready, w);
      check_at_[Ix(ready)].push_back(v);
    }
  }

  void Run() {
    if (n_ == 0) {
      visit_(StrategyProfile());
      return;
    }
    Assign(0);
  }

 private:
  bool Ok(VertexId w) const {
    if (target_[Ix(w)] != kNoVertex) return true;
    if (choice_[Ix(choice_[Ix(w)])] == w) return true;
    for (VertexId j : g_.neighbors(w)) {
      if (choice_[Ix(j)] == w) return false;
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool Assign(VertexId v) {
    if (v == n_) return visit_(StrategyProfile(choice_));
    auto try_choice = [&](VertexId c) {
      choice_[Ix(v)] = c;
      for (VertexId w : check_at_[Ix(v)]) {
        if (!Ok(w)) return true;
      }
      return Assign(v + 1);
    };
    bool go = true;
    if (target_[Ix(v)] != kNoVertex) {
      go = try_choice(target_[Ix(v)]);
    } else {
      for (VertexId c : g_.neighbors(v)) {
        if (!try_choice(c)) {
          go = false;
          break;
        }
      }
    }
    choice_[Ix(v)] = kNoVertex;
    return go;
  }

  const Graph& g_;
  int n_;
  std::vector<VertexId> target_;
  const std::function<bool(const StrategyProfile&)>& visit_;
  std::vector<VertexId> choice_;
  std::vector<std::vector<VertexId>> check_at_;
};

}  // namespace

Matching InducedMatching(const Graph& g, const StrategyProfile& s) {
  Matching m(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const VertexId v = s[u];
    if (u < v && s[v] == u) m.Add(u, v);
  }
  return m;
}

int Utility(const Graph& g, const StrategyProfile& s, VertexId i) {
  if (i < 0 || i >= g.num_vertices()) {
    Fail(ErrorCode::kIndexOutOfRange, "no vertex " + std::to_string(i));
  }
  return s[s[i]] == i ? 1 : 0;
}

int SocialWelfare(const Graph& g, const StrategyProfile& s) {
  return 2 * InducedMatching(g, s).size();
}

bool IsStackelbergEquilibrium(const Graph& g, const StrategyProfile& s,
                              const Solution& sol) {
  s.Validate(g);
  return EquilibriumOn(g, s.choices(), sol.TargetArray(g.num_vertices()));
}

bool IsNashEquilibrium(const Graph& g, const StrategyProfile& s) {
  return IsStackelbergEquilibrium(g, s, Solution());
}

EquilibriumReport BestResponseDynamics(const Graph& g, const Solution& sol,
                                       const StrategyProfile& initial,
                                       const Schedule& schedule,
                                       int rounds_max) {
  sol.Validate(g);
  initial.Validate(g);
  if (!IsCompatible(initial, sol)) {
    Fail(ErrorCode::kPreconditionViolated,
         "initial profile does not follow the forced targets");
  }
  const int n = g.num_vertices();
  if (rounds_max < 0) rounds_max = n;
  const std::vector<VertexId> target = sol.TargetArray(n);
  std::vector<VertexId> s = initial.choices();
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v) {
    if (target[Ix(v)] == kNoVertex) order.push_back(v);
  }
  std::mt19937_64 rng(schedule.seed);
  int rounds = 0;
  while (!EquilibriumOn(g, s, target)) {
    if (rounds >= rounds_max) {
      Fail(ErrorCode::kNonTermination,
           "no equilibrium after " + std::to_string(rounds_max) + " rounds");
    }
    if (schedule.kind == Schedule::Kind::kRandom) internal::Shuffle(order, rng);
    for (VertexId i : order) {
      if (Matched(s, i)) continue;
      for (VertexId j : g.neighbors(i)) {
        if (s[Ix(j)] == i) {
          s[Ix(i)] = j;
          break;
        }
      }
    }
    ++rounds;
  }
  EquilibriumReport report;
  report.profile = StrategyProfile(std::move(s));
  report.matched = InducedMatching(g, report.profile);
  report.welfare = 2 * report.matched.size();
  report.rounds = rounds;
  return report;
}

std::uint64_t DefaultEnumerationBudget() {
  if (const char* env = std::getenv("MATCHREG_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

std::uint64_t ProfileSpaceSize(const Graph& g, const Solution& sol) {
  std::uint64_t total = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!sol.is_forced(v)) {
      total = SaturatingMul(total, static_cast<std::uint64_t>(g.degree(v)));
    }
  }
  return total;
}

void ForEachEquilibrium(
    const Graph& g, const Solution& sol, std::uint64_t budget,
    const std::function<bool(const StrategyProfile&)>& visit) {
  sol.Validate(g);
  const std::uint64_t space = ProfileSpaceSize(g, sol);
  if (space > budget) {
    Fail(ErrorCode::kBudgetExceeded,
         "profile space " + std::to_string(space) + " exceeds budget " +
             std::to_string(budget));
  }
  EquilibriumSearch(g, sol, visit).Run();
}

std::vector<StrategyProfile> EnumerateEquilibria(const Graph& g,
                                                 const Solution& sol,
                                                 std::uint64_t budget) {
  std::vector<StrategyProfile> out;
  ForEachEquilibrium(g, sol, budget, [&](const StrategyProfile& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool IsKStrongEquilibrium(const Graph& g, const StrategyProfile& s,
                          const Solution& sol, int k, std::uint64_t budget) {
  if (k < 1) Fail(ErrorCode::kBadParams, "k must be at least 1");
  sol.Validate(g);
  if (!IsStackelbergEquilibrium(g, s, sol)) return false;
  // Only unmatched unforced players can strictly gain.
  std::vector<VertexId> cand;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!sol.is_forced(v) && s[s[v]] != v) cand.push_back(v);
  }
  std::vector<VertexId> work = s.choices();
  std::vector<VertexId> members;
  std::uint64_t spent = 0;

  // Tries every joint choice of the members; true if one makes all matched.
  std::function<bool(std::size_t)> deviate = [&](std::size_t idx) -> bool {
    if (idx == members.size()) {
      if (++spent > budget) {
        Fail(ErrorCode::kBudgetExceeded, "coalition search exceeds budget");
      }
      for (VertexId m : members) {
        if (work[Ix(work[Ix(m)])] != m) return false;
      }
      return true;
    }
    const VertexId v = members[idx];
    for (VertexId c : g.neighbors(v)) {
      work[Ix(v)] = c;
      if (deviate(idx + 1)) return true;
    }
    work[Ix(v)] = s[v];
    return false;
  };
  std::function<bool(std::size_t)> choose = [&](std::size_t start) -> bool {
    if (!members.empty() && deviate(0)) return true;
    if (static_cast<int>(members.size()) == k) return false;
    for (std::size_t i = start; i < cand.size(); ++i) {
      members.push_back(cand[i]);
      const bool found = choose(i + 1);
      members.pop_back();
      if (found) return true;
    }
    return false;
  };
  return !choose(0);
}

int WorstEquilibriumWelfare(const Graph& g, const Solution& sol,
                            std::uint64_t budget) {
  int worst = std::numeric_limits<int>::max();
  ForEachEquilibrium(g, sol, budget, [&](const StrategyProfile& s) {
    worst = std::min(worst, SocialWelfare(g, s));
    return worst > 0;
  });
  if (worst == std::numeric_limits<int>::max()) {
    Fail(ErrorCode::kInternalError, "no equilibrium found");
  }
  return worst;
}

}  // namespace matchreg
