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

#include "matchreg/solvers.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>

#include "matchreg/error.h"
#include "matchreg/feasibility.h"
#include "matchreg/leaves.h"

namespace matchreg {

namespace {

std::size_t Ix(VertexId v) { return static_cast<std::size_t>(v); }

bool IsTriangleOrC5(const Graph& g) {
  const int n = g.num_vertices();
  if ((n != 3 && n != 5) || g.num_edges() != n || !g.is_connected()) {
    return false;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// Matching modification step 1 at the first applicable w.
bool ModifyFiveCycle(const Graph& g, Matching& m) {
  for (VertexId w = 0; w < g.num_vertices(); ++w) {
    if (m.is_matched(w) || g.degree(w) != 2) continue;
    const VertexId u1 = g.neighbors(w)[0];
    const VertexId u2 = g.neighbors(w)[1];
    const VertexId v1 = m.mate(u1);
    const VertexId v2 = m.mate(u2);
    if (v1 == kNoVertex || v2 == kNoVertex || v1 == u2) continue;
    if (!g.has_edge(v1, v2)) continue;
    const std::array<VertexId, 5> cycle{w, u1, v1, v2, u2};
    std::size_t skip = 0;
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      const int di = g.degree(cycle[i]);
      const int ds = g.degree(cycle[skip]);
      if (di > ds || (di == ds && cycle[i] < cycle[skip])) skip = i;
    }
    m.Remove(u1, v1);
    m.Remove(u2, v2);
    m.Add(cycle[(skip + 1) % 5], cycle[(skip + 2) % 5]);
    m.Add(cycle[(skip + 3) % 5], cycle[(skip + 4) % 5]);
    return true;
  }
  return false;
}

// Matching modification step 2 at the first applicable w.
bool ModifyTriangle(const Graph& g, Matching& m) {
  for (VertexId w = 0; w < g.num_vertices(); ++w) {
    if (m.is_matched(w) || g.degree(w) != 2) continue;
    const VertexId u1 = g.neighbors(w)[0];
    const VertexId u2 = g.neighbors(w)[1];
    if (m.mate(u1) != u2) continue;
    m.Remove(u1, u2);
    m.Add(g.degree(u1) == 2 ? u1 : u2, w);
    return true;
  }
  return false;
}

class Forcer {
 public:
  Forcer(const Graph& g, const Matching& m) : g_(g), m_(m) {}

  Solution Run() {
    while (Step1()) {
    }
    while (Step2()) {
    }
    while (Step3()) {
    }
    return sol_;
  }

 private:
  bool Free(VertexId v) const { return !sol_.is_forced(v); }
  void Force(VertexId v) { sol_.Force(v, m_.mate(v)); }

  bool Step1() {
    for (VertexId u = 0; u < g_.num_vertices(); ++u) {
      if (!Free(u) || !m_.is_matched(u)) continue;
      for (VertexId v : g_.neighbors(u)) {
        if (v < u || !Free(v) || !m_.is_matched(v) || m_.mate(u) == v) {
          continue;
        }
        Force(u);
        Force(v);
        return true;
      }
    }
    return false;
  }

  bool HasOtherMatchedNeighbour(VertexId u, VertexId mate) const {
    for (VertexId x : g_.neighbors(u)) {
      if (x != mate && m_.is_matched(x)) return true;
    }
    return false;
  }

  bool Step2() {
    for (VertexId u = 0; u < g_.num_vertices(); ++u) {
      const VertexId v = m_.mate(u);
      if (v == kNoVertex || v < u || !Free(u) || !Free(v)) continue;
      if (HasOtherMatchedNeighbour(u, v) && HasOtherMatchedNeighbour(v, u)) {
        Force(u);
        Force(v);
        return true;
      }
    }
    return false;
  }

  bool Step3() {
    for (VertexId w = 0; w < g_.num_vertices(); ++w) {
      if (m_.is_matched(w)) continue;
      for (VertexId u1 : g_.neighbors(w)) {
        const VertexId v1 = m_.mate(u1);
        if (v1 == kNoVertex || !Free(u1) || !Free(v1) || g_.degree(v1) < 2) {
          continue;
        }
        for (VertexId u2 : g_.neighbors(w)) {
          if (u2 == u1 || u2 == v1 || !Free(u2) || !m_.is_matched(u2)) {
            continue;
          }
          Force(u1);
          Force(u2);
          return true;
        }
      }
    }
    return false;
  }

  const Graph& g_;
  const Matching& m_;
  Solution sol_;
};

class ExactSearch {
 public:
  ExactSearch(const Graph& g, const ExactOptions& options,
              const Matching* restricted)
      : g_(g),
        opt_(options),
        m_(restricted),
        checker_(g),
        n_(g.num_vertices()),
        target_(Ix(n_), kNoVertex),
        basis_degree_(Ix(n_), 0) {}

  SolveResult Run() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < n_; ++v) {
      if (m_ == nullptr || !opt_.restrict_to_matched || m_->is_matched(v)) {
        pool.push_back(v);
      }
    }
    std::optional<Solution> found;
    for (int k = 0; k <= static_cast<int>(pool.size()) && !found; ++k) {
      found = ChooseSet(pool, 0, k);
    }
    if (!found) Fail(ErrorCode::kInternalError, "forcing everything failed");
    SolveResult result;
    result.solution = std::move(*found);
    result.feasible = true;
    result.stats = stats_;
    result.stats.time_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return result;
  }

 private:
  bool Exact() const { return m_ == nullptr; }

  void Tick() {
    if (++stats_.nodes > opt_.budget) {
      Fail(ErrorCode::kBudgetExceeded,
           "search exceeded " + std::to_string(opt_.budget) + " nodes");
    }
  }

  std::optional<Solution> ChooseSet(const std::vector<VertexId>& pool,
                                    std::size_t from, int left) {
    if (left == 0) {
      Tick();
      return AssignTargets(0);
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= pool.size();
         ++i) {
      q_.push_back(pool[i]);
      auto found = ChooseSet(pool, i + 1, left - 1);
      q_.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<Solution> AssignTargets(std::size_t i) {
    if (i == q_.size()) {
      Solution sol;
      for (VertexId u : q_) sol.Force(u, target_[Ix(u)]);
      ++stats_.feasibility_checks;
      if (checker_.IsFeasible(sol)) return sol;
      return std::nullopt;
    }
    const VertexId u = q_[i];
    auto attempt = [&](VertexId t) -> std::optional<Solution> {
      Tick();
      const bool good = Exact() && opt_.prune_good;
      int added = 0;
      if (good) {
        added = AddBasisEdge(u, t);
        if (added < 0) return std::nullopt;
      }
      target_[Ix(u)] = t;
      std::optional<Solution> found;
      if (!good || !opt_.prune_extendable || Extendable()) {
        found = AssignTargets(i + 1);
      }
      target_[Ix(u)] = kNoVertex;
      if (added > 0) {
        --basis_degree_[Ix(u)];
        --basis_degree_[Ix(t)];
        --basis_edges_;
      }
      return found;
    };
    if (!Exact() && m_->is_matched(u)) return attempt(m_->mate(u));
    for (VertexId t : g_.neighbors(u)) {
      if (auto found = attempt(t)) return found;
    }
    return std::nullopt;
  }

  // 1 if a new basis edge was added, 0 if (u, t) is already in the basis,
  // -1 if it would share an endpoint with another basis edge.
  int AddBasisEdge(VertexId u, VertexId t) {
    if (target_[Ix(t)] == u) return 0;
    if (basis_degree_[Ix(u)] > 0 || basis_degree_[Ix(t)] > 0) return -1;
    ++basis_degree_[Ix(u)];
    ++basis_degree_[Ix(t)];
    ++basis_edges_;
    return 1;
  }

  // The partial basis lies in some maximum matching.
  bool Extendable() const {
    std::vector<std::vector<VertexId>> adj(Ix(n_));
    for (VertexId v = 0; v < n_; ++v) {
      if (basis_degree_[Ix(v)] > 0) continue;
      for (VertexId w : g_.neighbors(v)) {
        if (basis_degree_[Ix(w)] == 0) adj[Ix(v)].push_back(w);
      }
    }
    const std::vector<VertexId> mates =
        detail::MaxMatchingMates(adj, detail::GreedyMates(adj));
    int twice = 0;
    for (VertexId w : mates) twice += w != kNoVertex ? 1 : 0;
    return twice / 2 + basis_edges_ == checker_.matching_number();
  }

  const Graph& g_;
  ExactOptions opt_;
  const Matching* m_;
  FeasibilityChecker checker_;
  int n_;
  std::vector<VertexId> q_;
  std::vector<VertexId> target_;
  std::vector<int> basis_degree_;
  int basis_edges_ = 0;
  SolveStats stats_;
};

}  // namespace

ApproxTrace ApproxWithTrace(const Graph& g) {
  if (!g.is_connected()) {
    Fail(ErrorCode::kPreconditionViolated, "approx needs a connected graph");
  }
  if (!HasDistinctLeafNeighbours(g)) {
    Fail(ErrorCode::kPreconditionViolated,
         "approx needs distinct leaf neighbours (run DedupLeaves)");
  }
  ApproxTrace trace;
  trace.initial = LeafSaturatingMaximumMatching(g);
  trace.modified = trace.initial;
  if (IsTriangleOrC5(g)) return trace;
  const int cap = 4 * g.num_vertices() + 16;
  int steps = 0;
  while (ModifyFiveCycle(g, trace.modified) ||
         ModifyTriangle(g, trace.modified)) {
    if (++steps > cap) {
      Fail(ErrorCode::kInternalError, "matching modification does not stop");
    }
  }
  trace.solution = Forcer(g, trace.modified).Run();
  return trace;
}

Solution Approx(const Graph& g) { return ApproxWithTrace(g).solution; }

SolveResult Exact(const Graph& g, const ExactOptions& options) {
  return ExactSearch(g, options, nullptr).Run();
}

SolveResult RestrictedExact(const Graph& g, const Matching& m,
                            const ExactOptions& options) {
  if (m.num_vertices() != g.num_vertices()) {
    Fail(ErrorCode::kPreconditionViolated, "matching has wrong vertex count");
  }
  for (const auto& [u, v] : m.edges()) {
    if (!g.has_edge(u, v)) {
      Fail(ErrorCode::kPreconditionViolated, "matching uses a non-edge");
    }
  }
  if (!IsMaximum(g, m)) {
    Fail(ErrorCode::kPreconditionViolated, "matching is not maximum");
  }
  return ExactSearch(g, options, &m).Run();
}

Solution ReduceToGood(const Graph& g, const Solution& sol) {
  if (!IsFeasible(g, sol)) {
    Fail(ErrorCode::kPreconditionViolated, "solution is not feasible");
  }
  FeasibilityChecker checker(g);
  Solution cur = sol;
  while (!cur.IsGood()) {
    VertexId drop = kNoVertex;
    for (const auto& [u, t] : cur.forced()) {
      const VertexId tt = cur.target(t);
      if (tt != kNoVertex && tt != u) {
        drop = u;
        break;
      }
      if (tt == kNoVertex) {
        for (const auto& [w, tw] : cur.forced()) {
          if (w != u && tw == t) {
            drop = u;
            break;
          }
        }
        if (drop != kNoVertex) break;
      }
    }
    if (drop == kNoVertex) {
      Fail(ErrorCode::kInternalError, "basis is not a matching but no pair found");
    }
    cur.Unforce(drop);
    if (!checker.IsFeasible(cur)) {
      Fail(ErrorCode::kInternalError,
           "dropping vertex " + std::to_string(drop) + " broke feasibility");
    }
  }
  return cur;
}

SolveResult Solve(const Graph& g, const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult total;
  for (const auto& comp : g.components()) {
    std::vector<VertexId> to_original;
    const Graph sub = g.InducedSubgraph(comp, &to_original);
    const LeafReduction red = DedupLeaves(sub);
    Solution local;
    auto run_exact = [&](std::uint64_t budget) {
      ExactOptions eo;
      eo.budget = budget;
      SolveResult r = Exact(red.reduced, eo);
      total.stats.nodes += r.stats.nodes;
      total.stats.feasibility_checks += r.stats.feasibility_checks;
      return r.solution;
    };
    switch (options.method) {
      case Method::kApprox:
        local = Approx(red.reduced);
        break;
      case Method::kExact:
        local = run_exact(options.exact_budget);
        break;
      case Method::kAuto:
        try {
          local = run_exact(options.auto_budget);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kBudgetExceeded) throw;
          total.stats.nodes += options.auto_budget;
          total.fallback = true;
          local = Approx(red.reduced);
        }
        break;
    }
    const Solution lifted = red.Lift(local);
    for (const auto& [v, t] : lifted.forced()) {
      total.solution.Force(to_original[Ix(v)], to_original[Ix(t)]);
    }
  }
  ++total.stats.feasibility_checks;
  total.feasible = IsFeasible(g, total.solution);
  total.stats.time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return total;
}

}  // namespace matchreg
