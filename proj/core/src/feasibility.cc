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

#include "matchreg/feasibility.h"

#include <algorithm>
#include <set>

#include "matchreg/error.h"

namespace matchreg {

namespace {

std::size_t Ix(VertexId v) { return static_cast<std::size_t>(v); }

struct Context {
  Context(const Graph& graph, const Solution& sol)
      : g(graph),
        n(graph.num_vertices()),
        target(sol.TargetArray(graph.num_vertices())),
        targeted(Ix(n), 0) {
    for (const auto& [u, t] : sol.forced()) ++targeted[Ix(t)];
  }

  bool forced(VertexId v) const { return target[Ix(v)] != kNoVertex; }
  bool residual(VertexId u, VertexId v) const {
    return (!forced(u) || target[Ix(u)] == v) &&
           (!forced(v) || target[Ix(v)] == u);
  }

  const Graph& g;
  int n;
  std::vector<VertexId> target;
  std::vector<int> targeted;
};

using Mates = std::vector<VertexId>;

bool ValidAnchor(const Context& c, const Mates& mate, VertexId y) {
  return mate[Ix(y)] != kNoVertex || c.forced(y);
}

VertexId LowestAnchor(const Context& c, const Mates& mate, VertexId v) {
  for (VertexId y : c.g.neighbors(v)) {
    if (ValidAnchor(c, mate, y)) return y;
  }
  return kNoVertex;
}

// Exact test for "some compatible equilibrium induces mate".
bool EquilibriumMates(const Context& c, const Mates& mate) {
  for (VertexId v = 0; v < c.n; ++v) {
    const VertexId w = mate[Ix(v)];
    if (w != kNoVertex) {
      if (c.forced(v) && c.target[Ix(v)] != w) return false;
      continue;
    }
    if (c.forced(v)) {
      const VertexId t = c.target[Ix(v)];
      if (mate[Ix(t)] != kNoVertex) continue;
      if (c.forced(t) && c.target[Ix(t)] != v) continue;
      return false;
    }
    if (c.targeted[Ix(v)] > 0) return false;
    if (LowestAnchor(c, mate, v) == kNoVertex) return false;
  }
  return true;
}

std::vector<VertexId> ProfileChoices(const Context& c, const Mates& mate,
                                     const StrategyProfile* prefs) {
  std::vector<VertexId> s(Ix(c.n));
  for (VertexId v = 0; v < c.n; ++v) {
    if (mate[Ix(v)] != kNoVertex) {
      s[Ix(v)] = mate[Ix(v)];
    } else if (c.forced(v)) {
      s[Ix(v)] = c.target[Ix(v)];
    } else if (prefs != nullptr && c.g.has_edge(v, (*prefs)[v]) &&
               ValidAnchor(c, mate, (*prefs)[v])) {
      s[Ix(v)] = (*prefs)[v];
    } else {
      s[Ix(v)] = LowestAnchor(c, mate, v);
    }
  }
  return s;
}

Mates CompatibleMates(const Context& c) {
  std::vector<std::vector<VertexId>> adj(Ix(c.n));
  Mates mates(Ix(c.n), kNoVertex);
  for (VertexId u = 0; u < c.n; ++u) {
    for (VertexId v : c.g.neighbors(u)) {
      if (c.residual(u, v)) adj[Ix(u)].push_back(v);
    }
    const VertexId t = c.target[Ix(u)];
    if (t != kNoVertex && c.target[Ix(t)] == u) mates[Ix(u)] = t;
  }
  for (VertexId u = 0; u < c.n; ++u) {
    if (mates[Ix(u)] != kNoVertex) continue;
    for (VertexId v : adj[Ix(u)]) {
      if (mates[Ix(v)] == kNoVertex) {
        mates[Ix(u)] = v;
        mates[Ix(v)] = u;
        break;
      }
    }
  }
  return detail::MaxMatchingMates(adj, std::move(mates));
}

int CountEdges(const Mates& mates) {
  int twice = 0;
  for (VertexId w : mates) twice += (w != kNoVertex) ? 1 : 0;
  return twice / 2;
}

struct Candidate {
  ConfigurationKind kind = ConfigurationKind::kLong;
  std::vector<std::pair<std::string, VertexId>> bindings;
  std::vector<VertexId> path;
  Mates rewritten;

  std::vector<VertexId> Key() const {
    std::vector<VertexId> key;
    for (const auto& [name, v] : bindings) key.push_back(v);
    return key;
  }
  bool Before(const Candidate& o) const {
    if (kind != o.kind) return kind < o.kind;
    return Key() < o.Key();
  }
};

class Detector {
 public:
  // With want_smallest false the first configuration found is returned.
  Detector(const Context& c, const Mates& mstar, bool want_smallest)
      : c_(c), mate_(mstar), smallest_(want_smallest) {}

  std::optional<Candidate> Run() {
    if (smallest_) {
      if (auto found = Long()) return found;
      return Local();
    }
    if (auto found = Local()) return found;
    return Long();
  }

 private:
  bool Free(VertexId v) const { return !c_.forced(v); }

  std::optional<Candidate> Long() {
    const int n = c_.n;
    std::vector<char> endpoint(Ix(n), false);
    for (VertexId a = 0; a < n; ++a) {
      const VertexId a2 = mate_[Ix(a)];
      endpoint[Ix(a)] = a2 != kNoVertex && Free(a2) &&
                        (c_.forced(a) || c_.targeted[Ix(a)] == 0);
    }
    // Unmatched free vertices whose only anchors are one or two free
    // vertices: those may not both be released.
    std::vector<char> single(Ix(n), false);
    std::set<Edge> pairs;
    for (VertexId x = 0; x < n; ++x) {
      if (mate_[Ix(x)] != kNoVertex || c_.forced(x) || c_.g.degree(x) > 2) {
        continue;
      }
      const auto nb = c_.g.neighbors(x);
      if (!std::all_of(nb.begin(), nb.end(),
                       [&](VertexId y) { return Free(y); })) {
        continue;
      }
      if (nb.size() == 1) {
        single[Ix(nb[0])] = true;
      } else {
        pairs.insert(CanonicalEdge(nb[0], nb[1]));
      }
    }
    std::vector<VertexId> excluded;
    for (VertexId v = 0; v < n; ++v) {
      if (c_.forced(v)) excluded.push_back(v);
    }
    std::optional<Matching> mstar;
    for (VertexId a = 0; a < n; ++a) {
      if (!endpoint[Ix(a)] || single[Ix(a)]) continue;
      for (VertexId b = a + 1; b < n; ++b) {
        if (!endpoint[Ix(b)] || single[Ix(b)] || mate_[Ix(a)] == b ||
            pairs.contains(Edge{a, b})) {
          continue;
        }
        if (!mstar) mstar = Matching::FromMates(c_.g, mate_);
        auto path = FindAlternatingPath(c_.g, *mstar, a, b,
                                        Edge{a, mate_[Ix(a)]},
                                        Edge{b, mate_[Ix(b)]}, excluded);
        if (!path) continue;
        Candidate cand;
        cand.kind = ConfigurationKind::kLong;
        cand.path = *path;
        cand.rewritten = mate_;
        for (VertexId v : cand.path) cand.rewritten[Ix(v)] = kNoVertex;
        for (std::size_t i = 1; i + 2 < cand.path.size(); i += 2) {
          cand.rewritten[Ix(cand.path[i])] = cand.path[i + 1];
          cand.rewritten[Ix(cand.path[i + 1])] = cand.path[i];
        }
        for (std::size_t i = 0; i < cand.path.size(); ++i) {
          cand.bindings.emplace_back("v" + std::to_string(i + 1), cand.path[i]);
        }
        if (!EquilibriumMates(c_, cand.rewritten)) {
          Fail(ErrorCode::kInternalError,
               "long configuration rewrite is not an equilibrium");
        }
        return cand;
      }
    }
    return std::nullopt;
  }

  // Short (b..f) and average (g, h) configurations.
  std::optional<Candidate> Local() {
    std::optional<Candidate> best;
    auto offer = [&](Candidate cand) {
      if (!best || cand.Before(*best)) best = std::move(cand);
      return !smallest_;
    };
    for (VertexId v1 = 0; v1 < c_.n; ++v1) {
      const VertexId v2 = mate_[Ix(v1)];
      if (v2 == kNoVertex || !Free(v1) || !Free(v2)) continue;
      Mates without = mate_;
      without[Ix(v1)] = kNoVertex;
      without[Ix(v2)] = kNoVertex;
      if (EquilibriumMates(c_, without)) {
        const VertexId v3 = LowestAnchor(c_, without, v1);
        const VertexId v4 = LowestAnchor(c_, without, v2);
        Candidate cand;
        cand.kind = ShortKind(v3, v4);
        cand.bindings = {{"v1", v1}, {"v2", v2}, {"v3", v3}, {"v4", v4}};
        cand.rewritten = std::move(without);
        if (offer(std::move(cand))) return best;
        continue;
      }
      if (LowestAnchor(c_, without, v1) != kNoVertex) continue;
      for (VertexId x : c_.g.neighbors(v1)) {
        if (x == v2) continue;
        for (VertexId y : c_.g.neighbors(x)) {
          if (y == v1 || y == v2 || !Free(y) || mate_[Ix(y)] == kNoVertex) {
            continue;
          }
          const VertexId z = mate_[Ix(y)];
          Mates moved = without;
          moved[Ix(z)] = kNoVertex;
          moved[Ix(x)] = y;
          moved[Ix(y)] = x;
          if (!EquilibriumMates(c_, moved)) continue;
          Candidate cand;
          cand.bindings = {{"v1", v1}, {"v2", v2}, {"x", x}, {"y", y}, {"z", z}};
          if (c_.g.has_edge(x, v2)) {
            cand.kind = ConfigurationKind::kG;
          } else {
            cand.kind = ConfigurationKind::kH;
            cand.bindings.emplace_back("t", LowestAnchor(c_, moved, v2));
          }
          cand.rewritten = std::move(moved);
          if (offer(std::move(cand))) return best;
        }
      }
    }
    return best;
  }

  ConfigurationKind ShortKind(VertexId v3, VertexId v4) const {
    if (v3 == v4) return ConfigurationKind::kB;
    if (mate_[Ix(v3)] == v4) return ConfigurationKind::kD;
    if (c_.forced(v3) && mate_[Ix(v3)] == kNoVertex) {
      return ConfigurationKind::kF;
    }
    if (c_.forced(v4) && mate_[Ix(v4)] == kNoVertex) {
      return ConfigurationKind::kE;
    }
    return ConfigurationKind::kC;
  }

  const Context& c_;
  const Mates& mate_;
  bool smallest_;
};

void CheckStandingAssumption(const Context& c, const Matching& mstar) {
  if (mstar.num_vertices() != c.n) {
    Fail(ErrorCode::kPreconditionViolated, "matching has wrong vertex count");
  }
  for (const auto& [u, v] : mstar.edges()) {
    if (!c.g.has_edge(u, v)) {
      Fail(ErrorCode::kPreconditionViolated, "matching uses a non-edge");
    }
    if (!c.residual(u, v)) {
      Fail(ErrorCode::kPreconditionViolated,
           "matching is not compatible with the solution at (" +
               std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
  if (!IsMaximum(c.g, mstar)) {
    Fail(ErrorCode::kPreconditionViolated, "matching is not maximum");
  }
}

DiminishingConfiguration Materialize(const Context& c, const Matching& mstar,
                                     Candidate cand) {
  DiminishingConfiguration out;
  out.kind = cand.kind;
  out.bindings = std::move(cand.bindings);
  out.path = std::move(cand.path);
  out.rewritten_profile =
      StrategyProfile(ProfileChoices(c, cand.rewritten, nullptr));
  out.witness_profile =
      StrategyProfile(ProfileChoices(c, mstar.mates(), &out.rewritten_profile));
  return out;
}

std::optional<Candidate> Detect(const Context& c, const Mates& mstar,
                                bool smallest) {
  return Detector(c, mstar, smallest).Run();
}

}  // namespace

bool IsResidualEdge(const Solution& sol, VertexId u, VertexId v) {
  const VertexId tu = sol.target(u);
  const VertexId tv = sol.target(v);
  return (tu == kNoVertex || tu == v) && (tv == kNoVertex || tv == u);
}

CompatibleMatching CompatibleMaximumMatching(const Graph& g,
                                             const Solution& sol) {
  sol.Validate(g);
  const Context c(g, sol);
  CompatibleMatching out;
  out.matching = Matching::FromMates(g, CompatibleMates(c));
  out.graph_matching_number = MatchingNumber(g);
  out.maximum_in_graph = out.matching.size() == out.graph_matching_number;
  return out;
}

bool IsEquilibriumMatching(const Graph& g, const Solution& sol,
                           const Matching& m) {
  sol.Validate(g);
  if (m.num_vertices() != g.num_vertices()) return false;
  for (const auto& [u, v] : m.edges()) {
    if (!g.has_edge(u, v)) return false;
  }
  return EquilibriumMates(Context(g, sol), m.mates());
}

StrategyProfile ProfileForMatching(const Graph& g, const Solution& sol,
                                   const Matching& m,
                                   const StrategyProfile* prefs) {
  if (!IsEquilibriumMatching(g, sol, m)) {
    Fail(ErrorCode::kPreconditionViolated,
         "matching is not induced by any compatible equilibrium");
  }
  if (prefs != nullptr && prefs->size() != g.num_vertices()) prefs = nullptr;
  return StrategyProfile(ProfileChoices(Context(g, sol), m.mates(), prefs));
}

bool IsFeasibleOracle(const Graph& g, const Solution& sol,
                      std::uint64_t budget) {
  const int optimum = 2 * MatchingNumber(g);
  bool feasible = true;
  ForEachEquilibrium(g, sol, budget, [&](const StrategyProfile& s) {
    if (SocialWelfare(g, s) < optimum) feasible = false;
    return feasible;
  });
  return feasible;
}

const char* ConfigurationKindName(ConfigurationKind kind) {
  switch (kind) {
    case ConfigurationKind::kLong: return "a_long";
    case ConfigurationKind::kB: return "b";
    case ConfigurationKind::kC: return "c";
    case ConfigurationKind::kD: return "d";
    case ConfigurationKind::kE: return "e";
    case ConfigurationKind::kF: return "f";
    case ConfigurationKind::kG: return "g";
    case ConfigurationKind::kH: return "h";
  }
  return "unknown";
}

VertexId DiminishingConfiguration::at(const std::string& name) const {
  for (const auto& [key, v] : bindings) {
    if (key == name) return v;
  }
  return kNoVertex;
}

std::optional<DiminishingConfiguration> FindDiminishingConfiguration(
    const Graph& g, const Solution& sol, const Matching& mstar) {
  sol.Validate(g);
  const Context c(g, sol);
  CheckStandingAssumption(c, mstar);
  auto cand = Detect(c, mstar.mates(), /*smallest=*/true);
  if (!cand) return std::nullopt;
  return Materialize(c, mstar, std::move(*cand));
}

bool VerifyCertificate(const Graph& g, const Solution& sol,
                       const Matching& mstar,
                       const DiminishingConfiguration& config,
                       std::string* why) {
  auto reject = [&](const std::string& reason) {
    if (why != nullptr) *why = reason;
    return false;
  };
  const Context c(g, sol);
  const StrategyProfile& ws = config.witness_profile;
  const StrategyProfile& rs = config.rewritten_profile;
  if (ws.size() != c.n || rs.size() != c.n) return reject("profile size");
  try {
    ws.Validate(g);
    rs.Validate(g);
  } catch (const Error& e) {
    return reject(e.what());
  }
  if (!IsStackelbergEquilibrium(g, ws, sol)) {
    return reject("witness profile is not an equilibrium");
  }
  if (InducedMatching(g, ws) != mstar) {
    return reject("witness profile does not induce the matching");
  }
  if (!IsStackelbergEquilibrium(g, rs, sol)) {
    return reject("rewritten profile is not an equilibrium");
  }
  const Matching after = InducedMatching(g, rs);
  if (after.size() != mstar.size() - 1) {
    return reject("rewrite does not lose exactly one matched edge");
  }
  // Only unforced vertices in `watched` are protected.
  auto no_external_selector = [&](const std::vector<VertexId>& inside,
                                  const std::vector<VertexId>& watched) {
    for (VertexId v = 0; v < c.n; ++v) {
      if (std::find(inside.begin(), inside.end(), v) != inside.end()) continue;
      const VertexId s = ws[v];
      if (!c.forced(s) &&
          std::find(watched.begin(), watched.end(), s) != watched.end()) {
        return false;
      }
    }
    return true;
  };
  Matching expected = mstar;

  if (config.kind == ConfigurationKind::kLong) {
    const auto& p = config.path;
    if (p.size() < 4 || p.size() % 2 != 0) return reject("bad path length");
    std::vector<VertexId> sorted(p);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return reject("path repeats a vertex");
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const bool in_m = mstar.contains(p[i], p[i + 1]);
      if (!g.has_edge(p[i], p[i + 1])) return reject("path uses a non-edge");
      if (in_m != (i % 2 == 0)) return reject("path does not alternate");
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (c.forced(p[i])) return reject("forced interior vertex");
    }
    if (!no_external_selector(p, {p.front(), p.back()})) {
      return reject("external selector of an endpoint");
    }
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
      expected.Remove(p[i], p[i + 1]);
    }
    for (std::size_t i = 1; i + 2 < p.size(); i += 2) {
      expected.Add(p[i], p[i + 1]);
    }
  } else {
    const VertexId v1 = config.at("v1");
    const VertexId v2 = config.at("v2");
    if (v1 == kNoVertex || v2 == kNoVertex || !mstar.contains(v1, v2)) {
      return reject("(v1, v2) is not a matched edge");
    }
    if (c.forced(v1) || c.forced(v2)) return reject("v1 or v2 is forced");
    expected.Remove(v1, v2);
    if (config.kind <= ConfigurationKind::kF) {
      const VertexId v3 = config.at("v3");
      const VertexId v4 = config.at("v4");
      if (v3 == kNoVertex || v4 == kNoVertex || rs[v1] != v3 || rs[v2] != v4) {
        return reject("v3/v4 are not the rewritten choices of v1/v2");
      }
      if (!no_external_selector({v1, v2}, {v1, v2})) {
        return reject("external selector of v1 or v2");
      }
      const bool b = v3 == v4;
      const bool d = !b && mstar.contains(v3, v4);
      const bool f = !b && !d && c.forced(v3) && !mstar.is_matched(v3);
      const bool e = !b && !d && !f && c.forced(v4) && !mstar.is_matched(v4);
      ConfigurationKind kind = ConfigurationKind::kC;
      if (b) kind = ConfigurationKind::kB;
      if (d) kind = ConfigurationKind::kD;
      if (f) kind = ConfigurationKind::kF;
      if (e) kind = ConfigurationKind::kE;
      if (kind != config.kind) return reject("short kind mismatch");
    } else {
      const VertexId x = config.at("x");
      const VertexId y = config.at("y");
      const VertexId z = config.at("z");
      if (x == kNoVertex || y == kNoVertex || z == kNoVertex) {
        return reject("missing x/y/z");
      }
      if (!g.has_edge(v1, x) || mstar.is_matched(x) || c.forced(x)) {
        return reject("x is not an unmatched free neighbour of v1");
      }
      for (VertexId w : g.neighbors(v1)) {
        if (w != v2 && (mstar.is_matched(w) || c.forced(w))) {
          return reject("v1 has another anchor");
        }
      }
      if (!g.has_edge(x, y) || c.forced(y) || !mstar.contains(y, z)) {
        return reject("y/z do not fit");
      }
      if (!no_external_selector({v1, v2, y}, {v1, v2, z})) {
        return reject("external selector of v1, v2 or z");
      }
      const bool triangle = g.has_edge(x, v2);
      if (triangle != (config.kind == ConfigurationKind::kG)) {
        return reject("average kind mismatch");
      }
      if (config.kind == ConfigurationKind::kH && rs[v2] != config.at("t")) {
        return reject("t is not the rewritten choice of v2");
      }
      expected.Remove(y, z);
      expected.Add(x, y);
    }
  }
  if (after != expected) return reject("rewrite induces an unexpected matching");
  return true;
}

bool IsFeasible(const Graph& g, const Solution& sol) {
  sol.Validate(g);
  return FeasibilityChecker(g).IsFeasible(sol);
}

FeasibilityReport CheckFeasibility(const Graph& g, const Solution& sol) {
  FeasibilityReport report;
  report.compatible = CompatibleMaximumMatching(g, sol);
  const Context c(g, sol);
  if (!report.compatible.maximum_in_graph) {
    report.suboptimal_equilibrium = StrategyProfile(
        ProfileChoices(c, report.compatible.matching.mates(), nullptr));
    return report;
  }
  auto cand = Detect(c, report.compatible.matching.mates(), true);
  if (cand) {
    report.configuration =
        Materialize(c, report.compatible.matching, std::move(*cand));
  }
  report.feasible = !report.configuration.has_value();
  return report;
}

FeasibilityChecker::FeasibilityChecker(const Graph& g)
    : g_(g), nu_(MatchingNumber(g)) {}

bool FeasibilityChecker::IsFeasible(const Solution& sol) const {
  const Context c(g_, sol);
  const Mates mstar = CompatibleMates(c);
  if (CountEdges(mstar) != nu_) return false;
  return !Detect(c, mstar, /*smallest=*/false).has_value();
}

}  // namespace matchreg
