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

#include "matchreg/matching.h"

#include <algorithm>
#include <queue>
#include <string>

#include "matchreg/error.h"

namespace matchreg {

namespace {

std::size_t Ix(VertexId v) { return static_cast<std::size_t>(v); }

// Edmonds' algorithm, one augmenting-path search per free root.
class Blossom {
 public:
  Blossom(const std::vector<std::vector<VertexId>>& adj,
          std::vector<VertexId> mates)
      : adj_(adj),
        n_(static_cast<int>(adj.size())),
        match_(std::move(mates)),
        parent_(Ix(n_)),
        base_(Ix(n_)),
        used_(Ix(n_)),
        blossom_(Ix(n_)),
        lca_mark_(Ix(n_)) {}

  std::vector<VertexId> Run() {
    for (VertexId root = 0; root < n_; ++root) {
      if (match_[Ix(root)] != kNoVertex || adj_[Ix(root)].empty()) continue;
      VertexId v = FindPath(root);
      while (v != kNoVertex) {
        const VertexId pv = parent_[Ix(v)];
        const VertexId ppv = match_[Ix(pv)];
        match_[Ix(v)] = pv;
        match_[Ix(pv)] = v;
        v = ppv;
      }
    }
    return std::move(match_);
  }

 private:
  VertexId Lca(VertexId a, VertexId b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), false);
    while (true) {
      a = base_[Ix(a)];
      lca_mark_[Ix(a)] = true;
      if (match_[Ix(a)] == kNoVertex) break;
      a = parent_[Ix(match_[Ix(a)])];
    }
    while (true) {
      b = base_[Ix(b)];
      if (lca_mark_[Ix(b)]) return b;
      b = parent_[Ix(match_[Ix(b)])];
    }
  }

  void MarkPath(VertexId v, VertexId b, VertexId child) {
    while (base_[Ix(v)] != b) {
      blossom_[Ix(base_[Ix(v)])] = true;
      blossom_[Ix(base_[Ix(match_[Ix(v)])])] = true;
      parent_[Ix(v)] = child;
      child = match_[Ix(v)];
      v = parent_[Ix(match_[Ix(v)])];
    }
  }

  VertexId FindPath(VertexId root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNoVertex);
    for (VertexId i = 0; i < n_; ++i) base_[Ix(i)] = i;
    used_[Ix(root)] = true;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (VertexId to : adj_[Ix(v)]) {
        if (base_[Ix(v)] == base_[Ix(to)] || match_[Ix(v)] == to) continue;
        if (to == root || (match_[Ix(to)] != kNoVertex &&
                           parent_[Ix(match_[Ix(to)])] != kNoVertex)) {
          const VertexId cur = Lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (blossom_[Ix(base_[Ix(i)])]) {
              base_[Ix(i)] = cur;
              if (!used_[Ix(i)]) {
                used_[Ix(i)] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[Ix(to)] == kNoVertex) {
          parent_[Ix(to)] = v;
          if (match_[Ix(to)] == kNoVertex) return to;
          used_[Ix(match_[Ix(to)])] = true;
          queue.push(match_[Ix(to)]);
        }
      }
    }
    return kNoVertex;
  }

  const std::vector<std::vector<VertexId>>& adj_;
  int n_;
  std::vector<VertexId> match_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<char> lca_mark_;
};

VertexId OtherEnd(Edge e, VertexId v) {
  if (e.first == v) return e.second;
  if (e.second == v) return e.first;
  return kNoVertex;
}

}  // namespace

namespace detail {

std::vector<VertexId> MaxMatchingMates(
    const std::vector<std::vector<VertexId>>& adj,
    std::vector<VertexId> mates) {
  return Blossom(adj, std::move(mates)).Run();
}

std::vector<VertexId> GreedyMates(
    const std::vector<std::vector<VertexId>>& adj) {
  std::vector<VertexId> mates(adj.size(), kNoVertex);
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (mates[u] != kNoVertex) continue;
    for (VertexId v : adj[u]) {
      if (mates[Ix(v)] == kNoVertex && Ix(v) != u) {
        mates[u] = v;
        mates[Ix(v)] = static_cast<VertexId>(u);
        break;
      }
    }
  }
  return mates;
}

}  // namespace detail

Matching Matching::FromEdges(const Graph& g, std::span<const Edge> edges) {
  Matching m(g.num_vertices());
  for (const auto& [u, v] : edges) {
    if (!g.has_edge(u, v)) {
      Fail(ErrorCode::kPreconditionViolated,
           "(" + std::to_string(u) + "," + std::to_string(v) +
               ") is not an edge");
    }
    if (m.is_matched(u) || m.is_matched(v)) {
      Fail(ErrorCode::kPreconditionViolated,
           "edges share an endpoint at (" + std::to_string(u) + "," +
               std::to_string(v) + ")");
    }
    m.Add(u, v);
  }
  return m;
}

Matching Matching::FromMates(const Graph& g, std::vector<VertexId> mates) {
  if (static_cast<int>(mates.size()) != g.num_vertices()) {
    Fail(ErrorCode::kPreconditionViolated, "mate array has wrong length");
  }
  Matching m(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const VertexId v = mates[Ix(u)];
    if (v == kNoVertex) continue;
    if (!g.has_edge(u, v) || mates[Ix(v)] != u) {
      Fail(ErrorCode::kPreconditionViolated,
           "mate array is not a matching at vertex " + std::to_string(u));
    }
    if (u < v) m.Add(u, v);
  }
  return m;
}

void Matching::Add(VertexId u, VertexId v) {
  mate_[Ix(u)] = v;
  mate_[Ix(v)] = u;
  ++size_;
}

void Matching::Remove(VertexId u, VertexId v) {
  mate_[Ix(u)] = kNoVertex;
  mate_[Ix(v)] = kNoVertex;
  --size_;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  out.reserve(Ix(size_));
  for (VertexId u = 0; u < num_vertices(); ++u) {
    if (mate(u) > u) out.emplace_back(u, mate(u));
  }
  return out;
}

Matching MaximumMatching(const Graph& g) {
  std::vector<VertexId> mates = detail::MaxMatchingMates(
      g.adjacency(), detail::GreedyMates(g.adjacency()));
  Matching m(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (mates[Ix(u)] > u) m.Add(u, mates[Ix(u)]);
  }
  return m;
}

int MatchingNumber(const Graph& g) { return MaximumMatching(g).size(); }

bool IsMaximum(const Graph& g, const Matching& m) {
  return m.size() == MatchingNumber(g);
}

Matching LeafSaturatingMaximumMatching(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexId> leaf_at(Ix(n), kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) != 1) continue;
    const VertexId w = g.neighbors(v).front();
    if (g.degree(w) == 1) continue;  // isolated edge: both ends are leaves
    if (leaf_at[Ix(w)] != kNoVertex) {
      Fail(ErrorCode::kPreconditionViolated,
           "leaves " + std::to_string(leaf_at[Ix(w)]) + " and " +
               std::to_string(v) + " share neighbour " + std::to_string(w));
    }
    leaf_at[Ix(w)] = v;
  }
  Matching m = MaximumMatching(g);
  for (VertexId leaf = 0; leaf < n; ++leaf) {
    if (g.degree(leaf) != 1 || m.is_matched(leaf)) continue;
    const VertexId w = g.neighbors(leaf).front();
    const VertexId x = m.mate(w);
    if (x == kNoVertex) {
      Fail(ErrorCode::kInternalError, "maximum matching left an edge free");
    }
    m.Remove(w, x);
    m.Add(w, leaf);
  }
  return m;
}

const char* DiffKindName(DiffKind kind) {
  switch (kind) {
    case DiffKind::kMprimeEnds: return "MprimeEnds";
    case DiffKind::kMixed: return "Mixed";
    case DiffKind::kMstarEnds: return "MstarEnds";
    case DiffKind::kCycle: return "Cycle";
  }
  return "Unknown";
}

std::vector<DiffComponent> SymmetricDifference(const Matching& m1,
                                               const Matching& m2) {
  const int n = std::max(m1.num_vertices(), m2.num_vertices());
  auto mate1 = [&](VertexId v) {
    return v < m1.num_vertices() ? m1.mate(v) : kNoVertex;
  };
  auto mate2 = [&](VertexId v) {
    return v < m2.num_vertices() ? m2.mate(v) : kNoVertex;
  };
  // Edge to the m1 / m2 partner only when the two matchings disagree there.
  auto diff1 = [&](VertexId v) {
    const VertexId w = mate1(v);
    return (w != kNoVertex && mate2(v) != w) ? w : kNoVertex;
  };
  auto diff2 = [&](VertexId v) {
    const VertexId w = mate2(v);
    return (w != kNoVertex && mate1(v) != w) ? w : kNoVertex;
  };
  std::vector<char> seen(Ix(n), false);
  std::vector<DiffComponent> out;
  // Walks from `start` leaving through the m2 edge when `use_m2`.
  auto walk = [&](VertexId start, bool use_m2, std::vector<VertexId>& seq) {
    VertexId cur = start;
    bool m2_next = use_m2;
    while (true) {
      seen[Ix(cur)] = true;
      seq.push_back(cur);
      const VertexId nxt = m2_next ? diff2(cur) : diff1(cur);
      if (nxt == kNoVertex || nxt == start) return nxt == start;
      cur = nxt;
      m2_next = !m2_next;
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    if (seen[Ix(v)]) continue;
    const VertexId e1 = diff1(v);
    const VertexId e2 = diff2(v);
    if (e1 == kNoVertex && e2 == kNoVertex) continue;
    if (e1 != kNoVertex && e2 != kNoVertex) continue;  // interior, visit later
    DiffComponent comp;
    const bool first_m2 = e2 != kNoVertex;
    walk(v, first_m2, comp.vertices);
    const std::size_t edges = comp.vertices.size() - 1;
    const bool last_m2 = (edges % 2 == 1) ? first_m2 : !first_m2;
    if (first_m2 && last_m2) {
      comp.kind = DiffKind::kMstarEnds;
    } else if (!first_m2 && !last_m2) {
      comp.kind = DiffKind::kMprimeEnds;
    } else {
      comp.kind = DiffKind::kMixed;
    }
    if (comp.vertices.back() < comp.vertices.front()) {
      std::reverse(comp.vertices.begin(), comp.vertices.end());
    }
    out.push_back(std::move(comp));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (seen[Ix(v)] || diff1(v) == kNoVertex) continue;
    DiffComponent comp{DiffKind::kCycle, {}};
    walk(v, true, comp.vertices);
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const DiffComponent& x, const DiffComponent& y) {
              return *std::min_element(x.vertices.begin(), x.vertices.end()) <
                     *std::min_element(y.vertices.begin(), y.vertices.end());
            });
  return out;
}

std::optional<std::vector<VertexId>> FindAlternatingPath(
    const Graph& g, const Matching& m, VertexId a, VertexId b,
    Edge first_edge, Edge last_edge, std::span<const VertexId> excluded) {
  const int n = g.num_vertices();
  if (a < 0 || b < 0 || a >= n || b >= n) {
    Fail(ErrorCode::kIndexOutOfRange, "path endpoint out of range");
  }
  if (a == b) Fail(ErrorCode::kPreconditionViolated, "endpoints coincide");
  const VertexId a2 = OtherEnd(first_edge, a);
  const VertexId b2 = OtherEnd(last_edge, b);
  if (a2 == kNoVertex || !m.contains(a, a2)) {
    Fail(ErrorCode::kBadEndEdge, "first edge is not the matching edge at " +
                                     std::to_string(a));
  }
  if (b2 == kNoVertex || !m.contains(b, b2)) {
    Fail(ErrorCode::kBadEndEdge, "last edge is not the matching edge at " +
                                     std::to_string(b));
  }
  if (a2 == b) return std::vector<VertexId>{a, b};

  std::vector<char> banned(Ix(n), false);
  for (VertexId v : excluded) {
    if (v >= 0 && v < n) banned[Ix(v)] = true;
  }
  if (banned[Ix(a2)] || banned[Ix(b2)]) return std::nullopt;

  // Auxiliary graph: a', b' and every intact matched pair. A perfect matching
  // N exists iff the path exists; N Δ m is then the a'-b' path plus cycles.
  std::vector<VertexId> local(Ix(n), kNoVertex);
  std::vector<VertexId> global;
  auto add = [&](VertexId v) {
    local[Ix(v)] = static_cast<VertexId>(global.size());
    global.push_back(v);
  };
  add(a2);
  add(b2);
  for (VertexId v = 0; v < n; ++v) {
    if (v == a || v == b || v == a2 || v == b2 || banned[Ix(v)]) continue;
    const VertexId w = m.mate(v);
    if (w == kNoVertex || w == a || w == b || w == a2 || w == b2 ||
        banned[Ix(w)]) {
      continue;
    }
    add(v);
  }
  const int h = static_cast<int>(global.size());
  std::vector<std::vector<VertexId>> adj(Ix(h));
  std::vector<VertexId> mates(Ix(h), kNoVertex);
  for (VertexId i = 0; i < h; ++i) {
    const VertexId v = global[Ix(i)];
    for (VertexId w : g.neighbors(v)) {
      if (local[Ix(w)] != kNoVertex) adj[Ix(i)].push_back(local[Ix(w)]);
    }
    if (i >= 2) mates[Ix(i)] = local[Ix(m.mate(v))];
  }
  mates = detail::MaxMatchingMates(adj, std::move(mates));
  if (mates[0] == kNoVertex || mates[1] == kNoVertex) return std::nullopt;

  std::vector<VertexId> path{a, a2};
  VertexId cur = 0;
  while (true) {
    const VertexId nxt = mates[Ix(cur)];
    path.push_back(global[Ix(nxt)]);
    if (nxt == 1) break;
    const VertexId partner = local[Ix(m.mate(global[Ix(nxt)]))];
    path.push_back(global[Ix(partner)]);
    cur = partner;
  }
  path.push_back(b);
  return path;
}

bool AlternatingPathExists(const Graph& g, const Matching& m, VertexId a,
                           VertexId b, Edge first_edge, Edge last_edge,
                           std::span<const VertexId> excluded) {
  return FindAlternatingPath(g, m, a, b, first_edge, last_edge, excluded)
      .has_value();
}

}  // namespace matchreg
