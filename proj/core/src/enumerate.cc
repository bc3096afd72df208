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

#include "matchreg/enumerate.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_set>

#include "matchreg/error.h"

namespace matchreg {

namespace {

using Masks = std::array<std::uint32_t, kMaxEnumerationVertices>;

struct Canonizer {
  int n;
  const Masks& adj;
  std::uint64_t best = 0;
  bool have_best = false;

  // Equitable refinement; colours are dense ranks in [0, k).
  int Refine(std::vector<int>& colour) const {
    int classes = 1 + *std::max_element(colour.begin(), colour.end());
    while (true) {
      std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.assign(static_cast<std::size_t>(classes) + 1, 0);
        s[0] = colour[static_cast<std::size_t>(v)];
        for (int w = 0; w < n; ++w) {
          if (adj[static_cast<std::size_t>(v)] >> w & 1U) {
            ++s[static_cast<std::size_t>(colour[static_cast<std::size_t>(w)]) + 1];
          }
        }
      }
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
      });
      int rank = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && sig[static_cast<std::size_t>(order[i])] !=
                         sig[static_cast<std::size_t>(order[i - 1])]) {
          ++rank;
        }
        colour[static_cast<std::size_t>(order[i])] = rank;
      }
      if (rank + 1 == classes) return classes;
      classes = rank + 1;
    }
  }

  void Search(std::vector<int> colour) {
    const int classes = Refine(colour);
    if (classes == n) {
      std::vector<int> vertex_at(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        vertex_at[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] = v;
      }
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i) {
        const auto row = adj[static_cast<std::size_t>(vertex_at[static_cast<std::size_t>(i)])];
        for (int j = i + 1; j < n; ++j) {
          code = code << 1 | (row >> vertex_at[static_cast<std::size_t>(j)] & 1U);
        }
      }
      if (!have_best || code > best) {
        best = code;
        have_best = true;
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int c : colour) ++size[static_cast<std::size_t>(c)];
    int cell = -1;
    for (int c = 0; c < classes; ++c) {
      const int s = size[static_cast<std::size_t>(c)];
      if (s > 1 && (cell < 0 || s < size[static_cast<std::size_t>(cell)])) cell = c;
    }
    for (int v = 0; v < n; ++v) {
      if (colour[static_cast<std::size_t>(v)] != cell) continue;
      std::vector<int> next(static_cast<std::size_t>(n));
      for (int u = 0; u < n; ++u) {
        const int c = colour[static_cast<std::size_t>(u)];
        next[static_cast<std::size_t>(u)] = 2 * c + ((c == cell && u != v) ? 1 : 0);
      }
      std::vector<int> ranks(next);
      std::sort(ranks.begin(), ranks.end());
      ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
      for (auto& c : next) {
        c = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), c) - ranks.begin());
      }
      Search(std::move(next));
    }
  }
};

std::uint64_t CodeOf(int n, const Masks& adj) {
  if (n <= 1) return 0;
  Canonizer c{n, adj};
  c.Search(std::vector<int>(static_cast<std::size_t>(n), 0));
  return c.best;
}

Masks MasksFromCode(int n, std::uint64_t code) {
  Masks adj{};
  int bit = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      --bit;
      if (code >> bit & 1U) {
        adj[static_cast<std::size_t>(i)] |= 1U << j;
        adj[static_cast<std::size_t>(j)] |= 1U << i;
      }
    }
  }
  return adj;
}

// Canonical codes of the requested class on exactly n vertices; when
// `connected` is false, graphs with isolated vertices are included.
std::vector<std::uint64_t> Level(int n, bool connected) {
  if (n == 1) return {0};
  std::vector<std::uint64_t> parents = Level(n - 1, connected);
  std::unordered_set<std::uint64_t> seen;
  const std::uint32_t first_subset = connected ? 1U : 0U;
  for (std::uint64_t code : parents) {
    Masks base = MasksFromCode(n - 1, code);
    for (std::uint32_t subset = first_subset; subset < (1U << (n - 1)); ++subset) {
      Masks adj = base;
      adj[static_cast<std::size_t>(n - 1)] = subset;
      for (int v = 0; v < n - 1; ++v) {
        if (subset >> v & 1U) adj[static_cast<std::size_t>(v)] |= 1U << (n - 1);
      }
      seen.insert(CodeOf(n, adj));
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t CanonicalCode(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxEnumerationVertices) {
    Fail(ErrorCode::kBadParams, "canonical code limited to 10 vertices");
  }
  Masks adj{};
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1U << w;
  }
  return CodeOf(n, adj);
}

std::vector<Edge> EdgesFromCode(int n, std::uint64_t code) {
  const Masks adj = MasksFromCode(n, code);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (adj[static_cast<std::size_t>(i)] >> j & 1U) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<std::uint64_t> NonIsomorphicCodes(int n, GraphClass cls) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    Fail(ErrorCode::kBadParams, "enumeration supports 1..10 vertices");
  }
  std::vector<std::uint64_t> codes = Level(n, cls == GraphClass::kConnected);
  if (cls == GraphClass::kAll) return codes;
  std::erase_if(codes, [n](std::uint64_t code) {
    const Masks adj = MasksFromCode(n, code);
    for (int v = 0; v < n; ++v) {
      if (adj[static_cast<std::size_t>(v)] == 0) return true;
    }
    return false;
  });
  return codes;
}

std::vector<Graph> NonIsomorphicGraphs(int n, GraphClass cls) {
  if (cls == GraphClass::kAll) {
    Fail(ErrorCode::kBadParams, "graphs with isolated vertices: use codes");
  }
  std::vector<Graph> out;
  for (std::uint64_t code : NonIsomorphicCodes(n, cls)) {
    out.push_back(Graph::FromEdges(n, EdgesFromCode(n, code)));
  }
  return out;
}

}  // namespace matchreg
