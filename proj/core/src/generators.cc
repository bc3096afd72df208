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

#include "matchreg/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "matchreg/error.h"
#include "rng.h"

namespace matchreg {

namespace {

using internal::Below;

void Require(bool ok, const std::string& what) {
  if (!ok) Fail(ErrorCode::kBadParams, what);
}

// m distinct pairs from the pairs not already in `taken`.
void AddRandomEdges(int n, int m, std::mt19937_64& rng,
                    std::set<Edge>& taken) {
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t want = static_cast<std::int64_t>(taken.size()) + m;
  if (want * 2 <= total) {
    while (static_cast<std::int64_t>(taken.size()) < want) {
      const auto u = static_cast<VertexId>(Below(rng, static_cast<std::uint64_t>(n)));
      const auto v = static_cast<VertexId>(Below(rng, static_cast<std::uint64_t>(n)));
      if (u != v) taken.insert(CanonicalEdge(u, v));
    }
    return;
  }
  std::vector<Edge> pool;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!taken.contains(Edge{u, v})) pool.emplace_back(u, v);
    }
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    const std::size_t j = i + Below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    taken.insert(pool[i]);
  }
}

}  // namespace

Graph PathGraph(int k) {
  Require(k >= 2, "path needs k >= 2");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(k, edges);
}

Graph CycleGraph(int k) {
  Require(k >= 3, "cycle needs k >= 3");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, k - 1);
  return Graph::FromEdges(k, edges);
}

Graph StarGraph(int k) {
  Require(k >= 1, "star needs k >= 1");
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph::FromEdges(k + 1, edges);
}

Graph CompleteGraph(int k) {
  Require(k >= 2, "complete graph needs k >= 2");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < k; ++u) {
    for (VertexId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(k, edges);
}

Graph PoaGadget(int delta) {
  Require(delta >= 2, "poa_gadget needs delta >= 2");
  std::vector<Edge> edges{{0, 1}};
  for (VertexId i = 1; i < delta; ++i) {
    edges.emplace_back(0, 2 * i);
    edges.emplace_back(1, 2 * i + 1);
    edges.emplace_back(2 * i, 2 * i + 1);
  }
  return Graph::FromEdges(2 * delta, edges);
}

Graph RandomGnm(int n, int m, std::uint64_t seed) {
  Require(n >= 2, "random_gnm needs n >= 2");
  Require(m >= (n + 1) / 2, "random_gnm needs m >= ceil(n/2)");
  Require(static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(n) * (n - 1) / 2,
          "random_gnm: too many edges");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::set<Edge> taken;
    AddRandomEdges(n, m, rng, taken);
    std::vector<char> touched(static_cast<std::size_t>(n), false);
    for (const auto& [u, v] : taken) {
      touched[static_cast<std::size_t>(u)] = true;
      touched[static_cast<std::size_t>(v)] = true;
    }
    if (std::all_of(touched.begin(), touched.end(), [](char c) { return c; })) {
      std::vector<Edge> edges(taken.begin(), taken.end());
      return Graph::FromEdges(n, edges);
    }
  }
  Fail(ErrorCode::kBadParams, "random_gnm: no sample without isolated vertices");
}

Graph RandomConnected(int n, int m, std::uint64_t seed) {
  Require(n >= 2, "random_connected needs n >= 2");
  Require(m >= n - 1, "random_connected needs m >= n-1");
  Require(static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(n) * (n - 1) / 2,
          "random_connected: too many edges");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  internal::Shuffle(label, rng);
  std::set<Edge> taken;
  for (VertexId v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(Below(rng, static_cast<std::uint64_t>(v)));
    taken.insert(CanonicalEdge(label[static_cast<std::size_t>(u)],
                               label[static_cast<std::size_t>(v)]));
  }
  AddRandomEdges(n, m - (n - 1), rng, taken);
  std::vector<Edge> edges(taken.begin(), taken.end());
  return Graph::FromEdges(n, edges);
}

Graph Generate(std::string_view family, std::span<const std::int64_t> params) {
  auto arity = [&](std::size_t k) {
    Require(params.size() == k, std::string(family) + " takes " +
                                    std::to_string(k) + " parameter(s)");
  };
  auto small = [&](std::size_t i) {
    Require(params[i] >= 0 && params[i] <= 1'000'000,
            std::string(family) + ": parameter out of range");
    return static_cast<int>(params[i]);
  };
  if (family == "path") { arity(1); return PathGraph(small(0)); }
  if (family == "cycle") { arity(1); return CycleGraph(small(0)); }
  if (family == "star") { arity(1); return StarGraph(small(0)); }
  if (family == "complete") { arity(1); return CompleteGraph(small(0)); }
  if (family == "poa_gadget") { arity(1); return PoaGadget(small(0)); }
  if (family == "random_gnm" || family == "random_connected") {
    arity(3);
    Require(params[2] >= 0, "seed must be non-negative");
    const auto seed = static_cast<std::uint64_t>(params[2]);
    return family == "random_gnm" ? RandomGnm(small(0), small(1), seed)
                                  : RandomConnected(small(0), small(1), seed);
  }
  Fail(ErrorCode::kBadParams, "unknown family '" + std::string(family) + "'");
}

}  // namespace matchreg
