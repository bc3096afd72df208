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

#include "matchreg/strategy.h"

#include <algorithm>
#include <string>

#include "matchreg/error.h"

namespace matchreg {

void StrategyProfile::Validate(const Graph& g) const {
  if (size() != g.num_vertices()) {
    Fail(ErrorCode::kPreconditionViolated,
         "profile has " + std::to_string(size()) + " entries, graph has " +
             std::to_string(g.num_vertices()) + " vertices");
  }
  for (VertexId v = 0; v < size(); ++v) {
    const VertexId t = (*this)[v];
    if (t < 0 || t >= g.num_vertices()) {
      Fail(ErrorCode::kIndexOutOfRange,
           "choice of " + std::to_string(v) + " out of range");
    }
    if (!g.has_edge(v, t)) {
      Fail(ErrorCode::kPreconditionViolated,
           "vertex " + std::to_string(v) + " chooses non-neighbour " +
               std::to_string(t));
    }
  }
}

StrategyProfile LowestNeighbourProfile(const Graph& g) {
  std::vector<VertexId> choice(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    choice[static_cast<std::size_t>(v)] = g.neighbors(v).front();
  }
  return StrategyProfile(std::move(choice));
}

void Solution::Validate(const Graph& g) const {
  for (const auto& [v, t] : forced_) {
    if (v < 0 || v >= g.num_vertices() || t < 0 || t >= g.num_vertices()) {
      Fail(ErrorCode::kIndexOutOfRange,
           "forced pair (" + std::to_string(v) + "," + std::to_string(t) +
               ") out of range");
    }
    if (!g.has_edge(v, t)) {
      Fail(ErrorCode::kPreconditionViolated,
           "target " + std::to_string(t) + " of " + std::to_string(v) +
               " is not a neighbour");
    }
  }
}

VertexId Solution::target(VertexId v) const {
  auto it = forced_.find(v);
  return it == forced_.end() ? kNoVertex : it->second;
}

std::vector<VertexId> Solution::forced_vertices() const {
  std::vector<VertexId> out;
  out.reserve(forced_.size());
  for (const auto& [v, t] : forced_) out.push_back(v);
  return out;
}

std::vector<VertexId> Solution::TargetArray(int n) const {
  std::vector<VertexId> out(static_cast<std::size_t>(n), kNoVertex);
  for (const auto& [v, t] : forced_) out[static_cast<std::size_t>(v)] = t;
  return out;
}

std::vector<Edge> Solution::Basis() const {
  std::vector<Edge> out;
  for (const auto& [v, t] : forced_) out.push_back(CanonicalEdge(v, t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Solution::IsGood() const {
  std::vector<VertexId> ends;
  for (const auto& [u, v] : Basis()) {
    ends.push_back(u);
    ends.push_back(v);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool IsCompatible(const StrategyProfile& s, const Solution& sol) {
  for (const auto& [v, t] : sol.forced()) {
    if (v >= s.size() || s[v] != t) return false;
  }
  return true;
}

}  // namespace matchreg
