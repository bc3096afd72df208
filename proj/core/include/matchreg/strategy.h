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

#ifndef MATCHREG_STRATEGY_H_
#define MATCHREG_STRATEGY_H_

#include <map>
#include <span>
#include <vector>

#include "matchreg/graph.h"

namespace matchreg {

// A pure strategy profile: choice[i] is the neighbour vertex i points at.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<VertexId> choice)
      : choice_(std::move(choice)) {}

  // Throws kIndexOutOfRange / kPreconditionViolated when some choice is not a
  // neighbour or the length differs from n.
  void Validate(const Graph& g) const;

  int size() const { return static_cast<int>(choice_.size()); }
  VertexId operator[](VertexId v) const {
    return choice_[static_cast<std::size_t>(v)];
  }
  void set(VertexId v, VertexId target) {
    choice_[static_cast<std::size_t>(v)] = target;
  }
  const std::vector<VertexId>& choices() const { return choice_; }

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile&,
                          const StrategyProfile&) = default;

 private:
  std::vector<VertexId> choice_;
};

// Every vertex points at its lowest-index neighbour.
StrategyProfile LowestNeighbourProfile(const Graph& g);

// A Stackelberg strategy: forced vertices (the keys) and their targets.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::map<VertexId, VertexId> forced)
      : forced_(std::move(forced)) {}

  // Throws kIndexOutOfRange or kPreconditionViolated (target not adjacent).
  void Validate(const Graph& g) const;

  int size() const { return static_cast<int>(forced_.size()); }
  bool empty() const { return forced_.empty(); }
  bool is_forced(VertexId v) const { return forced_.contains(v); }
  // kNoVertex when v is not forced.
  VertexId target(VertexId v) const;
  void Force(VertexId v, VertexId target) { forced_[v] = target; }
  void Unforce(VertexId v) { forced_.erase(v); }

  const std::map<VertexId, VertexId>& forced() const { return forced_; }
  std::vector<VertexId> forced_vertices() const;

  // Dense form: result[v] = T_v or kNoVertex.
  std::vector<VertexId> TargetArray(int n) const;

  // Forced choices viewed as undirected edges, deduplicated and sorted.
  std::vector<Edge> Basis() const;
  // True iff the basis edges are pairwise vertex-disjoint.
  bool IsGood() const;

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  std::map<VertexId, VertexId> forced_;
};

// True iff s plays T on every forced vertex.
bool IsCompatible(const StrategyProfile& s, const Solution& sol);

}  // namespace matchreg

#endif  // MATCHREG_STRATEGY_H_
