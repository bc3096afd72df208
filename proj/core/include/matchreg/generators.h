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

#ifndef MATCHREG_GENERATORS_H_
#define MATCHREG_GENERATORS_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "matchreg/graph.h"

namespace matchreg {

// All generators throw kBadParams on invalid parameters.

Graph PathGraph(int k);      // k >= 2 vertices, 0-1-...-(k-1)
Graph CycleGraph(int k);     // k >= 3
Graph StarGraph(int k);      // K_{1,k}, centre 0, k >= 1
Graph CompleteGraph(int k);  // k >= 2

// 2*delta vertices: x = 0, y = 1, v_i = 2i, v'_i = 2i+1 for i = 1..delta-1,
// edges (x,y), (x,v_i), (y,v'_i), (v_i,v'_i). Worst equilibrium welfare is 2
// while the optimum is 2*delta.
Graph PoaGadget(int delta);  // delta >= 2

// Uniform G(n, m) conditioned on having no isolated vertex (rejection
// sampling, bounded number of attempts).
Graph RandomGnm(int n, int m, std::uint64_t seed);
// Random recursive spanning tree plus m - (n-1) uniform extra edges, under a
// random relabelling.
Graph RandomConnected(int n, int m, std::uint64_t seed);

// Dispatch by family name: path k | cycle k | star k | complete k |
// poa_gadget delta | random_gnm n m seed | random_connected n m seed.
Graph Generate(std::string_view family, std::span<const std::int64_t> params);

}  // namespace matchreg

#endif  // MATCHREG_GENERATORS_H_
