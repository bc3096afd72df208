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

#ifndef MATCHREG_SRC_RNG_H_
#define MATCHREG_SRC_RNG_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace matchreg::internal {

// Unbiased integer in [0, bound) from raw mt19937_64 output. The engine's
// sequence is fixed by the standard, so results are portable across
// standard libraries (unlike std::uniform_int_distribution).
inline std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

template <typename T>
void Shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[Below(rng, i)]);
  }
}

}  // namespace matchreg::internal

#endif  // MATCHREG_SRC_RNG_H_
