// Copyright 2026 The bilip Authors
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


#ifndef BILIP_RNG_HPP_
#define BILIP_RNG_HPP_

#include <cstdint>
#include <random>

namespace bilip {

// Seeded generator used by every randomized operation. std::mt19937_64 is
// fully specified by the standard; distributions are not, so bounded draws
// go through Uniform() below instead of <random> distributions.
using Rng = std::mt19937_64;

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for sub-task `index` of a run seeded with `seed`.
inline Rng StreamFor(std::uint64_t seed, std::uint64_t index) {
  return Rng(SplitMix64(seed ^ SplitMix64(index + 1)));
}

// Uniform integer in [0, n) by rejection; n > 0.
inline std::uint64_t Uniform(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace bilip

#endif  // BILIP_RNG_HPP_
