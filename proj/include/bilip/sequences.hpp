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


#ifndef BILIP_SEQUENCES_HPP_
#define BILIP_SEQUENCES_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bilip/rational.hpp"

namespace bilip {

enum class SequenceKind {
  kGeometric,            // first * ratio^(n-1)
  kHarmonic,             // 1/n
  kInterleavedMersenne,  // 1/(2^k - 1) at n = 2k-1, 2^-k at n = 2k
  kTower,                // 4^(-4^n)
  kExplicit,             // caller-supplied finite list
};

struct SequenceSpec {
  SequenceKind kind = SequenceKind::kHarmonic;
  Rational ratio;  // geometric only
  Rational first;  // geometric only
  std::vector<Rational> terms;  // explicit only

  static SequenceSpec Geometric(Rational ratio, Rational first);
  static SequenceSpec Harmonic();
  static SequenceSpec InterleavedMersenne();
  static SequenceSpec Tower();
  static SequenceSpec Explicit(std::vector<Rational> terms);

  // Analytically known tail behaviour of the built-in kinds. Explicit lists
  // never carry these flags: nothing is known beyond the given terms.
  //
  // Gaps a_n - a_{n+1} are non-increasing for every n.
  bool monotone_gaps() const;
  // Relative gaps (a_n - a_{n+1}) / a_n are non-increasing for every n.
  bool monotone_relative_gaps() const;

  // Upper bound on the available length: the list size for explicit
  // sequences, 12 for the tower (larger terms are not representable),
  // UINT64_MAX otherwise.
  std::uint64_t max_length() const;

  std::string Describe() const;
};

// First `length` terms (a_1, ..., a_L) of a sequence, strictly decreasing
// and positive. Built-in kinds are evaluated on demand, so very long
// prefixes cost nothing until their terms are read.
class SequencePrefix {
 public:
  SequencePrefix(std::shared_ptr<const SequenceSpec> spec,
                 std::uint64_t length);

  std::uint64_t length() const { return length_; }
  const SequenceSpec& spec() const { return *spec_; }
  std::shared_ptr<const SequenceSpec> spec_ptr() const { return spec_; }

  // a_n for 1 <= n <= length().
  Rational at(std::uint64_t n) const;

  // a_n - a_{n+1} for 1 <= n < length().
  Rational gap(std::uint64_t n) const { return at(n) - at(n + 1); }

  // All terms; only sensible for short prefixes.
  std::vector<Rational> values() const;

  // Same sequence, first `length` terms.
  SequencePrefix Truncated(std::uint64_t length) const;

 private:
  std::shared_ptr<const SequenceSpec> spec_;
  std::uint64_t length_;
};

// Throws kNotDecreasing for explicit lists that are not strictly decreasing
// and positive, kPrefixTooShort when count exceeds an explicit list, and
// kPreconditionViolated for count == 0.
SequencePrefix Terms(const SequenceSpec& spec, std::uint64_t count);

// Statistics over the prefix only; they say nothing about the tail.
struct RatioStats {
  int N = 1;
  Rational max_step_ratio;      // max a_{n+N} / a_n
  Rational max_adjacent_ratio;  // max a_{n+1} / a_n
  Rational min_adjacent_ratio;  // min a_{n+1} / a_n
  // max (a_{m-1} - a_m) / (a_{n-1} - a_n) over m > n > 1; 0 when the
  // prefix is shorter than 3.
  Rational gap_ratio_sup;
  Rational delta_sum;  // a_1 + sum a_{n+1} / a_n
};

// Throws kPrefixTooShort unless length > N.
RatioStats ComputeRatioStats(const SequencePrefix& prefix, int N);

// a_1 + sum_{n < L} a_{n+1} / a_n.
Rational DeltaSum(const SequencePrefix& prefix);

// Smallest delta = k/64 in (0,1) with max a_{n+N}/a_n < delta^N; when no
// such k exists the grid is refined to k/128, k/256, ... Throws
// kHypothesisFails if max_step_ratio >= 1.
Rational FindDelta(const SequencePrefix& prefix, int N);

}  // namespace bilip

#endif  // BILIP_SEQUENCES_HPP_
