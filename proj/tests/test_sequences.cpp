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


#include "bilip/sequences.hpp"
#include "bilip/error.hpp"
#include "doctest.h"

using namespace bilip;

namespace {

std::vector<Rational> Vals(const SequenceSpec& s, std::uint64_t n) {
  return Terms(s, n).values();
}

// Max over m > n > 1 by brute force.
Rational BruteGapSup(const std::vector<Rational>& a) {
  Rational best;
  bool first = true;
  for (std::size_t n = 2; n <= a.size(); ++n) {
    for (std::size_t m = n + 1; m <= a.size(); ++m) {
      const Rational r = (a[m - 2] - a[m - 1]) / (a[n - 2] - a[n - 1]);
      if (first || best < r) best = r;
      first = false;
    }
  }
  return best;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInfeasible;
}

}  // namespace

TEST_CASE("terms of the built-in sequences") {
  CHECK(Vals(SequenceSpec::Geometric(Rational(1, 2), Rational(1, 2)), 3) ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)});
  CHECK(Vals(SequenceSpec::InterleavedMersenne(), 6) ==
        std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 3),
                              Rational(1, 4), Rational(1, 7), Rational(1, 8)});
  CHECK(Vals(SequenceSpec::Tower(), 2) ==
        std::vector<Rational>{Rational(1, 256),
                              Rational(BigInt(1), BigInt(1) << 32)});
  CHECK(Vals(SequenceSpec::Harmonic(), 3).back() == Rational(1, 3));
}

TEST_CASE("prefixes are consistent and strictly decreasing") {
  for (const SequenceSpec& s :
       {SequenceSpec::Harmonic(), SequenceSpec::InterleavedMersenne(),
        SequenceSpec::Geometric(Rational(2, 3), Rational(5))}) {
    const auto long_vals = Vals(s, 40);
    const auto short_vals = Vals(s, 17);
    CHECK(std::equal(short_vals.begin(), short_vals.end(), long_vals.begin()));
    for (std::size_t i = 1; i < long_vals.size(); ++i) {
      CHECK(long_vals[i] < long_vals[i - 1]);
    }
  }
  const SequencePrefix p = Terms(SequenceSpec::Harmonic(), 1000000000000ULL);
  CHECK(p.at(1000000000000ULL) == Rational(BigInt(1), BigInt("1000000000000")));
  CHECK(p.Truncated(5).length() == 5);
}

TEST_CASE("term errors") {
  CHECK(CodeOf([] {
          SequenceSpec::Explicit({Rational(1), Rational(1, 2), Rational(1, 2)});
        }) == ErrorCode::kNotDecreasing);
  CHECK(CodeOf([] { SequenceSpec::Explicit({Rational(1), Rational(-1)}); }) ==
        ErrorCode::kNotDecreasing);
  CHECK(CodeOf([] { Terms(SequenceSpec::Tower(), 13); }) ==
        ErrorCode::kPrefixTooShort);
  CHECK(CodeOf([] {
          Terms(SequenceSpec::Explicit({Rational(1, 2)}), 2);
        }) == ErrorCode::kPrefixTooShort);
  CHECK(CodeOf([] { Terms(SequenceSpec::Harmonic(), 0); }) ==
        ErrorCode::kPreconditionViolated);
  CHECK(CodeOf([] {
          ComputeRatioStats(Terms(SequenceSpec::Harmonic(), 2), 2);
        }) == ErrorCode::kPrefixTooShort);
  CHECK(Terms(SequenceSpec::Tower(), 12).at(12) > Rational(0));
}

TEST_CASE("ratio statistics") {
  const auto geo = Terms(SequenceSpec::Geometric(Rational(1, 2), Rational(1, 2)), 30);
  const RatioStats g = ComputeRatioStats(geo, 1);
  CHECK(g.max_step_ratio == Rational(1, 2));
  CHECK(g.min_adjacent_ratio == Rational(1, 2));

  const auto im = Terms(SequenceSpec::InterleavedMersenne(), 8);
  CHECK(ComputeRatioStats(im, 2).max_step_ratio == Rational(1, 2));

  const auto h = Terms(SequenceSpec::Harmonic(), 100);
  const RatioStats hs = ComputeRatioStats(h, 1);
  CHECK(hs.gap_ratio_sup == BruteGapSup(h.values()));
  CHECK(hs.gap_ratio_sup == Rational(49, 50));
  CHECK(hs.max_adjacent_ratio == Rational(99, 100));

  const auto ex = Terms(SequenceSpec::Explicit({Rational(1), Rational(1, 2),
                                                Rational(1, 3), Rational(1, 4),
                                                Rational(1, 100)}),
                        5);
  CHECK(ComputeRatioStats(ex, 1).gap_ratio_sup == BruteGapSup(ex.values()));
}

TEST_CASE("ratio statistics are monotone under extension") {
  const SequenceSpec s = SequenceSpec::InterleavedMersenne();
  RatioStats prev = ComputeRatioStats(Terms(s, 4), 1);
  for (std::uint64_t len = 5; len <= 30; ++len) {
    const RatioStats cur = ComputeRatioStats(Terms(s, len), 1);
    CHECK(prev.max_step_ratio <= cur.max_step_ratio);
    CHECK(prev.gap_ratio_sup <= cur.gap_ratio_sup);
    CHECK(cur.min_adjacent_ratio <= prev.min_adjacent_ratio);
    prev = cur;
  }
}

TEST_CASE("find_delta picks the least k/64") {
  const auto geo = Terms(SequenceSpec::Geometric(Rational(1, 2), Rational(1, 2)), 20);
  CHECK(FindDelta(geo, 1) == Rational(33, 64));
  const auto im = Terms(SequenceSpec::InterleavedMersenne(), 40);
  CHECK(FindDelta(im, 2) == Rational(46, 64));
  const auto ex = Terms(SequenceSpec::Explicit({Rational(1), Rational(1, 10)}), 2);
  CHECK(FindDelta(ex, 1) == Rational(7, 64));
  // 63/64 is not enough: the grid is refined.
  const auto close = Terms(SequenceSpec::Explicit({Rational(1), Rational(127, 128)}), 2);
  const Rational d = FindDelta(close, 1);
  CHECK(d > Rational(127, 128));
  CHECK(d < Rational(1));
  // (48/64)^3 equals 27/64 exactly, so the strict inequality needs 49.
  CHECK(FindDelta(Terms(SequenceSpec::Geometric(Rational(3, 4), Rational(1)), 9), 3) ==
        Rational(49, 64));
}

TEST_CASE("find_delta invariant and failure") {
  for (std::uint64_t len = 3; len < 20; ++len) {
    for (int N = 1; N <= 2; ++N) {
      const auto p = Terms(SequenceSpec::InterleavedMersenne(), len);
      const Rational d = FindDelta(p, N);
      CHECK(Pow(d, N) > ComputeRatioStats(p, N).max_step_ratio);
      CHECK(d < Rational(1));
    }
  }
  const auto flat = Terms(SequenceSpec::Explicit({Rational(1), Rational(1, 2)}), 2);
  CHECK_NOTHROW(FindDelta(flat, 1));
}

TEST_CASE("tower delta sum stays below 1/8") {
  for (std::uint64_t len = 1; len <= 6; ++len) {
    CHECK(DeltaSum(Terms(SequenceSpec::Tower(), len)) < Rational(1, 8));
  }
  const auto ex = Terms(SequenceSpec::Explicit({Rational(1, 16), Rational(1, 256)}), 2);
  CHECK(DeltaSum(ex) == Rational(1, 16) + Rational(1, 16));
}
