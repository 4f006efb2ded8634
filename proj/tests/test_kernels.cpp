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


#include "bilip/kernels.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bilip;

namespace {

// Sorted random set with many components on the 1/cells lattice.
IntervalSet Dense(Rng& rng, std::int64_t cells, int pieces) {
  std::vector<Interval> raw;
  for (int i = 0; i < pieces; ++i) {
    const auto a = static_cast<std::int64_t>(Uniform(rng, cells));
    const auto len = static_cast<std::int64_t>(Uniform(rng, 4));
    raw.push_back(Interval::Make(Rational(a, cells),
                                 Rational(std::min(a + len, cells), cells)));
  }
  return IntervalSet::Of(std::move(raw));
}

IntervalSet NaiveGrid(std::size_t l, const Rational& d) {
  std::vector<Interval> gaps;
  const auto n = static_cast<std::int64_t>(l);
  for (std::int64_t j = 0; j <= n; ++j) {
    const Rational c(j, n);
    gaps.push_back(Interval::Make(c - d / Rational(2), c + d / Rational(2)));
  }
  return Subtract(IntervalSet::Single(Rational(0), Rational(1)),
                  IntervalSet::Of(std::move(gaps)));
}

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference") {
  Rng rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const IntervalSet s = Dense(rng, 1 << 16, 9000);
    const IntervalSet t = Dense(rng, 1 << 16, 7000);
    REQUIRE(s.size() >= kernels::kParallelThreshold);
    CHECK(kernels::parallel::Intersect(s, t) == kernels::serial::Intersect(s, t));
    CHECK(kernels::parallel::Subtract(s, t) == kernels::serial::Subtract(s, t));
    CHECK(kernels::parallel::Subtract(t, s) == kernels::serial::Subtract(t, s));
    CHECK(kernels::parallel::Measure(s) == kernels::serial::Measure(s));
  }
}

TEST_CASE("small inputs also agree") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const IntervalSet s = oracle::RandomLatticeSet(rng, 32, 4);
    const IntervalSet t = oracle::RandomLatticeSet(rng, 32, 4);
    CHECK(kernels::parallel::Intersect(s, t) == kernels::serial::Intersect(s, t));
    CHECK(kernels::parallel::Subtract(s, t) == kernels::serial::Subtract(s, t));
  }
}

TEST_CASE("punctured grid matches explicit gap removal") {
  for (std::size_t l : {1u, 2u, 3u, 10u, 127u}) {
    const Rational d(1, static_cast<std::int64_t>(3 * l));
    const IntervalSet g = kernels::serial::PuncturedGrid(l, d);
    CHECK(g == NaiveGrid(l, d));
    CHECK(g.size() == l);
    CHECK(Measure(g) == Rational(1) - Rational(static_cast<std::int64_t>(l)) * d);
    CHECK(kernels::parallel::PuncturedGrid(l, d) == g);
  }
  const std::size_t big = 50000;
  const Rational d(1, 7 * 50000);
  CHECK(kernels::parallel::PuncturedGrid(big, d) ==
        kernels::serial::PuncturedGrid(big, d));
}

TEST_CASE("thread count is positive") { CHECK(kernels::ThreadCount() >= 1); }
