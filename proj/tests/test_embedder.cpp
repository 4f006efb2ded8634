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


#include "bilip/embedder.hpp"
#include "bilip/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bilip;

namespace {

SequencePrefix HalfPowers(std::uint64_t n) {
  return Terms(SequenceSpec::Geometric(Rational(1, 2), Rational(1, 2)), n);
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

void CheckInvariants(const SequencePrefix& prefix, const IntervalSet& e,
                     const EmbeddingResult& r) {
  const auto& params = r.decomposition.params;
  CHECK(AllPass(r.checks));
  REQUIRE(r.b.size() == prefix.length());
  for (std::size_t i = 0; i < r.b.size(); ++i) {
    CHECK(e.contains(r.b[i]));
    CHECK(r.map(prefix.at(i + 1)) == r.b[i]);
    if (i > 0) CHECK(r.b[i] < r.b[i - 1]);
  }
  const Rational threshold = Pow(params.delta, params.N) /
                             Rational(std::int64_t{params.N} * params.N);
  for (std::size_t k = 0; k < r.decomposition.blocks.size(); ++k) {
    if (static_cast<int>(k) + 1 >= r.p) CHECK(r.rho[k] < threshold);
    if (r.t[k]) {
      CHECK(*r.t[k] >= Rational(0));
      CHECK(*r.t[k] <= r.t_bound[k]);
    }
  }
  const auto [lo, hi] = SlopeRange(r.map);
  CHECK(lo > Rational(0));
  CHECK(r.map(Rational(-1)) == Rational(-1));
  CHECK(r.map(Rational(0)) == Rational(0));
}

}  // namespace

TEST_CASE("block decomposition examples") {
  const auto prefix = HalfPowers(6);
  const auto d = DecomposeBlocks(prefix, MakeEmbedParams(prefix, Rational(3, 4), 1));
  REQUIRE(d.blocks.size() == 6);
  for (const Block& b : d.blocks) {
    CHECK(b.first == b.last);
    CHECK(b.u == b.v);
    CHECK(b.u == Pow(Rational(1, 2), b.k));
    CHECK(b.interval == Interval::Make(Rational(3, 4) * b.u, b.u));
  }

  const auto ex = Terms(SequenceSpec::Explicit({Rational(1), Rational(1, 10),
                                                Rational(1, 100)}),
                        3);
  const auto de = DecomposeBlocks(ex, MakeEmbedParams(ex, Rational(1, 2), 1));
  REQUIRE(de.blocks.size() == 3);
  for (const Block& b : de.blocks) CHECK(b.size() == 1);
}

TEST_CASE("interleaved sequence blocks") {
  const auto prefix = Terms(SequenceSpec::InterleavedMersenne(), 20);
  const Rational delta(46, 64);
  const auto d = DecomposeBlocks(prefix, MakeEmbedParams(prefix, delta, 2));
  std::vector<std::uint64_t> qualifying;
  for (std::uint64_t n = 1; n < prefix.length(); ++n) {
    if (prefix.at(n + 1) / prefix.at(n) < delta) qualifying.push_back(n);
  }
  CHECK(d.block_ends == qualifying);
  CHECK(qualifying.front() == 1);
  for (std::size_t i = 1; i < qualifying.size(); ++i) {
    CHECK(qualifying[i] % 2 == 0);
  }
  for (std::size_t k = 0; k < d.blocks.size(); ++k) {
    const Block& b = d.blocks[k];
    CHECK(b.size() <= 2);
    CHECK(Pow(delta, 1) * b.v <= b.u);
    if (k + 1 < d.blocks.size()) {
      CHECK(d.blocks[k + 1].v / b.u < delta);
      CHECK(d.blocks[k + 1].interval.hi < b.interval.lo);
    }
  }
}

TEST_CASE("translation search hand example") {
  const IntervalSet e = IntervalSet::Single(Rational(1, 2), Rational(49, 50));
  const Interval i = Interval::Make(Rational(1, 2), Rational(1));
  const std::vector<Rational> pts{Rational(1)};
  const EmbedParams params{Rational(1, 2), 1};
  CHECK(TranslationSearch(e, i, pts, params) == Rational(1, 50));
  CHECK(TranslationBound(params, Rational(1, 25), Rational(1)) == Rational(1, 25));
  const IntervalSet full = IntervalSet::Single(Rational(0), Rational(2));
  CHECK(TranslationSearch(full, i, pts, params) == Rational(0));
}

TEST_CASE("translation search preconditions") {
  const Interval i = Interval::Make(Rational(1, 2), Rational(1));
  const EmbedParams params{Rational(1, 2), 1};
  const IntervalSet sparse = IntervalSet::Single(Rational(1, 2), Rational(3, 4));
  const std::vector<Rational> pts{Rational(1)};
  CHECK(CodeOf([&] { TranslationSearch(sparse, i, pts, params); }) ==
        ErrorCode::kPreconditionViolated);
  const std::vector<Rational> outside{Rational(1, 4)};
  CHECK(CodeOf([&] {
          TranslationSearch(IntervalSet::Single(Rational(0), Rational(1)), i,
                            outside, params);
        }) == ErrorCode::kPreconditionViolated);
  const std::vector<Rational> many{Rational(1), Rational(9, 10)};
  CHECK(CodeOf([&] {
          TranslationSearch(IntervalSet::Single(Rational(0), Rational(1)), i, many,
                            params);
        }) == ErrorCode::kPreconditionViolated);
}

TEST_CASE("translation search against lattice and grid oracles") {
  Rng rng(2024);
  int grid_agree = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const oracle::TranslationInstance in = oracle::RandomTranslationInstance(rng);
    const EmbedParams params{in.delta, in.N};
    const Rational rho = Rational(1) - DensityWithin(in.e, in.interval);
    const Rational bound = TranslationBound(params, rho, in.u);
    const Rational t = TranslationSearch(in.e, in.interval, in.points, params);
    CHECK(t >= Rational(0));
    CHECK(t <= bound);
    for (const Rational& x : in.points) {
      CHECK(in.e.contains(x - t));
      CHECK(in.interval.contains(x - t));
    }
    const auto exact = oracle::LatticeLeastShift(in, bound);
    REQUIRE(exact.has_value());
    CHECK(*exact == t);
    const auto j = oracle::GridLeastShift(in, bound, 16);
    REQUIRE(j.has_value());
    const Rational cell = bound / Rational(1 << 16);
    const Rational tg = Rational(*j) * cell;
    CHECK(t <= tg);
    grid_agree += tg - t <= cell;
  }
  CHECK(grid_agree == 60);
}

TEST_CASE("embedding into the full interval is the identity") {
  const auto prefix = HalfPowers(20);
  const IntervalSet e = IntervalSet::Single(Rational(0), Rational(1));
  const auto params = MakeEmbedParams(prefix, Rational(3, 4), 1);
  const EmbeddingResult r = BuildEmbedding(prefix, e, params);
  CheckInvariants(prefix, e, r);
  CHECK(r.p == 1);
  for (const Rational& rho : r.rho) CHECK(rho == Rational(0));
  for (const auto& t : r.t) {
    if (t) CHECK(*t == Rational(0));
  }
  for (std::size_t i = 1; i < r.b.size(); ++i) CHECK(r.b[i] == prefix.at(i + 1));
  for (std::size_t i = 1; i + 1 < r.slope_deviation.size(); ++i) {
    CHECK(r.slope_deviation[i] == Rational(0));
  }
}

TEST_CASE("a gap far from the blocks changes nothing below it") {
  const auto prefix = HalfPowers(20);
  const IntervalSet e = Subtract(IntervalSet::Single(Rational(0), Rational(1)),
                                 IntervalSet::Single(Rational(9, 10), Rational(91, 100)));
  const auto r = BuildEmbedding(prefix, e, MakeEmbedParams(prefix, Rational(3, 4), 1));
  CheckInvariants(prefix, e, r);
  for (const auto& t : r.t) {
    if (t) CHECK(*t == Rational(0));
  }
}

TEST_CASE("a gap inside one block forces exactly that block to move") {
  const auto prefix = HalfPowers(20);
  const IntervalSet e = Subtract(IntervalSet::Single(Rational(0), Rational(1)),
                                 IntervalSet::Single(Rational(6, 25), Rational(13, 50)));
  const auto r = BuildEmbedding(prefix, e, MakeEmbedParams(prefix, Rational(3, 4), 1));
  CheckInvariants(prefix, e, r);
  CHECK(r.p == 1);
  REQUIRE(r.t[1].has_value());
  CHECK(*r.t[1] == Rational(1, 100));
  CHECK(r.rho[1] == Rational(4, 25));
  for (std::size_t k = 2; k < r.t.size(); ++k) CHECK(*r.t[k] == Rational(0));
}

TEST_CASE("fat Cantor target") {
  const auto prefix = HalfPowers(40);
  const std::vector<Rational> keep(3, Rational(31, 32));
  const IntervalSet e =
      FatCantor(keep, Interval::Make(Rational(0), Rational(1)), 11);
  const auto params = MakeEmbedParams(prefix, Rational(3, 4), 1);
  const auto r = BuildEmbedding(prefix, e, params);
  CheckInvariants(prefix, e, r);
  CHECK(r.p <= 3);
  const auto& blocks = r.decomposition.blocks;
  for (std::size_t k = r.p; k + 1 < blocks.size(); ++k) {
    const std::uint64_t n = blocks[k].last;
    const Rational bound = Pow(params.delta, -params.N) * (r.rho[k] + r.rho[k + 1]);
    CHECK(r.slope_deviation[n - 1] <= bound);
  }
}

TEST_CASE("certificates catch a corrupted image") {
  const auto prefix = HalfPowers(12);
  const IntervalSet e = IntervalSet::Single(Rational(0), Rational(1));
  const auto params = MakeEmbedParams(prefix, Rational(3, 4), 1);
  auto r = BuildEmbedding(prefix, e, params);
  CHECK(AllPass(CertifyEmbedding(prefix, e, params, r.b)));
  r.b[5] += Rational(1, 1000000);
  CHECK_FALSE(AllPass(CertifyEmbedding(prefix, e, params, r.b)));
}

TEST_CASE("typed failures") {
  const auto harmonic = Terms(SequenceSpec::Harmonic(), 200);
  CHECK(CodeOf([&] { MakeEmbedParams(harmonic, Rational(99, 100), 1); }) ==
        ErrorCode::kRatioHypothesisFails);
  const auto prefix = HalfPowers(10);
  const auto params = MakeEmbedParams(prefix, Rational(3, 4), 1);
  CHECK(CodeOf([&] {
          BuildEmbedding(prefix, IntervalSet::Single(Rational(1, 2), Rational(1)),
                         params);
        }) == ErrorCode::kDensityTooLow);
  CHECK(CodeOf([&] {
          BuildEmbedding(prefix, IntervalSet::Single(Rational(0), Rational(1, 2)),
                         params);
        }) == ErrorCode::kHeadSelectionFails);
  CHECK(CodeOf([&] { MakeEmbedParams(prefix, Rational(1), 1); }) ==
        ErrorCode::kPreconditionViolated);
}
