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


#include "bilip/gluer.hpp"
#include "bilip/error.hpp"
#include "doctest.h"

using namespace bilip;

namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInfeasible;
}

void CheckGlued(const SequencePrefix& prefix, const IntervalSet& e,
                const GluedMap& g) {
  CHECK(AllPass(g.checks));
  const Rational a1 = prefix.at(1);
  const Rational upper = Rational(3) / (Rational(1) - g.delta);
  const auto [lo, hi] = SlopeRange(g.h);
  CHECK(Rational(1, 2) <= lo);
  CHECK(hi <= upper);
  for (const Connector& c : g.connectors) {
    CHECK(Rational(1) / (Rational(2) - a1) <= c.slope);
    CHECK(c.slope <= Rational(5) / (Rational(2) - a1));
  }
  const Rational shrink = Pow(Rational(3), -g.N);
  const auto [Lo, Hi] = SlopeRange(g.H);
  CHECK(Lo == lo * shrink);
  CHECK(Hi == hi * shrink);
  for (int m = 1; m <= g.n_max - g.N; ++m) {
    for (std::uint64_t j = 1; j <= prefix.length(); ++j) {
      const Rational x = Pow(Rational(3), -m) * (Rational(1) + prefix.at(j));
      CHECK(e.contains(g.H(x)));
      CHECK(g.H(x) == g.h(x * shrink));
    }
  }
  CHECK(g.target_points.size() ==
        static_cast<std::size_t>(g.n_max - g.N) * prefix.length());
  for (const GluedScale& s : g.scales) {
    const Rational w = Pow(Rational(3), -s.n);
    const Rational y = g.h(w);
    CHECK(w <= y);
    CHECK(y <= Rational(2) * w);
    const Rational z = g.h(w * (Rational(1) + a1));
    CHECK(w <= z);
    CHECK(z <= Rational(2) * w);
  }
}

}  // namespace

TEST_CASE("conjugation") {
  const auto id = PiecewiseLinearMap::Identity();
  CHECK(SlopeRange(Conjugate(id, Rational(3), Rational(-1))) ==
        std::pair<Rational, Rational>(Rational(1), Rational(1)));
  const PiecewiseLinearMap m({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}},
                             Rational(1, 2), Rational(1, 2));
  const auto c = Conjugate(m, Rational(3), Rational(-1));
  CHECK(SlopeRange(c) == SlopeRange(m));
  for (int i = -5; i <= 5; ++i) {
    const Rational x(i, 7);
    // g^-1(m(g(x))) with g(x) = 3x - 1.
    CHECK(c(x) == (m(Rational(3) * x - Rational(1)) + Rational(1)) / Rational(3));
  }
  const PiecewiseLinearMap p({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}},
                             Rational(1), Rational(1));
  const auto q = Conjugate(p, Rational(1, 3), Rational(0));
  CHECK(std::vector<Breakpoint>(q.breakpoints().begin(), q.breakpoints().end()) ==
        std::vector<Breakpoint>{{Rational(0), Rational(0)}, {Rational(3), Rational(6)}});
}

TEST_CASE("density scale") {
  const Rational delta = DeltaSum(Terms(SequenceSpec::Tower(), 2));
  CHECK(FindDensityScale(IntervalSet::Single(Rational(0), Rational(1)), delta, 6) == 0);
  const std::vector<Rational> keep{Rational(99, 100)};
  const IntervalSet cantor =
      FatCantor(keep, Interval::Make(Rational(0), Rational(1)), 3, CantorMode::kMiddle);
  const int N = FindDensityScale(cantor, delta, 6);
  CHECK(N <= 1);
  for (int n = N + 1; n <= 6; ++n) {
    CHECK(Rational(1, 2) + Rational(4) * delta < ScaleDensity(cantor, n));
  }
  CHECK(CodeOf([&] {
          FindDensityScale(IntervalSet::Single(Rational(1, 2), Rational(1)), delta, 3);
        }) == ErrorCode::kNoAdmissibleScale);
  // Windows 2 and 3 are empty, window 4 is full.
  const IntervalSet coarse = IntervalSet::Of({Interval::Make(Rational(0), Rational(1, 30)),
                                              Interval::Make(Rational(1, 3), Rational(2, 3))});
  CHECK(FindDensityScale(coarse, delta, 4) == 3);
}

TEST_CASE("gluing into the full interval") {
  const auto tower = Terms(SequenceSpec::Tower(), 2);
  const IntervalSet e = IntervalSet::Single(Rational(0), Rational(1));
  const GluedMap g = BuildGlued(tower, e, 4);
  CHECK(g.N == 0);
  CHECK(g.scales.size() == 4);
  CHECK(g.unscaled_H_in_range);
  CheckGlued(tower, e, g);
}

TEST_CASE("gluing into a gapped set") {
  const auto tower = Terms(SequenceSpec::Tower(), 3);
  const IntervalSet e = Subtract(
      IntervalSet::Single(Rational(0), Rational(1)),
      IntervalSet::Of({Interval::Make(Rational(1, 3) + Rational(1, 100),
                                      Rational(1, 3) + Rational(1, 100) + Rational(1, 16)),
                       Interval::Make(Rational(7, 10), Rational(7, 10) + Rational(1, 16)),
                       Interval::Make(Rational(1, 243), Rational(1, 243) + Rational(1, 1000))}));
  const GluedMap g = BuildGlued(tower, e, 5);
  CHECK(g.N == 5 - 0 - static_cast<int>(g.scales.size()));
  CheckGlued(tower, e, g);
  CHECK(Rescale(g.h, g.N) == g.H);
  CHECK(AllPass(CertifyGlued(tower, e, 5, g.N, g.h)));
}

TEST_CASE("gluing above a sparse window") {
  const auto tower = Terms(SequenceSpec::Tower(), 2);
  const IntervalSet e = Subtract(IntervalSet::Single(Rational(0), Rational(1)),
                                 IntervalSet::Single(Rational(1, 3), Rational(2, 3)));
  const GluedMap g = BuildGlued(tower, e, 4);
  CHECK(g.N == 1);
  CHECK_FALSE(g.unscaled_H_in_range);
  CheckGlued(tower, e, g);
  std::vector<Breakpoint> steep;
  for (const Breakpoint& b : g.h.breakpoints()) steep.push_back({b.x, Rational(2) * b.y});
  const PiecewiseLinearMap doubled(steep, Rational(2), Rational(2));
  CHECK_FALSE(AllPass(CertifyGlued(tower, e, 4, g.N, doubled)));
}

TEST_CASE("gluing failures") {
  const auto geo = Terms(SequenceSpec::Geometric(Rational(1, 2), Rational(1, 2)), 3);
  CHECK(CodeOf([&] {
          BuildGlued(geo, IntervalSet::Single(Rational(0), Rational(1)), 3);
        }) == ErrorCode::kDeltaTooLarge);
  CHECK(CodeOf([&] {
          BuildGlued(Terms(SequenceSpec::Tower(), 2),
                     IntervalSet::Single(Rational(1, 2), Rational(1)), 3);
        }) == ErrorCode::kNoAdmissibleScale);
}
