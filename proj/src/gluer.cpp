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

#include <exception>

#include "bilip/error.hpp"

namespace bilip {

PiecewiseLinearMap Conjugate(const PiecewiseLinearMap& map,
                             const Rational& scale, const Rational& shift) {
  if (scale.sign() <= 0) {
    throw Error(ErrorCode::kPreconditionViolated, "conjugate scale must be > 0");
  }
  std::vector<Breakpoint> bps;
  for (const Breakpoint& p : map.breakpoints()) {
    bps.push_back({(p.x - shift) / scale, (p.y - shift) / scale});
  }
  return PiecewiseLinearMap(std::move(bps), map.left_slope(),
                            map.right_slope());
}

Rational ScaleDensity(const IntervalSet& e, int n) {
  const Rational w = Pow(Rational(3), -n);
  return MeasureWithin(e, w, Rational(2) * w) / w;
}

int FindDensityScale(const IntervalSet& e, const Rational& delta, int n_max) {
  if (n_max < 1) {
    throw Error(ErrorCode::kPreconditionViolated, "n_max must be >= 1");
  }
  const Rational floor = Rational(1, 2) + Rational(4) * delta;
  Rational best(-1);
  for (int n = n_max; n >= 1; --n) {
    const Rational d = ScaleDensity(e, n);
    if (!(floor < d)) {
      if (n == n_max) {
        for (int m = 1; m <= n_max; ++m) best = Max(best, ScaleDensity(e, m));
        throw Error(ErrorCode::kNoAdmissibleScale,
                    "density at n = " + std::to_string(n_max) + " is " +
                        d.ToString() + " <= " + floor.ToString() +
                        "; best over 1.." + std::to_string(n_max) + " is " +
                        best.ToString());
      }
      return n;
    }
  }
  return 0;
}

PiecewiseLinearMap Rescale(const PiecewiseLinearMap& h, int N) {
  const Rational shrink = Pow(Rational(3), -N);
  std::vector<Breakpoint> big;
  for (const Breakpoint& p : h.breakpoints()) {
    big.push_back({p.x / shrink, p.y});
  }
  return PiecewiseLinearMap(std::move(big), h.left_slope() * shrink,
                            h.right_slope() * shrink);
}

Certificates CertifyGlued(const SequencePrefix& prefix, const IntervalSet& e,
                          int n_max, int N, const PiecewiseLinearMap& h) {
  Certificates checks;
  const Rational delta = DeltaSum(prefix);
  const std::vector<Rational> a = prefix.values();
  const Rational& a1 = a.front();
  const Rational shrink = Pow(Rational(3), -N);
  const PiecewiseLinearMap H = Rescale(h, N);

  bool members = true;
  bool ends = true;
  for (int n = N + 1; n <= n_max; ++n) {
    const Rational w = Pow(Rational(3), -n);
    const Interval window = Interval::Make(w, Rational(2) * w);
    for (const Rational& ak : a) {
      const Rational y = h(w * (Rational(1) + ak));
      members = members && e.contains(y) && window.contains(y);
    }
    ends = ends && window.contains(h(w));
  }
  checks.push_back({"h(3^-n (1 + a_j)) in E ∩ [3^-n, 2*3^-n]", members, ""});
  checks.push_back({"h(3^-n) in [3^-n, 2*3^-n]", ends, ""});

  const Rational lo_conn = Rational(1) / (Rational(2) - a1);
  const Rational hi_conn = Rational(5) / (Rational(2) - a1);
  bool conn_ok = true;
  std::string where;
  for (int n = N + 1; n < n_max; ++n) {
    const Rational x0 = Pow(Rational(3), -(n + 1)) * (Rational(1) + a1);
    const Rational x1 = Pow(Rational(3), -n);
    const Rational slope = (h(x1) - h(x0)) / (x1 - x0);
    if (conn_ok && !(lo_conn <= slope && slope <= hi_conn)) {
      conn_ok = false;
      where = "n = " + std::to_string(n) + ": " + slope.ToString();
    }
  }
  checks.push_back({"connector slopes in [1/(2-a_1), 5/(2-a_1)]", conn_ok,
                    where});

  const Rational upper = Rational(3) / (Rational(1) - delta);
  {
    const auto [lo, hi] = SlopeRange(h);
    checks.push_back({"slope range of h in [1/2, 3/(1-delta)]",
                      Rational(1, 2) <= lo && hi <= upper,
                      "[" + lo.ToString() + ", " + hi.ToString() + "]"});
  }
  {
    const auto [lo, hi] = SlopeRange(H);
    checks.push_back({"slope range of H in 3^-N [1/2, 3/(1-delta)]",
                      shrink / Rational(2) <= lo && hi <= shrink * upper,
                      "[" + lo.ToString() + ", " + hi.ToString() + "]"});
  }
  {
    bool ok = true;
    std::string at;
    for (int m = 1; m <= n_max - N && ok; ++m) {
      const Rational w = Pow(Rational(3), -m);
      for (const Rational& ak : a) {
        const Rational x = w * (Rational(1) + ak);
        const Rational y = H(x);
        if (!(e.contains(y) && y == h(shrink * x))) {
          ok = false;
          at = x.ToString();
          break;
        }
      }
    }
    checks.push_back({"H(x) = h(3^-N x) in E on target points", ok, at});
  }
  return checks;
}

GluedMap BuildGlued(const SequencePrefix& prefix, const IntervalSet& e,
                    int n_max) {
  GluedMap g;
  g.n_max = n_max;
  g.delta = DeltaSum(prefix);
  if (!(g.delta < Rational(1, 8))) {
    throw Error(ErrorCode::kDeltaTooLarge,
                "delta = " + g.delta.ToString() + " >= 1/8");
  }
  g.N = FindDensityScale(e, g.delta, n_max);
  const std::vector<Rational> a = prefix.values();
  const int depth = static_cast<int>(a.size());
  const Rational& a1 = a.front();

  const int count = n_max - g.N;
  g.scales.resize(count);
  std::vector<std::exception_ptr> failures(count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      const int n = g.N + 1 + i;
      const Rational w = Pow(Rational(3), -n);
      const Rational s = Pow(Rational(3), n);
      const IntervalSet window =
          Clip(e, Interval::Make(w, Rational(2) * w));
      const IntervalSet en = AffineImage(window, s, Rational(-1));
      GluedScale& sc = g.scales[i];
      sc.n = n;
      sc.f = BuildUniform(prefix, en, depth);
      sc.h = Conjugate(sc.f.map, s, Rational(-1));
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  // Assemble h left to right: finest scale first.
  std::vector<Breakpoint> bps;
  for (int i = count; i-- > 0;) {
    const GluedScale& sc = g.scales[i];
    const Rational w = Pow(Rational(3), -sc.n);
    bps.push_back({w, sc.h(w)});
    for (int k = depth; k-- > 0;) {
      const Rational x = w * (Rational(1) + a[k]);
      bps.push_back({x, sc.h(x)});
    }
  }
  g.h = PiecewiseLinearMap(bps, Rational(1), Rational(1));

  const Rational lo_conn = Rational(1) / (Rational(2) - a1);
  const Rational hi_conn = Rational(5) / (Rational(2) - a1);
  bool conn_ok = true;
  std::string conn_where;
  for (int i = count - 1; i > 0; --i) {
    // Between scale n+1 (index i) and scale n (index i-1).
    const GluedScale& fine = g.scales[i];
    const GluedScale& coarse = g.scales[i - 1];
    const Rational x0 = Pow(Rational(3), -fine.n) * (Rational(1) + a1);
    const Rational x1 = Pow(Rational(3), -coarse.n);
    const Rational slope = (coarse.h(x1) - fine.h(x0)) / (x1 - x0);
    if (conn_ok && !(lo_conn <= slope && slope <= hi_conn)) {
      conn_ok = false;
      conn_where = "n = " + std::to_string(coarse.n) + ": " + slope.ToString();
    }
    g.connectors.push_back({Interval::Make(x0, x1), slope});
  }
  if (!conn_ok) {
    throw Error(ErrorCode::kConnectorSlopeOutOfRange, conn_where);
  }

  g.H = Rescale(g.h, g.N);

  for (int m = 1; m <= count; ++m) {
    const Rational w = Pow(Rational(3), -m);
    for (int k = depth; k-- > 0;) {
      g.target_points.push_back(w * (Rational(1) + a[k]));
    }
  }

  {
    bool ok = true;
    std::string where;
    for (const GluedScale& sc : g.scales) {
      if (ok && !AllPass(sc.f.checks)) {
        ok = false;
        where = "n = " + std::to_string(sc.n);
      }
    }
    g.checks.push_back({"per-scale uniform certificates", ok, where});
  }
  for (auto& c : CertifyGlued(prefix, e, n_max, g.N, g.h)) {
    g.checks.push_back(std::move(c));
  }
  const auto [lo, hi] = SlopeRange(g.H);
  g.unscaled_H_in_range = Rational(1, 2) <= lo &&
                          hi <= Rational(3) / (Rational(1) - g.delta);
  return g;
}

}  // namespace bilip
