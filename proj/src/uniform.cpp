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


#include "bilip/uniform.hpp"

#include <algorithm>
#include <optional>

#include "bilip/error.hpp"

namespace bilip {

MSequence ComputeMSequence(const SequencePrefix& prefix) {
  const std::vector<Rational> a = prefix.values();
  if (a.empty()) {
    throw Error(ErrorCode::kPrefixTooShort, "empty prefix");
  }
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    const Rational r = a[k + 1] / a[k];
    if (Rational(1, 4) < r) {
      throw Error(ErrorCode::kRatioTooLarge,
                  "a_" + std::to_string(k + 2) + "/a_" + std::to_string(k + 1) +
                      " = " + r.ToString() + " > 1/4");
    }
  }
  MSequence out;
  out.delta_sum = DeltaSum(prefix);
  if (Rational(1, 4) < out.delta_sum) {
    throw Error(ErrorCode::kDeltaTooLarge,
                "delta = " + out.delta_sum.ToString() + " > 1/4");
  }
  BigInt product(1);
  for (const Rational& an : a) {
    const BigInt m =
        BigInt(2) * (Rational(1) / (Rational(2) * Rational(product) * an)).Ceil();
    product *= m;
    out.M.push_back(m);
    out.partial_products.push_back(product);
  }

  bool am = true;
  std::string where;
  Rational sum;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const Rational inv = Rational(BigInt(1), out.partial_products[n]);
    if (am && !(a[n] / Rational(2) <= inv && inv <= a[n])) {
      am = false;
      where = "n = " + std::to_string(n + 1);
    }
    sum += Rational(BigInt(1), out.M[n]);
  }
  out.checks.push_back({"a_n/2 <= 1/(M_1...M_n) <= a_n", am, where});
  out.checks.push_back({"sum 1/M_n < 2 delta", sum < Rational(2) * out.delta_sum,
                        sum.ToString()});
  bool even = std::all_of(out.M.begin(), out.M.end(), [](const BigInt& m) {
    return m > 0 && mpz_even_p(m.get_mpz_t());
  });
  out.checks.push_back({"M_n even and positive", even, ""});
  return out;
}

namespace {

enum class CellKind { kSpecial, kFull, kEmpty };

struct Segment {
  BigInt first;  // cell indices, inclusive
  BigInt last;
  CellKind kind;
  Rational mass;  // per cell
};

}  // namespace

NestedPair DensityPairSearch(const IntervalSet& e, const Interval& interval,
                             const Rational& t, const Rational& eps,
                             const BigInt& M) {
  if (!(Rational(1, 2) < t && t < Rational(1))) {
    throw Error(ErrorCode::kPreconditionViolated,
                "t = " + t.ToString() + " not in (1/2, 1)");
  }
  if (!(eps.sign() > 0 && eps < t - Rational(1, 2))) {
    throw Error(ErrorCode::kPreconditionViolated,
                "0 < eps < t - 1/2 fails for eps = " + eps.ToString());
  }
  if (M <= 2 || !mpz_even_p(M.get_mpz_t()) ||
      !(Rational(2) / eps < Rational(M))) {
    throw Error(ErrorCode::kPreconditionViolated,
                "M = " + M.get_str() + " must be even and exceed 2/eps");
  }
  const Rational len = interval.length();
  if (len.sign() <= 0) {
    throw Error(ErrorCode::kDegenerateInterval, "density search on a point");
  }
  if (MeasureWithin(e, interval.lo, interval.hi) < t * len) {
    throw Error(ErrorCode::kPreconditionViolated,
                "measure of E in I below t * |I|");
  }

  const Rational width = len / Rational(M);
  const Rational threshold = (t - eps) * width;  // mass bound per cell
  auto cell_lo = [&](const BigInt& j) {
    return interval.lo + Rational(BigInt(j - 1)) * width;
  };
  auto cell_mass = [&](const BigInt& j) {
    const Rational lo = cell_lo(j);
    return MeasureWithin(e, lo, lo + width);
  };

  // Cells whose interior holds an endpoint, or that border one lying on a
  // cell boundary.
  std::vector<BigInt> special;
  const IntervalSet local = Clip(e, interval);
  for (const Interval& c : local.components()) {
    if (c.degenerate()) continue;
    for (const Rational* x : {&c.lo, &c.hi}) {
      const Rational pos = (*x - interval.lo) / width;
      const BigInt f = pos.Floor();
      if (Rational(f) == pos) {
        special.push_back(f);
        special.push_back(f + 1);
      } else {
        special.push_back(f + 1);
      }
    }
  }
  std::erase_if(special, [&](const BigInt& j) { return j < 1 || j > M; });
  std::sort(special.begin(), special.end());
  special.erase(std::unique(special.begin(), special.end()), special.end());

  std::vector<Segment> segs;
  BigInt next(1);
  auto add_run = [&](const BigInt& first, const BigInt& last) {
    if (last < first) return;
    // No endpoint inside any of these cells: test one interior point.
    const Rational mid = cell_lo(first) + width / Rational(2);
    const bool full = local.contains(mid);
    segs.push_back({first, last, full ? CellKind::kFull : CellKind::kEmpty,
                    full ? width : Rational(0)});
  };
  for (const BigInt& s : special) {
    add_run(next, s - 1);
    segs.push_back({s, s, CellKind::kSpecial, cell_mass(s)});
    next = s + 1;
  }
  add_run(next, M);

  // next_pos[i]: first segment at or after i with positive mass.
  std::vector<std::size_t> next_pos(segs.size() + 1, segs.size());
  for (std::size_t i = segs.size(); i-- > 0;) {
    next_pos[i] = segs[i].mass.sign() > 0 ? i : next_pos[i + 1];
  }
  auto segment_of = [&](const BigInt& j) {
    auto it = std::upper_bound(
        segs.begin(), segs.end(), j,
        [](const BigInt& v, const Segment& s) { return v < s.first; });
    return static_cast<std::size_t>(it - segs.begin()) - 1;
  };
  // Smallest cell >= j with positive mass.
  auto next_positive = [&](const BigInt& j) -> std::optional<BigInt> {
    if (j > M) return std::nullopt;
    const std::size_t i = segment_of(j);
    if (segs[i].mass.sign() > 0) return j;
    const std::size_t p = next_pos[i + 1];
    if (p == segs.size()) return std::nullopt;
    return segs[p].first;
  };

  const BigInt j_max = M - 2;
  std::optional<BigInt> found;
  for (const Segment& s : segs) {
    if (s.first > j_max) break;
    if (s.mass < threshold) continue;
    const auto c = next_positive(s.first + 2);
    if (!c) break;  // nothing of positive mass further right
    const BigInt j = *c - 2;
    if (j <= s.last && j <= j_max) {
      found = j;
      break;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kNotFound,
                "no admissible cell pair among M = " + M.get_str());
  }
  NestedPair pair;
  pair.j = *found;
  const Rational lo = cell_lo(pair.j);
  pair.delta = Interval::Make(lo, lo + width);
  pair.delta_prime =
      Interval::Make(lo + Rational(2) * width, lo + Rational(3) * width);
  pair.density = cell_mass(pair.j) / width;
  return pair;
}

Certificates CertifyUniform(const SequencePrefix& prefix, const IntervalSet& e,
                            int depth, std::span<const BigInt> j,
                            std::span<const Rational> b) {
  Certificates checks;
  const SequencePrefix used = prefix.Truncated(depth);
  const MSequence ms = ComputeMSequence(used);
  const std::vector<Rational> a = used.values();
  const Rational delta = DeltaSum(prefix);
  const auto k_count = static_cast<std::size_t>(depth);
  if (j.size() != k_count || b.size() != k_count) {
    checks.push_back({"one level per term", false, ""});
    return checks;
  }
  for (const auto& c : ms.checks) checks.push_back(c);

  const Rational measure = Measure(e);
  const Rational eta =
      ((measure - Rational(1, 2)) / (Rational(2) * delta) - Rational(2)) /
      Rational(2);
  const Rational scale = Rational(2) + eta;
  const Rational t = Rational(1, 2) + scale * Rational(2) * delta;
  checks.push_back({"measure(E) > 1/2 + 2 (2 + eta) delta, eta > 0",
                    eta.sign() > 0 && t < measure, eta.ToString()});
  Rational sum;
  for (const BigInt& m : ms.M) sum += scale / Rational(m);
  checks.push_back(
      {"sum eps_i < t - 1/2", sum < t - Rational(1, 2), sum.ToString()});

  bool nested = true;
  bool density = true;
  bool member = true;
  Interval outer = Interval::Make(Rational(0), Rational(1));
  Rational level = t;
  for (std::size_t k = 0; k < k_count; ++k) {
    const BigInt& P = ms.partial_products[k];
    const bool in_range = j[k] >= 1 && j[k] + 2 <= P;
    nested = nested && in_range;
    if (!in_range) break;
    const Interval d = Interval::Make(Rational(BigInt(j[k] - 1), P),
                                      Rational(j[k], P));
    const Interval dp = Interval::Make(Rational(BigInt(j[k] + 1), P),
                                       Rational(BigInt(j[k] + 2), P));
    nested = nested && outer.lo <= d.lo && dp.hi <= outer.hi;
    level -= scale / Rational(ms.M[k]);
    density = density && level <= DensityWithin(e, d) &&
              MeasureWithin(e, dp.lo, dp.hi).sign() > 0;
    member = member && e.contains(b[k]) && dp.contains(b[k]);
    outer = d;
  }
  checks.push_back({"delta_k and delta'_k nested in delta_{k-1}, disjoint",
                    nested, ""});
  checks.push_back(
      {"density(delta_k) >= t - sum eps_i, E meets delta'_k", density, ""});
  checks.push_back({"b_k in E ∩ delta'_k", member, ""});

  bool spacing = true;
  for (std::size_t k = 0; k + 1 < k_count; ++k) {
    const Rational inv = Rational(BigInt(1), ms.partial_products[k]);
    const Rational d = b[k] - b[k + 1];
    spacing = spacing && inv <= d && d <= Rational(3) * inv;
  }
  checks.push_back(
      {"1/(M_1...M_k) <= b_k - b_{k+1} <= 3/(M_1...M_k)", spacing, ""});
  if (!spacing) return checks;

  std::vector<Breakpoint> bps;
  for (std::size_t k = k_count; k-- > 0;) bps.push_back({a[k], b[k]});
  const PiecewiseLinearMap map(std::move(bps), Rational(1), Rational(1));
  const auto [lo, hi] = SlopeRange(map);
  const Rational upper = Rational(3) / (Rational(1) - delta);
  checks.push_back({"slope range in [1/2, 3/(1-delta)]",
                    Rational(1, 2) <= lo && hi <= upper,
                    "[" + lo.ToString() + ", " + hi.ToString() + "]"});
  const Rational f0 = map(Rational(0));
  checks.push_back({"f(0) in [0, 1]", f0.sign() >= 0 && f0 <= Rational(1),
                    f0.ToString()});
  return checks;
}

UniformEmbeddingResult BuildUniform(const SequencePrefix& prefix,
                                    const IntervalSet& e, int depth) {
  if (depth < 1 || static_cast<std::uint64_t>(depth) > prefix.length()) {
    throw Error(ErrorCode::kDepthExceedsPrefix,
                "depth " + std::to_string(depth) + " with prefix length " +
                    std::to_string(prefix.length()));
  }
  if (!e.empty() && (e.hull().lo.sign() < 0 || Rational(1) < e.hull().hi)) {
    throw Error(ErrorCode::kPreconditionViolated, "E must lie in [0, 1]");
  }
  UniformEmbeddingResult r;
  r.delta = DeltaSum(prefix);
  if (!(r.delta < Rational(1, 8))) {
    throw Error(ErrorCode::kDeltaTooLarge,
                "delta = " + r.delta.ToString() + " >= 1/8");
  }
  const SequencePrefix used = prefix.Truncated(depth);
  r.msequence = ComputeMSequence(used);
  r.a = used.values();
  const Rational measure = Measure(e);
  const Rational floor = Rational(1, 2) + Rational(4) * r.delta;
  if (!(floor < measure)) {
    throw Error(ErrorCode::kMeasureTooSmall,
                "measure(E) = " + measure.ToString() + " <= 1/2 + 4 delta = " +
                    floor.ToString());
  }
  const Rational& delta = r.delta;
  r.eta = ((measure - Rational(1, 2)) / (Rational(2) * delta) - Rational(2)) /
          Rational(2);
  const Rational scale = Rational(2) + r.eta;
  r.t_threshold = Rational(1, 2) + scale * Rational(2) * delta;
  for (const BigInt& m : r.msequence.M) {
    r.epsilons.push_back(scale / Rational(m));
  }

  Interval current = Interval::Make(Rational(0), Rational(1));
  BigInt j_prev(1);
  Rational level_t = r.t_threshold;
  for (int k = 1; k <= depth; ++k) {
    const BigInt& M = r.msequence.M[k - 1];
    const BigInt& P = r.msequence.partial_products[k - 1];
    NestedPair local =
        DensityPairSearch(e, current, level_t, r.epsilons[k - 1], M);
    NestedPair pair;
    pair.level = k;
    pair.j = (j_prev - 1) * M + local.j;
    pair.delta = Interval::Make(Rational(BigInt(pair.j - 1), P), Rational(pair.j, P));
    pair.delta_prime =
        Interval::Make(Rational(BigInt(pair.j + 1), P), Rational(BigInt(pair.j + 2), P));
    pair.density = local.density;
    if (pair.delta != local.delta || pair.delta_prime != local.delta_prime) {
      throw Error(ErrorCode::kNotFound, "global cell index mismatch");
    }
    const IntervalSet hit = Clip(e, pair.delta_prime);
    const auto b = MinPointAtLeast(hit, pair.delta_prime.lo);
    if (!b) throw Error(ErrorCode::kNotFound, "E misses delta'");
    r.b.push_back(*b);
    level_t -= r.epsilons[k - 1];
    current = pair.delta;
    j_prev = pair.j;
    r.pairs.push_back(std::move(pair));
  }

  std::vector<Breakpoint> bps;
  for (int k = depth; k-- > 0;) bps.push_back({r.a[k], r.b[k]});
  r.map = PiecewiseLinearMap(std::move(bps), Rational(1), Rational(1));

  std::vector<BigInt> js;
  for (const NestedPair& p : r.pairs) js.push_back(p.j);
  r.checks = CertifyUniform(prefix, e, depth, js, r.b);
  return r;
}

}  // namespace bilip
