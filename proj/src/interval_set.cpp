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


#include "bilip/interval_set.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "bilip/error.hpp"
#include "bilip/kernels.hpp"
#include "bilip/rng.hpp"
#include "interval_detail.hpp"

namespace bilip {

Interval Interval::Make(Rational lo, Rational hi) {
  if (lo > hi) {
    throw Error(ErrorCode::kMalformedInterval,
                "[" + lo.ToString() + ", " + hi.ToString() + "]");
  }
  return Interval{std::move(lo), std::move(hi)};
}

IntervalSet IntervalSet::Of(std::vector<Interval> raw) {
  return Normalize(std::move(raw));
}

IntervalSet IntervalSet::Single(const Rational& lo, const Rational& hi) {
  return IntervalSet({Interval::Make(lo, hi)});
}

IntervalSet IntervalSet::FromCanonical(std::vector<Interval> components) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < components.size(); ++i) {
    assert(components[i].lo <= components[i].hi);
    if (i > 0) assert(components[i - 1].hi < components[i].lo);
  }
#endif
  return IntervalSet(std::move(components));
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::lower_bound(
      components_.begin(), components_.end(), x,
      [](const Interval& c, const Rational& v) { return c.hi < v; });
  return it != components_.end() && it->lo <= x;
}

Interval IntervalSet::hull() const {
  assert(!components_.empty());
  return Interval{components_.front().lo, components_.back().hi};
}

IntervalSet Normalize(std::vector<Interval> raw) {
  for (const auto& i : raw) {
    if (i.lo > i.hi) {
      throw Error(ErrorCode::kMalformedInterval,
                  "[" + i.lo.ToString() + ", " + i.hi.ToString() + "]");
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo;
  });
  std::vector<Interval> out;
  out.reserve(raw.size());
  for (auto& i : raw) {
    if (!out.empty() && i.lo <= out.back().hi) {
      if (out.back().hi < i.hi) out.back().hi = std::move(i.hi);
    } else {
      out.push_back(std::move(i));
    }
  }
  return IntervalSet::FromCanonical(std::move(out));
}

namespace detail {

std::span<const Interval> Overlapping(std::span<const Interval> t,
                                      const Rational& lo, const Rational& hi) {
  auto first = std::lower_bound(
      t.begin(), t.end(), lo,
      [](const Interval& c, const Rational& v) { return c.hi < v; });
  auto last = std::upper_bound(
      first, t.end(), hi,
      [](const Rational& v, const Interval& c) { return v < c.lo; });
  return {first, last};
}

void IntersectRange(std::span<const Interval> s, std::span<const Interval> t,
                    std::vector<Interval>& out) {
  std::size_t i = 0, j = 0;
  while (i < s.size() && j < t.size()) {
    const Rational& lo = Max(s[i].lo, t[j].lo);
    const Rational& hi = Min(s[i].hi, t[j].hi);
    if (lo <= hi) out.push_back(Interval{lo, hi});
    if (s[i].hi < t[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
}

namespace {

// Appends [lo, hi], fusing with the previous piece when they touch. Pieces
// of one S-component touch only across a removed single point.
void PushFused(std::vector<Interval>& out, std::size_t floor, Rational lo,
               Rational hi) {
  if (out.size() > floor && out.back().hi == lo) {
    out.back().hi = std::move(hi);
  } else {
    out.push_back(Interval{std::move(lo), std::move(hi)});
  }
}

}  // namespace

void SubtractRange(std::span<const Interval> s, std::span<const Interval> t,
                   std::vector<Interval>& out) {
  std::size_t j = 0;
  for (const Interval& c : s) {
    while (j < t.size() && t[j].hi < c.lo) ++j;
    if (c.degenerate()) {
      if (j == t.size() || c.lo < t[j].lo) out.push_back(c);
      continue;
    }
    const std::size_t floor = out.size();
    Rational cur = c.lo;
    // Only the last T component met here can reach past c.hi, and then the
    // loop breaks on it, so j = k is the right resume point either way.
    std::size_t k = j;
    for (; k < t.size() && t[k].lo <= c.hi; ++k) {
      if (t[k].lo > cur) PushFused(out, floor, cur, t[k].lo);
      if (cur < t[k].hi) cur = t[k].hi;
      if (cur >= c.hi) break;
    }
    if (cur < c.hi) PushFused(out, floor, cur, c.hi);
    j = k;
  }
}

}  // namespace detail

IntervalSet BooleanOp(BoolOp kind, const IntervalSet& s, const IntervalSet& t) {
  switch (kind) {
    case BoolOp::kUnion:
      return Unite(s, t);
    case BoolOp::kIntersect:
      return Intersect(s, t);
    case BoolOp::kSubtract:
      return Subtract(s, t);
  }
  return {};
}

IntervalSet Unite(const IntervalSet& s, const IntervalSet& t) {
  auto a = s.components();
  auto b = t.components();
  std::vector<Interval> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const bool take_a = j == b.size() || (i < a.size() && a[i].lo <= b[j].lo);
    const Interval& next = take_a ? a[i++] : b[j++];
    if (!out.empty() && next.lo <= out.back().hi) {
      if (out.back().hi < next.hi) out.back().hi = next.hi;
    } else {
      out.push_back(next);
    }
  }
  return IntervalSet::FromCanonical(std::move(out));
}

IntervalSet Intersect(const IntervalSet& s, const IntervalSet& t) {
  if (s.size() + t.size() >= kernels::kParallelThreshold) {
    return kernels::parallel::Intersect(s, t);
  }
  return kernels::serial::Intersect(s, t);
}

IntervalSet Subtract(const IntervalSet& s, const IntervalSet& t) {
  if (s.size() + t.size() >= kernels::kParallelThreshold) {
    return kernels::parallel::Subtract(s, t);
  }
  return kernels::serial::Subtract(s, t);
}

IntervalSet Clip(const IntervalSet& s, const Interval& i) {
  auto range = detail::Overlapping(s.components(), i.lo, i.hi);
  std::vector<Interval> out;
  out.reserve(range.size());
  for (const Interval& c : range) {
    out.push_back(Interval{Max(c.lo, i.lo), Min(c.hi, i.hi)});
  }
  return IntervalSet::FromCanonical(std::move(out));
}

Rational Measure(const IntervalSet& s) {
  if (s.size() >= kernels::kParallelThreshold) {
    return kernels::parallel::Measure(s);
  }
  return kernels::serial::Measure(s);
}

Rational MeasureWithin(const IntervalSet& s, const Rational& lo,
                       const Rational& hi) {
  Rational total;
  if (hi < lo) return total;
  for (const Interval& c : detail::Overlapping(s.components(), lo, hi)) {
    total += Min(c.hi, hi) - Max(c.lo, lo);
  }
  return total;
}

IntervalSet AffineImage(const IntervalSet& s, const Rational& scale,
                        const Rational& shift) {
  if (scale.is_zero()) throw Error(ErrorCode::kZeroScale, "affine image");
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const Interval& c : s.components()) {
    Rational a = scale * c.lo + shift;
    Rational b = scale * c.hi + shift;
    if (scale.sign() > 0) {
      out.push_back(Interval{std::move(a), std::move(b)});
    } else {
      out.push_back(Interval{std::move(b), std::move(a)});
    }
  }
  if (scale.sign() < 0) std::reverse(out.begin(), out.end());
  return IntervalSet::FromCanonical(std::move(out));
}

std::optional<Rational> MinPointAtLeast(const IntervalSet& s,
                                        const Rational& x0) {
  auto comps = s.components();
  auto it = std::lower_bound(
      comps.begin(), comps.end(), x0,
      [](const Interval& c, const Rational& v) { return c.hi < v; });
  if (it == comps.end()) return std::nullopt;
  return Max(it->lo, x0);
}

Rational DensityWithin(const IntervalSet& s, const Interval& i) {
  const Rational len = i.length();
  if (len.sign() <= 0) {
    throw Error(ErrorCode::kDegenerateInterval,
                "density over [" + i.lo.ToString() + ", " + i.hi.ToString() +
                    "]");
  }
  return MeasureWithin(s, i.lo, i.hi) / len;
}

IntervalSet FatCantor(std::span<const Rational> keep, const Interval& base,
                      std::uint64_t seed, CantorMode mode) {
  for (const Rational& f : keep) {
    if (f.sign() <= 0 || f >= Rational(1)) {
      throw Error(ErrorCode::kBadFraction,
                  "keep fraction " + f.ToString() + " not in (0,1)");
    }
  }
  constexpr std::uint64_t kGrid = 1024;
  Rng rng(seed);
  std::vector<Interval> current{base};
  for (const Rational& f : keep) {
    std::vector<Interval> next;
    next.reserve(current.size() * 2);
    for (const Interval& c : current) {
      const Rational len = c.length();
      if (len.is_zero()) {
        next.push_back(c);
        continue;
      }
      const Rational gap = (Rational(1) - f) * len;
      const Rational slack = len - gap;
      Rational offset =
          mode == CantorMode::kMiddle
              ? slack / Rational(2)
              : slack * Rational(static_cast<std::int64_t>(
                                     1 + Uniform(rng, kGrid - 1)),
                                 static_cast<std::int64_t>(kGrid));
      Rational cut = c.lo + offset;
      Rational resume = cut + gap;
      next.push_back(Interval{c.lo, cut});
      next.push_back(Interval{std::move(resume), c.hi});
    }
    current = std::move(next);
  }
  return IntervalSet::FromCanonical(std::move(current));
}

IntervalSet RandomGaps(const Interval& base, int gaps, const Rational& removed,
                       std::uint64_t seed) {
  const Rational len = base.length();
  if (gaps < 0 || removed.sign() < 0 || removed >= len ||
      (gaps == 0) != removed.is_zero()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "RandomGaps needs 0 <= removed < L(base) and gaps > 0 iff "
                "removed > 0");
  }
  if (gaps == 0) return IntervalSet::FromCanonical({base});
  constexpr std::uint64_t kSpread = 1000;
  Rng rng(seed);
  auto weights = [&](std::size_t n) {
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(Uniform(rng, kSpread));
    return w;
  };
  const auto gap_w = weights(static_cast<std::size_t>(gaps));
  const auto piece_w = weights(static_cast<std::size_t>(gaps) + 1);
  const std::int64_t gap_total =
      std::accumulate(gap_w.begin(), gap_w.end(), std::int64_t{0});
  const std::int64_t piece_total =
      std::accumulate(piece_w.begin(), piece_w.end(), std::int64_t{0});
  const Rational kept = len - removed;

  std::vector<Interval> out;
  out.reserve(piece_w.size());
  Rational x = base.lo;
  for (std::size_t i = 0; i < piece_w.size(); ++i) {
    Rational end = i + 1 == piece_w.size()
                       ? base.hi
                       : x + kept * Rational(piece_w[i], piece_total);
    out.push_back(Interval{x, end});
    if (i < gap_w.size()) x = end + removed * Rational(gap_w[i], gap_total);
  }
  return IntervalSet::FromCanonical(std::move(out));
}

}  // namespace bilip
