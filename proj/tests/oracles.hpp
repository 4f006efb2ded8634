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


#ifndef BILIP_TESTS_ORACLES_HPP_
#define BILIP_TESTS_ORACLES_HPP_

// Independent reference computations used by the unit and acceptance
// tests. Nothing here calls the library's set algebra.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bilip/interval_set.hpp"
#include "bilip/rng.hpp"

namespace oracle {

using bilip::Interval;
using bilip::IntervalSet;
using bilip::Rational;

// Sets whose endpoints are multiples of 1/G, G = 2^bits, inside [0, 1].
// Point k/(2G) is "even" (k even) at lattice points and "odd" at cell
// midpoints; a closed set is determined by its trace on both.
struct Bitmap {
  std::uint64_t cells = 0;        // G
  std::vector<char> point;        // size 2G + 1, indexed by k for k/(2G)

  bool at(std::uint64_t k) const { return point[k] != 0; }

  // Measure = number of covered cells (odd points) / G.
  Rational measure() const {
    std::int64_t n = 0;
    for (std::uint64_t k = 1; k < point.size(); k += 2) n += point[k];
    return Rational(n, static_cast<std::int64_t>(cells));
  }
};

inline Bitmap Trace(const IntervalSet& s, std::uint64_t cells) {
  Bitmap b;
  b.cells = cells;
  b.point.assign(2 * cells + 1, 0);
  const Rational scale(static_cast<std::int64_t>(2 * cells));
  for (const Interval& c : s.components()) {
    // Points k/(2G) with lo <= k/(2G) <= hi.
    const bilip::BigInt first = (c.lo * scale).Ceil();
    const bilip::BigInt last = (c.hi * scale).Floor();
    for (bilip::BigInt k = first; k <= last; ++k) {
      if (k >= 0 && k <= static_cast<long>(2 * cells)) b.point[k.get_ui()] = 1;
    }
  }
  return b;
}

// Closed-set results of boolean operations on traces. For intersection
// and union the pointwise rule is exact. For S \ T the result is the
// closure: an odd point survives iff in S and not in T, and an even
// point is in the closure iff it survives on its own, or an odd
// neighbour survives, or it is an isolated point of S outside T.
inline Bitmap Combine(const Bitmap& s, const Bitmap& t, int op) {
  Bitmap r;
  r.cells = s.cells;
  r.point.assign(s.point.size(), 0);
  const std::size_t n = s.point.size();
  for (std::size_t k = 1; k < n; k += 2) {
    if (op == 0) r.point[k] = s.at(k) || t.at(k);
    if (op == 1) r.point[k] = s.at(k) && t.at(k);
    if (op == 2) r.point[k] = s.at(k) && !t.at(k);
  }
  for (std::size_t k = 0; k < n; k += 2) {
    if (op == 0) r.point[k] = s.at(k) || t.at(k);
    if (op == 1) r.point[k] = s.at(k) && t.at(k);
    if (op == 2) {
      const bool left = k > 0 && r.point[k - 1];
      const bool right = k + 1 < n && r.point[k + 1];
      r.point[k] = (s.at(k) && !t.at(k)) || left || right;
    }
  }
  return r;
}

// Random set on the 1/G lattice: `pieces` intervals (some degenerate).
inline IntervalSet RandomLatticeSet(bilip::Rng& rng, std::uint64_t cells,
                                    int pieces) {
  std::vector<Interval> raw;
  for (int i = 0; i < pieces; ++i) {
    std::uint64_t a = bilip::Uniform(rng, cells + 1);
    std::uint64_t b = bilip::Uniform(rng, 8) == 0
                          ? a
                          : std::min<std::uint64_t>(
                                cells, a + bilip::Uniform(rng, cells / 8 + 1));
    raw.push_back(Interval::Make(
        Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(cells)),
        Rational(static_cast<std::int64_t>(b), static_cast<std::int64_t>(cells))));
  }
  return IntervalSet::Of(std::move(raw));
}


// A translation-search instance on a lattice: I = [delta*u, v] is cut into
// 1024 cells, E ∩ I is a union of whole cells and every point is a cell
// boundary, so the least feasible shift is a whole number of cells.
struct TranslationInstance {
  int N = 1;
  Rational delta, u, v;
  Interval interval;
  Rational unit;                                   // L(I) / 1024
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;  // E ∩ I
  std::vector<std::int64_t> point_cells;
  IntervalSet e;
  std::vector<Rational> points;
};

inline constexpr std::int64_t kInstanceCells = 1024;

// Satisfies delta^(N-1) v <= u <= v and rho < N^-2 delta^N by construction.
inline TranslationInstance RandomTranslationInstance(bilip::Rng& rng) {
  using bilip::Uniform;
  TranslationInstance in;
  in.N = 1 + static_cast<int>(Uniform(rng, 3));
  in.delta = Rational(2 + static_cast<std::int64_t>(Uniform(rng, 6)), 8);
  in.v = Rational(1 + static_cast<std::int64_t>(Uniform(rng, 4)),
                  1 + static_cast<std::int64_t>(Uniform(rng, 4)));
  const Rational floor_u = bilip::Pow(in.delta, in.N - 1) * in.v;
  // u sits m cells right of delta*u: u (1 - delta) 1024 = m (v - delta u).
  for (;;) {
    const auto m = 1 + static_cast<std::int64_t>(Uniform(rng, kInstanceCells));
    const Rational u = Rational(m) * in.v /
                       (Rational(kInstanceCells) * (Rational(1) - in.delta) +
                        Rational(m) * in.delta);
    if (floor_u <= u && u <= in.v) {
      in.u = u;
      break;
    }
  }
  in.interval = Interval::Make(in.delta * in.u, in.v);
  in.unit = (in.v - in.delta * in.u) / Rational(kInstanceCells);
  const std::int64_t u_cell = ((in.u - in.interval.lo) / in.unit).Floor().get_si();

  // Remove fewer than 1024 * N^-2 delta^N cells.
  const Rational limit = Rational(kInstanceCells) *
                         bilip::Pow(in.delta, in.N) /
                         Rational(std::int64_t{in.N} * in.N);
  std::int64_t budget = limit.Ceil().get_si() - 1;
  std::vector<char> removed(kInstanceCells, 0);
  while (budget > 0) {
    const auto c = static_cast<std::int64_t>(Uniform(rng, kInstanceCells));
    const auto len = std::min<std::int64_t>(
        budget, 1 + static_cast<std::int64_t>(Uniform(rng, 3)));
    for (std::int64_t i = c; i < std::min(c + len, kInstanceCells); ++i) {
      if (!removed[i]) {
        removed[i] = 1;
        --budget;
      }
    }
    if (Uniform(rng, 3) == 0) break;
  }
  std::vector<Interval> raw;
  for (std::int64_t i = 0; i < kInstanceCells;) {
    if (removed[i]) {
      ++i;
      continue;
    }
    std::int64_t j = i;
    while (j < kInstanceCells && !removed[j]) ++j;
    in.cells.emplace_back(i, j);
    raw.push_back(Interval::Make(in.interval.lo + Rational(i) * in.unit,
                                 in.interval.lo + Rational(j) * in.unit));
    i = j;
  }
  // Material outside I must be ignored by the search.
  raw.push_back(Interval::Make(in.v + in.unit, in.v + Rational(2)));
  raw.push_back(Interval::Make(Rational(0), in.interval.lo / Rational(2)));
  in.e = IntervalSet::Of(std::move(raw));

  const auto count = 1 + static_cast<int>(Uniform(rng, in.N));
  for (int i = 0; i < count; ++i) {
    const auto c = u_cell + static_cast<std::int64_t>(
                                Uniform(rng, kInstanceCells - u_cell + 1));
    in.point_cells.push_back(c);
    in.points.push_back(in.interval.lo + Rational(c) * in.unit);
  }
  // u itself need not be a cell boundary; keep points inside [u, v].
  for (std::size_t i = 0; i < in.points.size(); ++i) {
    if (in.points[i] < in.u) {
      in.point_cells[i] += 1;
      in.points[i] += in.unit;
    }
  }
  return in;
}

// Least whole number of cells m with m * unit <= bound and every point
// shifted left by m cells inside E ∩ I.
inline std::optional<Rational> LatticeLeastShift(const TranslationInstance& in,
                                                 const Rational& bound) {
  for (std::int64_t m = 0; Rational(m) * in.unit <= bound; ++m) {
    bool ok = true;
    for (std::int64_t x : in.point_cells) {
      bool inside = false;
      for (const auto& [lo, hi] : in.cells) inside |= lo <= x - m && x - m <= hi;
      ok &= inside;
    }
    if (ok) return Rational(m) * in.unit;
  }
  return std::nullopt;
}

// Grid brute force over t = j * bound / 2^bits, j = 0..2^bits: for every
// point and cell run the feasible j form an interval; returns the least j
// feasible for all points.
inline std::optional<std::int64_t> GridLeastShift(const TranslationInstance& in,
                                                  const Rational& bound,
                                                  int bits) {
  const std::int64_t grid = std::int64_t{1} << bits;
  std::vector<int> hits(grid + 1, 0);
  const Rational step = bound / Rational(grid);
  for (const Rational& x : in.points) {
    std::vector<int> diff(grid + 2, 0);
    for (const auto& [lo, hi] : in.cells) {
      const Rational left = x - (in.interval.lo + Rational(hi) * in.unit);
      const Rational right = x - (in.interval.lo + Rational(lo) * in.unit);
      const bilip::BigInt c0 = (left / step).Ceil();
      const bilip::BigInt c1 = (right / step).Floor();
      if (c1 < 0 || c0 > grid) continue;
      const std::int64_t j0 = c0 < 0 ? 0 : c0.get_si();
      const std::int64_t j1 = c1 > grid ? grid : c1.get_si();
      if (j0 > j1) continue;
      diff[j0] += 1;
      diff[j1 + 1] -= 1;
    }
    int run = 0;
    for (std::int64_t j = 0; j <= grid; ++j) {
      run += diff[j];
      if (run > 0) ++hits[j];
    }
  }
  for (std::int64_t j = 0; j <= grid; ++j) {
    if (hits[j] == static_cast<int>(in.points.size())) return j;
  }
  return std::nullopt;
}

}  // namespace oracle

#endif  // BILIP_TESTS_ORACLES_HPP_
