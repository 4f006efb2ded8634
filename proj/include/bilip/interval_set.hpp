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


#ifndef BILIP_INTERVAL_SET_HPP_
#define BILIP_INTERVAL_SET_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bilip/rational.hpp"

namespace bilip {

// Closed interval [lo, hi]; lo == hi is a single point of measure zero.
struct Interval {
  Rational lo;
  Rational hi;

  // Throws Error(kMalformedInterval) when lo > hi.
  static Interval Make(Rational lo, Rational hi);

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool degenerate() const { return lo == hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of closed rational intervals in canonical form: sorted,
// pairwise disjoint and non-adjacent (hi_i < lo_{i+1}). Immutable.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Canonical union of arbitrary intervals (see Normalize).
  static IntervalSet Of(std::vector<Interval> raw);
  static IntervalSet Single(const Rational& lo, const Rational& hi);

  // Wraps components that are already canonical. Only checked in debug
  // builds; callers inside the library use it after a merge pass.
  static IntervalSet FromCanonical(std::vector<Interval> components);

  std::span<const Interval> components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  bool contains(const Rational& x) const;

  // Smallest closed interval containing the set. Requires !empty().
  Interval hull() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> components)
      : components_(std::move(components)) {}

  std::vector<Interval> components_;
};

// Sorts and merges overlapping or touching intervals. Degenerate intervals
// survive unless they are covered. Throws kMalformedInterval on lo > hi.
IntervalSet Normalize(std::vector<Interval> raw);

enum class BoolOp { kUnion, kIntersect, kSubtract };

// Exact point-set operations on closed sets. kSubtract returns the closure
// of S \ T; measures are unaffected by that convention.
IntervalSet BooleanOp(BoolOp kind, const IntervalSet& s, const IntervalSet& t);
IntervalSet Unite(const IntervalSet& s, const IntervalSet& t);
IntervalSet Intersect(const IntervalSet& s, const IntervalSet& t);
IntervalSet Subtract(const IntervalSet& s, const IntervalSet& t);

// S ∩ I, by binary search on S's components.
IntervalSet Clip(const IntervalSet& s, const Interval& i);

Rational Measure(const IntervalSet& s);

// L(S ∩ [lo, hi]) without materializing the intersection.
Rational MeasureWithin(const IntervalSet& s, const Rational& lo,
                       const Rational& hi);

// {scale * x + shift : x in S}. Throws kZeroScale for scale == 0.
IntervalSet AffineImage(const IntervalSet& s, const Rational& scale,
                        const Rational& shift);

// Least element of S ∩ [x0, ∞), if any.
std::optional<Rational> MinPointAtLeast(const IntervalSet& s,
                                        const Rational& x0);

// L(S ∩ I) / L(I). Throws kDegenerateInterval when L(I) = 0.
Rational DensityWithin(const IntervalSet& s, const Interval& i);

enum class CantorMode { kMiddle, kRandom };

// Fat-Cantor style generator: at level i every current component keeps the
// fraction keep[i] of its length and loses one open gap. kMiddle centres
// the gap; kRandom places it at a seeded position strictly inside. The
// measure is L(base) * prod(keep) exactly. Throws kBadFraction unless every
// fraction lies in (0, 1).
IntervalSet FatCantor(std::span<const Rational> keep, const Interval& base,
                      std::uint64_t seed, CantorMode mode = CantorMode::kRandom);

// base minus `gaps` disjoint open gaps of total length `removed`, at seeded
// positions strictly inside base. Measure is L(base) - removed exactly.
IntervalSet RandomGaps(const Interval& base, int gaps, const Rational& removed,
                       std::uint64_t seed);

}  // namespace bilip

#endif  // BILIP_INTERVAL_SET_HPP_
