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


#include "bilip/pl_map.hpp"

#include <algorithm>

#include "bilip/error.hpp"

namespace bilip {

PiecewiseLinearMap::PiecewiseLinearMap(std::vector<Breakpoint> breakpoints,
                                       Rational left_slope,
                                       Rational right_slope)
    : breakpoints_(std::move(breakpoints)),
      left_slope_(std::move(left_slope)),
      right_slope_(std::move(right_slope)) {
  if (breakpoints_.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "map needs a breakpoint");
  }
  if (left_slope_.sign() <= 0 || right_slope_.sign() <= 0) {
    throw Error(ErrorCode::kPreconditionViolated,
                "boundary slopes must be positive");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1].x < breakpoints_[i].x) ||
        !(breakpoints_[i - 1].y < breakpoints_[i].y)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "breakpoints not strictly increasing at x = " +
                      breakpoints_[i].x.ToString());
    }
  }
}

PiecewiseLinearMap PiecewiseLinearMap::Identity() {
  return PiecewiseLinearMap({Breakpoint{Rational(0), Rational(0)}},
                            Rational(1), Rational(1));
}

Rational PiecewiseLinearMap::Evaluate(const Rational& x) const {
  const Breakpoint& first = breakpoints_.front();
  const Breakpoint& last = breakpoints_.back();
  if (x <= first.x) return first.y - left_slope_ * (first.x - x);
  if (x >= last.x) return last.y + right_slope_ * (x - last.x);
  // first breakpoint with bp.x >= x; exists and is not the first one.
  auto hi = std::lower_bound(
      breakpoints_.begin(), breakpoints_.end(), x,
      [](const Breakpoint& b, const Rational& v) { return b.x < v; });
  if (hi->x == x) return hi->y;
  auto lo = std::prev(hi);
  return lo->y + (hi->y - lo->y) * (x - lo->x) / (hi->x - lo->x);
}

std::vector<Rational> PiecewiseLinearMap::SegmentSlopes() const {
  std::vector<Rational> out;
  out.reserve(breakpoints_.size());
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    out.push_back((breakpoints_[i].y - breakpoints_[i - 1].y) /
                  (breakpoints_[i].x - breakpoints_[i - 1].x));
  }
  return out;
}

std::pair<Rational, Rational> SlopeRange(const PiecewiseLinearMap& map) {
  Rational lo = Min(map.left_slope(), map.right_slope());
  Rational hi = Max(map.left_slope(), map.right_slope());
  for (Rational& s : map.SegmentSlopes()) {
    if (s < lo) lo = s;
    if (hi < s) hi = s;
  }
  return {lo, hi};
}

}  // namespace bilip
