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


#ifndef BILIP_PL_MAP_HPP_
#define BILIP_PL_MAP_HPP_

#include <span>
#include <utility>
#include <vector>

#include "bilip/rational.hpp"

namespace bilip {

struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Strictly increasing continuous piecewise-linear map of the line:
// linear interpolation between breakpoints, boundary slopes outside them.
class PiecewiseLinearMap {
 public:
  // Throws kPreconditionViolated unless there is at least one breakpoint,
  // x and y are strictly increasing and both boundary slopes are positive.
  PiecewiseLinearMap(std::vector<Breakpoint> breakpoints, Rational left_slope,
                     Rational right_slope);

  static PiecewiseLinearMap Identity();

  std::span<const Breakpoint> breakpoints() const { return breakpoints_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }

  Rational operator()(const Rational& x) const { return Evaluate(x); }
  Rational Evaluate(const Rational& x) const;

  // Slopes of the bounded segments, left to right.
  std::vector<Rational> SegmentSlopes() const;

  friend bool operator==(const PiecewiseLinearMap&,
                         const PiecewiseLinearMap&) = default;

 private:
  std::vector<Breakpoint> breakpoints_;
  Rational left_slope_;
  Rational right_slope_;
};

// (min, max) over all segment and boundary slopes. For an increasing
// piecewise-linear map these are the optimal lower and upper bi-Lipschitz
// constants.
std::pair<Rational, Rational> SlopeRange(const PiecewiseLinearMap& map);

}  // namespace bilip

#endif  // BILIP_PL_MAP_HPP_
