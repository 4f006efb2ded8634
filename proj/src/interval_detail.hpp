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


#ifndef BILIP_SRC_INTERVAL_DETAIL_HPP_
#define BILIP_SRC_INTERVAL_DETAIL_HPP_

#include <span>
#include <vector>

#include "bilip/interval_set.hpp"

namespace bilip::detail {

// Merge-pass bodies shared by the serial and parallel kernels. Both
// inputs are canonical; output is appended in canonical order.
void IntersectRange(std::span<const Interval> s, std::span<const Interval> t,
                    std::vector<Interval>& out);
void SubtractRange(std::span<const Interval> s, std::span<const Interval> t,
                   std::vector<Interval>& out);

// Components of t that can meet [lo, hi].
std::span<const Interval> Overlapping(std::span<const Interval> t,
                                      const Rational& lo, const Rational& hi);

}  // namespace bilip::detail

#endif  // BILIP_SRC_INTERVAL_DETAIL_HPP_
