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


#ifndef BILIP_KERNELS_HPP_
#define BILIP_KERNELS_HPP_

#include <cstddef>

#include "bilip/interval_set.hpp"

// Hot loops over large interval unions. Each kernel has a serial reference
// version and an OpenMP version that must produce identical output; the
// public operations in interval_set.hpp dispatch on input size.
namespace bilip::kernels {

// Below this many components the parallel kernels fall back to serial.
inline constexpr std::size_t kParallelThreshold = 1 << 12;

namespace serial {

IntervalSet Intersect(const IntervalSet& s, const IntervalSet& t);
IntervalSet Subtract(const IntervalSet& s, const IntervalSet& t);
Rational Measure(const IntervalSet& s);

// [0,1] minus the open gaps (j/l - d/2, j/l + d/2), j = 0..l. Requires
// 0 < d < 1/l.
IntervalSet PuncturedGrid(std::size_t l, const Rational& d);

}  // namespace serial

namespace parallel {

IntervalSet Intersect(const IntervalSet& s, const IntervalSet& t);
IntervalSet Subtract(const IntervalSet& s, const IntervalSet& t);
Rational Measure(const IntervalSet& s);
IntervalSet PuncturedGrid(std::size_t l, const Rational& d);

}  // namespace parallel

// Number of OpenMP threads the parallel kernels will use.
int ThreadCount();

}  // namespace bilip::kernels

#endif  // BILIP_KERNELS_HPP_
