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


#include "bilip/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <vector>

#include "interval_detail.hpp"

namespace bilip::kernels {

int ThreadCount() { return omp_get_max_threads(); }

namespace serial {

IntervalSet Intersect(const IntervalSet& s, const IntervalSet& t) {
  std::vector<Interval> out;
  out.reserve(std::max(s.size(), t.size()));
  detail::IntersectRange(s.components(), t.components(), out);
  return IntervalSet::FromCanonical(std::move(out));
}

IntervalSet Subtract(const IntervalSet& s, const IntervalSet& t) {
  std::vector<Interval> out;
  out.reserve(s.size() + t.size());
  detail::SubtractRange(s.components(), t.components(), out);
  return IntervalSet::FromCanonical(std::move(out));
}

Rational Measure(const IntervalSet& s) {
  Rational total;
  for (const Interval& c : s.components()) total += c.length();
  return total;
}

IntervalSet PuncturedGrid(std::size_t l, const Rational& d) {
  const Rational half = d / Rational(2);
  std::vector<Interval> out;
  out.reserve(l);
  for (std::size_t j = 0; j < l; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    const auto ll = static_cast<std::int64_t>(l);
    out.push_back(Interval{Rational(jj, ll) + half,
                           Rational(jj + 1, ll) - half});
  }
  return IntervalSet::FromCanonical(std::move(out));
}

}  // namespace serial

namespace parallel {

namespace {

// Splits s into contiguous chunks, runs `body` on each chunk against the
// part of t it can touch, and concatenates the chunk outputs in order.
// Chunks cover disjoint coordinate ranges, so the concatenation is
// canonical whenever each chunk output is.
template <typename Body>
IntervalSet Chunked(const IntervalSet& s, const IntervalSet& t, Body body) {
  auto sc = s.components();
  auto tc = t.components();
  const int chunks = std::max(1, ThreadCount() * 4);
  const std::size_t step = (sc.size() + chunks - 1) / chunks;
  std::vector<std::vector<Interval>> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const std::size_t lo = std::min(sc.size(), step * c);
    const std::size_t hi = std::min(sc.size(), lo + step);
    if (lo == hi) continue;
    auto mine = sc.subspan(lo, hi - lo);
    auto theirs = detail::Overlapping(tc, mine.front().lo, mine.back().hi);
    body(mine, theirs, parts[c]);
  }
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Interval> out;
  out.reserve(total);
  for (auto& p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(out));
  }
  return IntervalSet::FromCanonical(std::move(out));
}

}  // namespace

IntervalSet Intersect(const IntervalSet& s, const IntervalSet& t) {
  return Chunked(s, t, detail::IntersectRange);
}

IntervalSet Subtract(const IntervalSet& s, const IntervalSet& t) {
  return Chunked(s, t, detail::SubtractRange);
}

Rational Measure(const IntervalSet& s) {
  auto sc = s.components();
  const int threads = ThreadCount();
  std::vector<Rational> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    const int id = omp_get_thread_num();
    Rational local;
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < sc.size(); ++i) local += sc[i].length();
    partial[id] = std::move(local);
  }
  Rational total;
  for (const auto& p : partial) total += p;
  return total;
}

IntervalSet PuncturedGrid(std::size_t l, const Rational& d) {
  const Rational half = d / Rational(2);
  const auto ll = static_cast<std::int64_t>(l);
  std::vector<Interval> out(l);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < ll; ++j) {
    out[j] = Interval{Rational(j, ll) + half, Rational(j + 1, ll) - half};
  }
  return IntervalSet::FromCanonical(std::move(out));
}

}  // namespace parallel

}  // namespace bilip::kernels
