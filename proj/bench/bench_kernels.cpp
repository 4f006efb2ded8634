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


#include <benchmark/benchmark.h>

#include "bilip/interval_set.hpp"
#include "bilip/kernels.hpp"

namespace {

using bilip::IntervalSet;
using bilip::Rational;

IntervalSet Grid(std::size_t l) {
  return bilip::kernels::serial::PuncturedGrid(
      l, Rational(1, static_cast<std::int64_t>(4 * l)));
}

IntervalSet Shifted(std::size_t l) {
  return bilip::kernels::serial::PuncturedGrid(
      l + 7, Rational(1, static_cast<std::int64_t>(3 * (l + 7))));
}

template <IntervalSet (*Op)(const IntervalSet&, const IntervalSet&)>
void BM_BoolOp(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const IntervalSet s = Grid(l);
  const IntervalSet t = Shifted(l);
  for (auto _ : state) benchmark::DoNotOptimize(Op(s, t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(l));
}

template <Rational (*Op)(const IntervalSet&)>
void BM_Measure(benchmark::State& state) {
  const IntervalSet s = Grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Op(s));
}

template <IntervalSet (*Op)(std::size_t, const Rational&)>
void BM_Grid(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const Rational d(1, static_cast<std::int64_t>(4 * l));
  for (auto _ : state) benchmark::DoNotOptimize(Op(l, d));
}

namespace s = bilip::kernels::serial;
namespace p = bilip::kernels::parallel;

BENCHMARK(BM_BoolOp<s::Intersect>)->Name("Intersect/serial")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_BoolOp<p::Intersect>)->Name("Intersect/parallel")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_BoolOp<s::Subtract>)->Name("Subtract/serial")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_BoolOp<p::Subtract>)->Name("Subtract/parallel")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_Measure<s::Measure>)->Name("Measure/serial")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_Measure<p::Measure>)->Name("Measure/parallel")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_Grid<s::PuncturedGrid>)->Name("PuncturedGrid/serial")->Range(1 << 12, 1 << 18);
BENCHMARK(BM_Grid<p::PuncturedGrid>)->Name("PuncturedGrid/parallel")->Range(1 << 12, 1 << 18);

}  // namespace

BENCHMARK_MAIN();
