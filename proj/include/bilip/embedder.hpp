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


#ifndef BILIP_EMBEDDER_HPP_
#define BILIP_EMBEDDER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bilip/certificate.hpp"
#include "bilip/interval_set.hpp"
#include "bilip/pl_map.hpp"
#include "bilip/sequences.hpp"

// Embedding of fast-decaying sequences into a set of positive measure:
// block decomposition, the translation search, and the resulting
// piecewise-linear bi-Lipschitz map.
namespace bilip {

struct EmbedParams {
  Rational delta;  // in (0, 1)
  int N = 1;
};

// Checks 0 < delta < 1, N >= 1 and a_{n+N}/a_n < delta^N on the whole
// prefix; throws kRatioHypothesisFails (or kPreconditionViolated for the
// ranges) otherwise.
EmbedParams MakeEmbedParams(const SequencePrefix& prefix, Rational delta,
                            int N);

// Indices first..last (1-based, inclusive) with u = a_last,
// v = a_first and I = [delta*u, v]. The block after the last qualifying
// index has no successor in the prefix and is marked terminal.
struct Block {
  int k = 0;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  Rational u;
  Rational v;
  Interval interval;
  bool terminal = false;

  std::uint64_t size() const { return last - first + 1; }
};

struct BlockDecomposition {
  EmbedParams params;
  std::vector<std::uint64_t> block_ends;  // n_1 < n_2 < ... (qualifying)
  std::vector<Block> blocks;              // k = 1, 2, ...
};

// Splits the prefix at the indices n with a_{n+1}/a_n < delta. Block 1
// starts at index 1. Throws kRatioHypothesisFails if the parameters do not
// hold on the prefix.
BlockDecomposition DecomposeBlocks(const SequencePrefix& prefix,
                                   const EmbedParams& params);

// (1 - delta) N^2 delta^-N rho u: the largest shift the translation search
// may need.
Rational TranslationBound(const EmbedParams& params, const Rational& rho,
                          const Rational& u);

// Least t >= 0 with x_i - t in E ∩ I for every point. I = [delta*u, v]
// must satisfy 0 < delta^(N-1) v <= u <= v, the points must lie in [u, v]
// (at most N of them) and rho = 1 - density of E in I must be below
// N^-2 delta^N. Throws kPreconditionViolated naming the failed inequality,
// or kInfeasible (an internal error) if no t <= TranslationBound exists.
Rational TranslationSearch(const IntervalSet& e, const Interval& interval,
                           std::span<const Rational> points,
                           const EmbedParams& params);

struct EmbeddingResult {
  BlockDecomposition decomposition;
  std::vector<Rational> a;
  std::vector<Rational> b;  // b_n = f(a_n)
  std::vector<Rational> rho;                 // per block
  std::vector<std::optional<Rational>> t;    // per block; set for k > p
  std::vector<Rational> t_bound;             // per block
  int p = 1;                                 // first block with small rho
  std::vector<Rational> slope_deviation;     // |slope_n - 1|, n < L
  PiecewiseLinearMap map = PiecewiseLinearMap::Identity();
  Certificates checks;
};

// Runs the full construction on E, which the caller must already have
// anchored at 0. Throws kDensityTooLow when no block index p has
// rho_k < N^-2 delta^N for all k >= p, and kHeadSelectionFails when
// E ∩ (v_p, ∞) cannot host the first n_p points.
EmbeddingResult BuildEmbedding(const SequencePrefix& prefix,
                               const IntervalSet& e,
                               const EmbedParams& params);

// Re-derives blocks, rho_k and p from scratch and checks the images b_n
// (one per prefix term) against every inequality of the construction.
Certificates CertifyEmbedding(const SequencePrefix& prefix,
                              const IntervalSet& e, const EmbedParams& params,
                              std::span<const Rational> b);

}  // namespace bilip

#endif  // BILIP_EMBEDDER_HPP_
