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


#ifndef BILIP_UNIFORM_HPP_
#define BILIP_UNIFORM_HPP_

#include <span>
#include <vector>

#include "bilip/certificate.hpp"
#include "bilip/interval_set.hpp"
#include "bilip/pl_map.hpp"
#include "bilip/sequences.hpp"

// Embeddings with constants [1/2, 3/(1-delta)] that do not depend on the
// target set, for sequences with a_1 + sum a_{n+1}/a_n < 1/8.
namespace bilip {

struct MSequence {
  std::vector<BigInt> M;                 // even, M_1 = 2 ceil(1/(2 a_1))
  std::vector<BigInt> partial_products;  // M_1 ... M_n
  Rational delta_sum;
  Certificates checks;
};

// Throws kDeltaTooLarge when the delta sum exceeds 1/4 and kRatioTooLarge
// when some a_{k+1}/a_k exceeds 1/4.
MSequence ComputeMSequence(const SequencePrefix& prefix);

struct NestedPair {
  int level = 0;
  BigInt j;  // global index at this level
  Interval delta;        // [j-1, j] / (M_1 ... M_k)
  Interval delta_prime;  // [j+1, j+2] / (M_1 ... M_k)
  Rational density;      // density of E in `delta`
};

// Smallest j in [1, M-2] such that the j-th of M equal cells of I has
// density >= t - eps and the (j+2)-th meets E in positive measure. Only
// cells holding a component endpoint are inspected one by one; the runs
// between them are uniformly full or empty, so M may be astronomically
// large. The returned pair has level 0 and I-local cells.
// Throws kPreconditionViolated naming the failed inequality, or kNotFound
// (an internal error) if no j exists.
NestedPair DensityPairSearch(const IntervalSet& e, const Interval& interval,
                             const Rational& t, const Rational& eps,
                             const BigInt& M);

struct UniformEmbeddingResult {
  MSequence msequence;
  std::vector<NestedPair> pairs;  // levels 1..depth
  std::vector<Rational> a;        // a_1..a_depth
  std::vector<Rational> b;        // b_k in E ∩ delta_prime_k
  PiecewiseLinearMap map = PiecewiseLinearMap::Identity();
  Rational delta;  // delta sum over the prefix
  Rational eta;
  Rational t_threshold;
  std::vector<Rational> epsilons;
  Certificates checks;
};

// Throws kDepthExceedsPrefix, kDeltaTooLarge (delta >= 1/8),
// kMeasureTooSmall (measure(E) <= 1/2 + 4 delta) and kPreconditionViolated
// when E is not inside [0, 1].
UniformEmbeddingResult BuildUniform(const SequencePrefix& prefix,
                                    const IntervalSet& e, int depth);

// Recomputes M_n, eta, t and eps_n from scratch, rebuilds the cells from
// the global indices j_k and checks the images b_k.
Certificates CertifyUniform(const SequencePrefix& prefix, const IntervalSet& e,
                            int depth, std::span<const BigInt> j,
                            std::span<const Rational> b);

}  // namespace bilip

#endif  // BILIP_UNIFORM_HPP_
