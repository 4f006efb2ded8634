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


#ifndef BILIP_GLUER_HPP_
#define BILIP_GLUER_HPP_

#include <vector>

#include "bilip/certificate.hpp"
#include "bilip/interval_set.hpp"
#include "bilip/pl_map.hpp"
#include "bilip/sequences.hpp"
#include "bilip/uniform.hpp"

// Gluing uniform embeddings at the triadic scales [3^-n, 2*3^-n] into one
// bi-Lipschitz map near a density point at 0.
namespace bilip {

// g^-1 ∘ map ∘ g for g(x) = scale*x + shift. Requires scale > 0.
PiecewiseLinearMap Conjugate(const PiecewiseLinearMap& map,
                             const Rational& scale, const Rational& shift);

// Density of E in [3^-n, 2*3^-n].
Rational ScaleDensity(const IntervalSet& e, int n);

// Smallest N < n_max with ScaleDensity(E, n) > 1/2 + 4 delta for every
// N < n <= n_max. Throws kNoAdmissibleScale when even n = n_max fails.
int FindDensityScale(const IntervalSet& e, const Rational& delta, int n_max);

struct GluedScale {
  int n = 0;
  UniformEmbeddingResult f;
  PiecewiseLinearMap h = PiecewiseLinearMap::Identity();  // conjugated f
};

struct Connector {
  Interval domain;  // [3^-(n+1) (1 + a_1), 3^-n]
  Rational slope;
};

struct GluedMap {
  int N = 0;
  int n_max = 0;
  Rational delta;
  std::vector<GluedScale> scales;  // n = N+1 .. n_max
  std::vector<Connector> connectors;
  PiecewiseLinearMap h = PiecewiseLinearMap::Identity();
  PiecewiseLinearMap H = PiecewiseLinearMap::Identity();  // H(x) = h(3^-N x)
  // 3^-m (1 + a_j) for m = 1..n_max-N: the part of F that H sends into E.
  std::vector<Rational> target_points;
  Certificates checks;
  // Whether slope_range(H) itself lies in [1/2, 3/(1-delta)]; the scaled
  // range is what the checks certify, so this only holds for N = 0.
  bool unscaled_H_in_range = false;
};

// Throws kDeltaTooLarge, kNoAdmissibleScale, errors from BuildUniform, and
// kConnectorSlopeOutOfRange (an internal error).
GluedMap BuildGlued(const SequencePrefix& prefix, const IntervalSet& e,
                    int n_max);

// x -> h(3^-N x).
PiecewiseLinearMap Rescale(const PiecewiseLinearMap& h, int N);

// Checks memberships, endpoint placement, connector slopes and both slope
// ranges of a glued map h from scratch.
Certificates CertifyGlued(const SequencePrefix& prefix, const IntervalSet& e,
                          int n_max, int N, const PiecewiseLinearMap& h);

}  // namespace bilip

#endif  // BILIP_GLUER_HPP_
