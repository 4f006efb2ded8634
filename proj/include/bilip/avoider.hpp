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


#ifndef BILIP_AVOIDER_HPP_
#define BILIP_AVOIDER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "bilip/certificate.hpp"
#include "bilip/interval_set.hpp"
#include "bilip/sequences.hpp"

// Sets of positive measure that no bi-Lipschitz image of a slowly decaying
// sequence fits into, together with finite, exactly checked refutations.
namespace bilip {

// n_1 = 1, n_{k+1} = min{p > n_k : a_{n_k} - a_p >= t_{n_k}} where t_n is
// the largest gap at or after n. `gap_sups[i]` is t at `indices[i]` for
// every index <= horizon; `indices` carries one extra entry, the successor
// of the last index <= horizon.
struct GapSubsequence {
  std::vector<std::uint64_t> indices;
  std::vector<Rational> gap_sups;
  std::uint64_t horizon = 0;
};

// Throws kSupNotAttainedInPrefix when some t_n with n <= horizon cannot be
// shown to be attained inside the prefix, and kPrefixTooShort when
// horizon >= prefix length.
GapSubsequence ComputeGapSubsequence(const SequencePrefix& prefix,
                                     std::uint64_t horizon);

// E_k = [0,1] minus the open gaps of width delta centred at j/ell,
// j = 0..ell.
struct AvoidanceRow {
  int k = 0;
  std::uint64_t n = 0;  // n_k
  std::uint64_t ell = 0;
  Rational delta;
  Rational a_n;  // a_{n_k}
  Rational gap;  // a_{n_k} - a_{n_k + 1}

  // Exact membership in E_k.
  bool contains(const Rational& x) const;
  IntervalSet Materialize() const;
};

struct AvoidanceSet {
  int depth = 0;
  std::vector<AvoidanceRow> rows;  // k = 1..depth
  // Intersection of the first `materialized_depth` rows. Deeper rows are
  // too fine to store and are tested through AvoidanceRow::contains.
  IntervalSet set;
  int materialized_depth = 0;
  std::optional<Rational> measure;  // exact, when fully materialized
  Rational measure_lower_bound;      // 1 - sum 2 * 4^-k
  Certificates checks;

  bool fully_materialized() const { return materialized_depth == depth; }
  bool contains(const Rational& x) const;
};

// Upper bound on the total component count of the rows that get
// materialized.
inline constexpr std::uint64_t kDefaultMaterializeBudget = std::uint64_t{1}
                                                           << 21;

// Rows use the smallest admissible n_k > n_{k-1} with
// (a_n - a_{n+1}) / a_n <= k^-2 4^-k. Throws kNoAdmissibleIndex when the
// prefix has no such index for some k <= K.
AvoidanceSet BuildAvoidance(const SequencePrefix& prefix, int K,
                            std::uint64_t budget = kDefaultMaterializeBudget);

struct RefutationCertificate {
  Rational L;
  Rational C;
  int k_star = 0;
  std::uint64_t n_k = 0;
  std::uint64_t ell = 0;
  Rational delta;
  std::uint64_t horizon = 0;   // number of gaps checked from n_k on
  std::uint64_t last_index = 0;  // H: the window is [n_k, H)
  bool prefix_certified = false;
  Certificates checks;
  bool valid = false;
};

inline constexpr std::uint64_t kDefaultRefuteHorizon = 100000;

// C is 1 when the sequence is known to have non-increasing gaps
// (prefix_certified) and the prefix gap-ratio sup otherwise; k* is the
// smallest integer above C*L. Throws kDepthTooSmall when k* > depth and
// kInequalityFails naming the first failed check.
RefutationCertificate Refute(const SequencePrefix& prefix, const Rational& L,
                             const AvoidanceSet& avoid,
                             std::uint64_t horizon = kDefaultRefuteHorizon);

struct StressReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::optional<std::uint64_t> first_success;  // trial index
};

enum class Execution { kSerial, kParallel };

// Samples increasing piecewise-linear maps with breakpoints at the prefix
// terms and slopes on a rational grid in [1/L, L], and counts those whose
// images of the prefix all land in the avoidance set. Trial i draws from
// its own stream, so the report depends only on the seed.
StressReport RandomMapStress(const SequencePrefix& prefix,
                             const AvoidanceSet& avoid, const Rational& L,
                             std::uint64_t trials, std::uint64_t seed,
                             Execution exec = Execution::kParallel);

// Same sampler against an arbitrary target set.
StressReport RandomMapStress(const SequencePrefix& prefix,
                             const IntervalSet& target, const Rational& L,
                             std::uint64_t trials, std::uint64_t seed,
                             Execution exec = Execution::kParallel);

}  // namespace bilip

#endif  // BILIP_AVOIDER_HPP_
