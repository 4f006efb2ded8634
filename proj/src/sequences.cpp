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


#include "bilip/sequences.hpp"

#include <sstream>

#include "bilip/error.hpp"

namespace bilip {

namespace {

// 4^(-4^n) = 2^(-2^(2n+1)); past n = 12 the denominator alone is 4 MiB.
constexpr std::uint64_t kMaxTowerIndex = 12;

}  // namespace

SequenceSpec SequenceSpec::Geometric(Rational ratio, Rational first) {
  if (ratio.sign() <= 0 || ratio >= Rational(1) || first.sign() <= 0) {
    throw Error(ErrorCode::kPreconditionViolated,
                "geometric sequence needs 0 < ratio < 1 and first > 0");
  }
  SequenceSpec s;
  s.kind = SequenceKind::kGeometric;
  s.ratio = std::move(ratio);
  s.first = std::move(first);
  return s;
}

SequenceSpec SequenceSpec::Harmonic() {
  SequenceSpec s;
  s.kind = SequenceKind::kHarmonic;
  return s;
}

SequenceSpec SequenceSpec::InterleavedMersenne() {
  SequenceSpec s;
  s.kind = SequenceKind::kInterleavedMersenne;
  return s;
}

SequenceSpec SequenceSpec::Tower() {
  SequenceSpec s;
  s.kind = SequenceKind::kTower;
  return s;
}

SequenceSpec SequenceSpec::Explicit(std::vector<Rational> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].sign() <= 0 || (i > 0 && !(terms[i] < terms[i - 1]))) {
      throw Error(ErrorCode::kNotDecreasing,
                  "explicit term " + std::to_string(i + 1) + " = " +
                      terms[i].ToString());
    }
  }
  SequenceSpec s;
  s.kind = SequenceKind::kExplicit;
  s.terms = std::move(terms);
  return s;
}

bool SequenceSpec::monotone_gaps() const {
  return kind == SequenceKind::kGeometric || kind == SequenceKind::kHarmonic ||
         kind == SequenceKind::kTower;
}

bool SequenceSpec::monotone_relative_gaps() const {
  return kind == SequenceKind::kGeometric || kind == SequenceKind::kHarmonic;
}

std::uint64_t SequenceSpec::max_length() const {
  if (kind == SequenceKind::kExplicit) return terms.size();
  if (kind == SequenceKind::kTower) return kMaxTowerIndex;
  return UINT64_MAX;
}

std::string SequenceSpec::Describe() const {
  switch (kind) {
    case SequenceKind::kGeometric:
      return "geometric:" + ratio.ToString() + ":" + first.ToString();
    case SequenceKind::kHarmonic:
      return "harmonic";
    case SequenceKind::kInterleavedMersenne:
      return "interleaved-mersenne";
    case SequenceKind::kTower:
      return "tower";
    case SequenceKind::kExplicit: {
      std::ostringstream os;
      os << "explicit:";
      for (std::size_t i = 0; i < terms.size(); ++i) {
        os << (i ? "," : "") << terms[i];
      }
      return os.str();
    }
  }
  return "unknown";
}

SequencePrefix::SequencePrefix(std::shared_ptr<const SequenceSpec> spec,
                               std::uint64_t length)
    : spec_(std::move(spec)), length_(length) {}

namespace {

BigInt PowerOfTwo(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

Rational SequencePrefix::at(std::uint64_t n) const {
  if (n == 0 || n > length_) {
    throw Error(ErrorCode::kPreconditionViolated,
                "term index " + std::to_string(n) + " outside prefix of length " +
                    std::to_string(length_));
  }
  const SequenceSpec& s = *spec_;
  switch (s.kind) {
    case SequenceKind::kGeometric:
      return s.first * Pow(s.ratio, static_cast<std::int64_t>(n - 1));
    case SequenceKind::kHarmonic: {
      BigInt d;
      mpz_set_ui(d.get_mpz_t(), static_cast<unsigned long>(n));
      return Rational(BigInt(1), d);
    }
    case SequenceKind::kInterleavedMersenne: {
      const std::uint64_t k = (n + 1) / 2;
      if (n % 2 == 1) return Rational(BigInt(1), PowerOfTwo(k) - 1);
      return Rational(BigInt(1), PowerOfTwo(k));
    }
    case SequenceKind::kTower:
      if (n > kMaxTowerIndex) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "tower terms beyond n = 12 are not representable");
      }
      return Rational(BigInt(1), PowerOfTwo(std::uint64_t{1} << (2 * n + 1)));
    case SequenceKind::kExplicit:
      return s.terms[n - 1];
  }
  return {};
}

std::vector<Rational> SequencePrefix::values() const {
  std::vector<Rational> out;
  out.reserve(length_);
  for (std::uint64_t n = 1; n <= length_; ++n) out.push_back(at(n));
  return out;
}

SequencePrefix SequencePrefix::Truncated(std::uint64_t length) const {
  if (length > length_) {
    throw Error(ErrorCode::kPrefixTooShort, "cannot extend a prefix");
  }
  return SequencePrefix(spec_, length);
}

SequencePrefix Terms(const SequenceSpec& spec, std::uint64_t count) {
  if (count == 0) {
    throw Error(ErrorCode::kPreconditionViolated, "need at least one term");
  }
  if (count > spec.max_length()) {
    throw Error(ErrorCode::kPrefixTooShort,
                spec.Describe() + " has " + std::to_string(spec.max_length()) +
                    " terms available, asked for " + std::to_string(count));
  }
  if (spec.kind == SequenceKind::kExplicit) {
    // Re-validate: specs may be built field by field.
    return SequencePrefix(
        std::make_shared<const SequenceSpec>(SequenceSpec::Explicit(spec.terms)),
        count);
  }
  return SequencePrefix(std::make_shared<const SequenceSpec>(spec), count);
}

RatioStats ComputeRatioStats(const SequencePrefix& prefix, int N) {
  const std::uint64_t L = prefix.length();
  if (N < 1 || L <= static_cast<std::uint64_t>(N)) {
    throw Error(ErrorCode::kPrefixTooShort,
                "ratio stats need length > N (length " + std::to_string(L) +
                    ", N " + std::to_string(N) + ")");
  }
  const auto a = prefix.values();
  RatioStats st;
  st.N = N;
  for (std::uint64_t n = 0; n + N < L; ++n) {
    Rational r = a[n + N] / a[n];
    if (n == 0 || st.max_step_ratio < r) st.max_step_ratio = std::move(r);
  }
  for (std::uint64_t n = 0; n + 1 < L; ++n) {
    Rational r = a[n + 1] / a[n];
    if (n == 0 || st.max_adjacent_ratio < r) st.max_adjacent_ratio = r;
    if (n == 0 || r < st.min_adjacent_ratio) st.min_adjacent_ratio = r;
  }
  // m > n > 1: the ratio gap_{m-1} / gap_{n-1} is maximized by the
  // smallest earlier gap, so one running minimum suffices.
  Rational min_gap;
  for (std::uint64_t m = 3; m <= L; ++m) {
    const Rational prev = a[m - 3] - a[m - 2];  // gap_{n-1} with n = m-1
    if (m == 3 || prev < min_gap) min_gap = prev;
    Rational r = (a[m - 2] - a[m - 1]) / min_gap;
    if (m == 3 || st.gap_ratio_sup < r) st.gap_ratio_sup = std::move(r);
  }
  st.delta_sum = DeltaSum(prefix);
  return st;
}

Rational DeltaSum(const SequencePrefix& prefix) {
  Rational prev = prefix.at(1);
  Rational sum = prev;
  for (std::uint64_t n = 2; n <= prefix.length(); ++n) {
    Rational cur = prefix.at(n);
    sum += cur / prev;
    prev = std::move(cur);
  }
  return sum;
}

Rational FindDelta(const SequencePrefix& prefix, int N) {
  const Rational r = ComputeRatioStats(prefix, N).max_step_ratio;
  if (r >= Rational(1)) {
    throw Error(ErrorCode::kHypothesisFails,
                "max a_{n+N}/a_n = " + r.ToString() + " >= 1");
  }
  for (std::int64_t den = 64;; den *= 2) {
    // (k/den)^N is increasing in k: binary search the first k above r.
    std::int64_t lo = 1, hi = den;  // hi == den means "none below 1"
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (Pow(Rational(mid, den), N) > r) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    if (lo < den) return Rational(lo, den);
  }
}

}  // namespace bilip
