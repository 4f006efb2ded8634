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


#include "bilip/avoider.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "bilip/error.hpp"
#include "bilip/kernels.hpp"
#include "bilip/rng.hpp"

namespace bilip {

namespace {

std::string Idx(std::uint64_t n) { return std::to_string(n); }

Rational RowThreshold(int k) {
  return Pow(Rational(4), -k) / Rational(static_cast<std::int64_t>(k) * k);
}

bool Admissible(const SequencePrefix& prefix, std::uint64_t n,
                const Rational& threshold) {
  const Rational an = prefix.at(n);
  return an - prefix.at(n + 1) <= threshold * an;
}

// Smallest n in [lo, hi] with Admissible; `monotone` means the predicate
// never turns false again once true.
std::optional<std::uint64_t> FirstAdmissible(const SequencePrefix& prefix,
                                             std::uint64_t lo,
                                             std::uint64_t hi,
                                             const Rational& threshold,
                                             bool monotone) {
  if (lo > hi) return std::nullopt;
  if (!monotone) {
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (Admissible(prefix, n, threshold)) return n;
    }
    return std::nullopt;
  }
  if (!Admissible(prefix, hi, threshold)) return std::nullopt;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (Admissible(prefix, mid, threshold)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

GapSubsequence ComputeGapSubsequence(const SequencePrefix& prefix,
                                     std::uint64_t horizon) {
  const std::uint64_t L = prefix.length();
  if (horizon == 0 || horizon >= L) {
    throw Error(ErrorCode::kPrefixTooShort,
                "horizon " + Idx(horizon) + " needs a prefix longer than " +
                    Idx(L));
  }
  const std::vector<Rational> a = prefix.values();
  // sup[n-1] = max gap at p >= n, p < L.
  std::vector<Rational> sup(L - 1);
  sup[L - 2] = a[L - 2] - a[L - 1];
  for (std::uint64_t n = L - 2; n-- > 0;) {
    sup[n] = Max(sup[n + 1], a[n] - a[n + 1]);
  }
  if (!prefix.spec().monotone_gaps()) {
    // A gap beyond the prefix is below a_L, so a running max >= a_L is
    // attained inside the prefix.
    const Rational& tail = a[L - 1];
    for (std::uint64_t n = 1; n <= horizon; ++n) {
      if (sup[n - 1] < tail) {
        throw Error(ErrorCode::kSupNotAttainedInPrefix,
                    "gap sup at n = " + Idx(n) +
                        " may lie beyond the prefix (max in prefix " +
                        sup[n - 1].ToString() + " < a_L = " + tail.ToString() +
                        ")");
      }
    }
  }
  GapSubsequence out;
  out.horizon = horizon;
  std::uint64_t n = 1;
  out.indices.push_back(n);
  while (n <= horizon) {
    const Rational& t = sup[n - 1];
    out.gap_sups.push_back(t);
    std::uint64_t p = n + 1;
    while (a[n - 1] - a[p - 1] < t) ++p;  // attained, so p <= L
    n = p;
    out.indices.push_back(n);
  }
  return out;
}

bool AvoidanceRow::contains(const Rational& x) const {
  if (x.sign() < 0 || Rational(1) < x) return false;
  const Rational scaled = x * Rational(BigInt(ell));
  BigInt j = (scaled + Rational(1, 2)).Floor();
  if (j > BigInt(ell)) j = BigInt(ell);
  const Rational d = Abs(x - Rational(j, BigInt(ell)));
  return delta / Rational(2) <= d;
}

IntervalSet AvoidanceRow::Materialize() const {
  return ell >= kernels::kParallelThreshold
             ? kernels::parallel::PuncturedGrid(ell, delta)
             : kernels::serial::PuncturedGrid(ell, delta);
}

bool AvoidanceSet::contains(const Rational& x) const {
  if (!set.contains(x)) return false;
  for (std::size_t i = static_cast<std::size_t>(materialized_depth);
       i < rows.size(); ++i) {
    if (!rows[i].contains(x)) return false;
  }
  return true;
}

AvoidanceSet BuildAvoidance(const SequencePrefix& prefix, int K,
                            std::uint64_t budget) {
  if (K < 1) throw Error(ErrorCode::kPreconditionViolated, "K must be >= 1");
  const std::uint64_t len = prefix.length();
  const bool monotone = prefix.spec().monotone_relative_gaps();

  AvoidanceSet out;
  out.depth = K;
  std::uint64_t next = 1;
  for (int k = 1; k <= K; ++k) {
    const Rational threshold = RowThreshold(k);
    const auto n =
        len < 2 ? std::nullopt
                : FirstAdmissible(prefix, next, len - 1, threshold, monotone);
    if (!n) {
      throw Error(ErrorCode::kNoAdmissibleIndex,
                  "row " + std::to_string(k) +
                      ": no n in the prefix with (a_n - a_{n+1})/a_n <= " +
                      threshold.ToString());
    }
    AvoidanceRow row;
    row.k = k;
    row.n = *n;
    row.a_n = prefix.at(*n);
    row.gap = row.a_n - prefix.at(*n + 1);
    const BigInt ell = (Rational(k) / row.a_n).Ceil();
    if (!ell.fits_ulong_p()) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "ell_" + std::to_string(k) + " = " + ell.get_str() +
                      " exceeds 64 bits");
    }
    row.ell = ell.get_ui();
    row.delta = Rational(k) * row.gap;
    out.rows.push_back(std::move(row));
    next = *n + 1;
  }

  bool rows_ok = true;
  std::string where;
  for (const AvoidanceRow& r : out.rows) {
    const Rational ell(BigInt(r.ell));
    const Rational inv = Rational(1) / ell;
    const Rational ak = r.a_n / Rational(r.k);
    const bool ok = r.gap <= RowThreshold(r.k) * r.a_n && inv <= ak &&
                    ak < Rational(2) * inv &&
                    ell * r.delta <= Rational(2) * Pow(Rational(4), -r.k);
    if (!ok && rows_ok) {
      rows_ok = false;
      where = "row " + std::to_string(r.k);
    }
  }
  out.checks.push_back({"row inequalities (relative gap, 1/ell, ell*delta)",
                        rows_ok, where});

  Rational bound(1);
  for (int k = 1; k <= K; ++k) bound -= Rational(2) * Pow(Rational(4), -k);
  out.measure_lower_bound = bound;

  std::uint64_t used = 0;
  out.set = IntervalSet::Single(Rational(0), Rational(1));
  for (const AvoidanceRow& r : out.rows) {
    if (r.ell > budget - std::min(used, budget)) break;
    used += r.ell;
    IntervalSet ek = r.Materialize();
    out.set = out.materialized_depth == 0 ? std::move(ek)
                                          : Intersect(out.set, ek);
    ++out.materialized_depth;
  }
  if (out.fully_materialized()) {
    out.measure = Measure(out.set);
    out.checks.push_back({"measure >= 1 - sum 2*4^-k >= 1/3",
                          bound <= *out.measure &&
                              Rational(1, 3) <= *out.measure,
                          out.measure->ToString()});
  } else {
    out.checks.push_back(
        {"measure >= 1 - sum 2*4^-k >= 1/3", Rational(1, 3) <= bound,
         "rows beyond depth " + std::to_string(out.materialized_depth) +
             " not materialized; bound from the row inequalities"});
  }
  return out;
}

RefutationCertificate Refute(const SequencePrefix& prefix, const Rational& L,
                             const AvoidanceSet& avoid, std::uint64_t horizon) {
  if (!(Rational(1) < L)) {
    throw Error(ErrorCode::kPreconditionViolated, "L must exceed 1");
  }
  if (horizon == 0) {
    throw Error(ErrorCode::kPreconditionViolated, "horizon must be >= 1");
  }
  RefutationCertificate c;
  c.L = L;
  c.prefix_certified = prefix.spec().monotone_gaps();
  c.C = c.prefix_certified ? Rational(1)
                           : ComputeRatioStats(prefix, 1).gap_ratio_sup;
  const BigInt k_star = (c.C * L).Floor() + 1;
  if (k_star > BigInt(avoid.depth)) {
    throw Error(ErrorCode::kDepthTooSmall,
                "k* = " + k_star.get_str() + " > C*L = " +
                    (c.C * L).ToString() + " needs depth " + k_star.get_str() +
                    ", have " + std::to_string(avoid.depth));
  }
  c.k_star = static_cast<int>(k_star.get_si());
  const AvoidanceRow& row = avoid.rows[c.k_star - 1];
  c.n_k = row.n;
  c.ell = row.ell;
  c.delta = row.delta;
  c.horizon = horizon;
  if (prefix.length() <= row.n) {
    throw Error(ErrorCode::kPrefixTooShort,
                "prefix ends before n_k = " + Idx(row.n));
  }
  c.last_index = std::min(row.n + horizon, prefix.length());
  const std::uint64_t count = c.last_index - row.n;

  // (i) L * gap_m < delta_k on the window.
  std::uint64_t first_bad = 0;
#pragma omp parallel for reduction(max : first_bad)
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t m = row.n + i;
    if (!(L * prefix.gap(m) < row.delta)) {
      first_bad = std::max(first_bad, count - i);  // largest = earliest
    }
  }
  const std::uint64_t bad_m = first_bad ? row.n + (count - first_bad) : 0;
  c.checks.push_back(
      {"L (a_m - a_{m+1}) < delta_k for m in [n_k, H)", first_bad == 0,
       first_bad ? "fails at m = " + Idx(bad_m)
                 : Idx(count) + " gaps from n_k = " + Idx(row.n)});

  const Rational ell(BigInt(row.ell));
  const Rational reach = row.a_n / L;
  const Rational component = (Rational(1) - row.delta * ell) / ell;
  c.checks.push_back({"a_{n_k}/L > 1/ell_k", Rational(1) / ell < reach,
                      reach.ToString()});
  c.checks.push_back({"(1 - delta_k ell_k)/ell_k < a_{n_k}/L",
                      component < reach, component.ToString()});
  const Rational span = (row.a_n - prefix.at(c.last_index)) / L;
  const bool span_ok = component < span;
  c.checks.push_back(
      {"(a_{n_k} - a_H)/L > (1 - delta_k ell_k)/ell_k or gaps certified monotone",
       span_ok || c.prefix_certified,
       std::string(span_ok ? "span holds: " : "span fails: ") + span.ToString() +
           (c.prefix_certified ? "; gaps certified monotone" : "")});

  for (std::size_t i = 0; i < 3; ++i) {
    if (!c.checks[i].pass) {
      throw Error(ErrorCode::kInequalityFails,
                  c.checks[i].name + ": " + c.checks[i].detail);
    }
  }
  if (!c.checks[3].pass) {
    throw Error(ErrorCode::kInequalityFails,
                c.checks[3].name + ": " + c.checks[3].detail);
  }
  c.valid = true;
  return c;
}

namespace {

Rational OnGrid(Rng& rng, const Rational& lo, const Rational& hi) {
  constexpr std::int64_t kSteps = 1024;
  const auto i = static_cast<std::int64_t>(Uniform(rng, kSteps + 1));
  return lo + (hi - lo) * Rational(i, kSteps);
}

StressReport Stress(const SequencePrefix& prefix, const Interval& hull,
                    const std::function<bool(const Rational&)>& member,
                    const Rational& L, std::uint64_t trials,
                    std::uint64_t seed, Execution exec) {
  StressReport report;
  report.trials = trials;
  if (trials == 0 || prefix.length() == 0) return report;
  if (!(Rational(1) < L)) {
    throw Error(ErrorCode::kPreconditionViolated, "L must exceed 1");
  }
  const std::vector<Rational> a = prefix.values();
  const std::size_t P = a.size();
  const Rational width = hull.length();
  const Rational lo = Rational(1) / L;
  const Rational hi = Max(lo, Min(L, width / a[0]));

  std::vector<char> hit(trials, 0);
  auto run = [&](std::uint64_t trial) {
    Rng rng = StreamFor(seed, trial);
    // Slope on [0, a_P], then on [a_{n+1}, a_n] for n = P-1 .. 1.
    std::vector<Rational> b(P);
    Rational offset = OnGrid(rng, lo, hi) * a[P - 1];
    b[P - 1] = offset;
    for (std::size_t n = P - 1; n-- > 0;) {
      offset += OnGrid(rng, lo, hi) * (a[n] - a[n + 1]);
      b[n] = offset;
    }
    const Rational room = width - offset;
    if (room.sign() < 0) return;
    const Rational anchor = OnGrid(rng, hull.lo, hull.lo + room);
    for (std::size_t n = 0; n < P; ++n) {
      if (!member(anchor + b[n])) return;
    }
    hit[trial] = 1;
  };
  if (exec == Execution::kParallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::uint64_t t = 0; t < trials; ++t) {
      try {
        run(t);
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::uint64_t t = 0; t < trials; ++t) run(t);
  }
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (!hit[t]) continue;
    if (!report.first_success) report.first_success = t;
    ++report.successes;
  }
  return report;
}

}  // namespace

StressReport RandomMapStress(const SequencePrefix& prefix,
                             const AvoidanceSet& avoid, const Rational& L,
                             std::uint64_t trials, std::uint64_t seed,
                             Execution exec) {
  return Stress(
      prefix, Interval::Make(Rational(0), Rational(1)),
      [&avoid](const Rational& x) { return avoid.contains(x); }, L, trials,
      seed, exec);
}

StressReport RandomMapStress(const SequencePrefix& prefix,
                             const IntervalSet& target, const Rational& L,
                             std::uint64_t trials, std::uint64_t seed,
                             Execution exec) {
  StressReport empty;
  empty.trials = trials;
  if (target.empty()) return empty;
  return Stress(
      prefix, target.hull(),
      [&target](const Rational& x) { return target.contains(x); }, L, trials,
      seed, exec);
}

}  // namespace bilip
