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


#include "bilip/embedder.hpp"

#include <exception>
#include <sstream>

#include "bilip/error.hpp"

namespace bilip {

namespace {

void CheckRatioHypothesis(const std::vector<Rational>& a,
                          const EmbedParams& params) {
  const Rational bound = Pow(params.delta, params.N);
  const std::size_t N = static_cast<std::size_t>(params.N);
  for (std::size_t n = 0; n + N < a.size(); ++n) {
    if (!(a[n + N] / a[n] < bound)) {
      throw Error(ErrorCode::kRatioHypothesisFails,
                  "a_" + std::to_string(n + 1 + N) + "/a_" +
                      std::to_string(n + 1) + " = " +
                      (a[n + N] / a[n]).ToString() + " >= delta^N = " +
                      bound.ToString());
    }
  }
}

std::string BlockTag(const Block& b) { return "block " + std::to_string(b.k); }

}  // namespace

EmbedParams MakeEmbedParams(const SequencePrefix& prefix, Rational delta,
                            int N) {
  if (delta.sign() <= 0 || delta >= Rational(1)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "delta = " + delta.ToString() + " not in (0,1)");
  }
  if (N < 1) throw Error(ErrorCode::kPreconditionViolated, "N must be >= 1");
  EmbedParams params{std::move(delta), N};
  CheckRatioHypothesis(prefix.values(), params);
  return params;
}

BlockDecomposition DecomposeBlocks(const SequencePrefix& prefix,
                                   const EmbedParams& params) {
  const auto a = prefix.values();
  CheckRatioHypothesis(a, params);
  const Rational& delta = params.delta;
  const std::uint64_t L = a.size();

  BlockDecomposition out;
  out.params = params;
  for (std::uint64_t n = 1; n < L; ++n) {
    if (a[n] / a[n - 1] < delta) out.block_ends.push_back(n);
  }
  auto make_block = [&](std::uint64_t first, std::uint64_t last,
                        bool terminal) {
    Block b;
    b.k = static_cast<int>(out.blocks.size()) + 1;
    b.first = first;
    b.last = last;
    b.u = a[last - 1];
    b.v = a[first - 1];
    b.interval = Interval::Make(delta * b.u, b.v);
    b.terminal = terminal;
    out.blocks.push_back(std::move(b));
  };
  std::uint64_t prev = 0;
  for (std::uint64_t end : out.block_ends) {
    make_block(prev + 1, end, false);
    prev = end;
  }
  if (prev < L) make_block(prev + 1, L, true);

  // The ratio hypothesis implies every structural inequality below; a
  // failure here means the hypothesis check itself is wrong.
  const Rational floor = Pow(delta, params.N - 1);
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    const Block& b = out.blocks[i];
    const bool sized = b.size() <= static_cast<std::uint64_t>(params.N);
    const Rational ratio = b.u / b.v;
    const bool ratio_ok = floor <= ratio && ratio <= Rational(1);
    const bool gap_ok =
        i + 1 == out.blocks.size() || out.blocks[i + 1].v / b.u < delta;
    if (!sized || !ratio_ok || !gap_ok) {
      throw Error(ErrorCode::kRatioHypothesisFails,
                  BlockTag(b) + " violates the block inequalities");
    }
  }
  return out;
}

Rational TranslationBound(const EmbedParams& params, const Rational& rho,
                          const Rational& u) {
  const Rational n2(static_cast<std::int64_t>(params.N) * params.N);
  return (Rational(1) - params.delta) * n2 * Pow(params.delta, -params.N) *
         rho * u;
}

Rational TranslationSearch(const IntervalSet& e, const Interval& interval,
                           std::span<const Rational> points,
                           const EmbedParams& params) {
  const Rational& delta = params.delta;
  const Rational u = interval.lo / delta;
  const Rational& v = interval.hi;
  if (!(Rational(0) < Pow(delta, params.N - 1) * v) ||
      !(Pow(delta, params.N - 1) * v <= u) || !(u <= v)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "0 < delta^(N-1) v <= u <= v fails for I = [" +
                    interval.lo.ToString() + ", " + v.ToString() + "]");
  }
  if (points.size() > static_cast<std::size_t>(params.N)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "more than N points in one block");
  }
  for (const Rational& x : points) {
    if (x < u || v < x) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "point " + x.ToString() + " outside [u, v]");
    }
  }
  const Rational rho = Rational(1) - DensityWithin(e, interval);
  const Rational threshold =
      Pow(delta, params.N) /
      Rational(static_cast<std::int64_t>(params.N) * params.N);
  if (!(rho < threshold)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "rho = " + rho.ToString() + " >= N^-2 delta^N = " +
                    threshold.ToString());
  }
  const Rational bound = TranslationBound(params, rho, u);
  IntervalSet feasible = IntervalSet::Single(Rational(0), bound);
  const IntervalSet local = Clip(e, interval);
  for (const Rational& x : points) {
    // {t : x - t in E ∩ I}
    feasible = Intersect(feasible, AffineImage(local, Rational(-1), x));
    if (feasible.empty()) break;
  }
  if (feasible.empty()) {
    throw Error(ErrorCode::kInfeasible,
                "no shift in [0, " + bound.ToString() + "] for I = [" +
                    interval.lo.ToString() + ", " + v.ToString() + "]");
  }
  return feasible.components().front().lo;
}

namespace {

// n points of E strictly above `floor`, in increasing order: equally
// spaced inside the first piece of positive length, otherwise the first
// isolated points.
std::optional<std::vector<Rational>> PickHeadPoints(const IntervalSet& e,
                                                    const Rational& floor,
                                                    std::uint64_t n) {
  std::vector<Rational> isolated;
  for (const Interval& c : e.components()) {
    if (c.hi <= floor) continue;
    const Rational lo = Max(c.lo, floor);
    if (lo < c.hi) {
      std::vector<Rational> out;
      const Rational step =
          (c.hi - lo) / Rational(static_cast<std::int64_t>(n) + 1);
      for (std::uint64_t i = 1; i <= n; ++i) {
        out.push_back(lo + step * Rational(static_cast<std::int64_t>(i)));
      }
      return out;
    }
    if (isolated.size() < n) isolated.push_back(c.lo);
  }
  if (isolated.size() == n) return isolated;
  return std::nullopt;
}

}  // namespace

Certificates CertifyEmbedding(const SequencePrefix& prefix,
                              const IntervalSet& e, const EmbedParams& params,
                              std::span<const Rational> b) {
  Certificates checks;
  const BlockDecomposition dec = DecomposeBlocks(prefix, params);
  const std::vector<Rational> a = prefix.values();
  const std::size_t L = a.size();
  if (b.size() != L) {
    checks.push_back({"one image per term", false,
                      std::to_string(b.size()) + " images for " +
                          std::to_string(L) + " terms"});
    return checks;
  }
  const auto& blocks = dec.blocks;
  const std::size_t K = blocks.size();
  const Rational& delta = params.delta;
  const Rational n2(static_cast<std::int64_t>(params.N) * params.N);
  const Rational threshold = Pow(delta, params.N) / n2;
  std::vector<Rational> rho(K);
  for (std::size_t i = 0; i < K; ++i) {
    rho[i] = Rational(1) - DensityWithin(e, blocks[i].interval);
  }
  std::size_t p_index = K;
  while (p_index > 0 && rho[p_index - 1] < threshold) --p_index;

  {
    bool ok = true;
    std::string where;
    for (std::size_t n = 0; n < L && ok; ++n) {
      if (!e.contains(b[n])) {
        ok = false;
        where = "b_" + std::to_string(n + 1) + " not in E";
      }
    }
    checks.push_back({"membership f(a_n) in E", ok, where});
  }
  bool decreasing = b.back().sign() > 0;
  for (std::size_t n = 0; n + 1 < L; ++n) {
    decreasing = decreasing && b[n + 1] < b[n];
  }
  checks.push_back({"b strictly decreasing and positive", decreasing, ""});
  if (!decreasing) return checks;

  std::vector<Breakpoint> bps;
  bps.push_back({Rational(0), Rational(0)});
  for (std::size_t n = L; n-- > 0;) bps.push_back({a[n], b[n]});
  const PiecewiseLinearMap map(std::move(bps), Rational(1), Rational(1));
  std::vector<Rational> dev;
  for (std::size_t n = 0; n + 1 < L; ++n) {
    dev.push_back(Abs((b[n] - b[n + 1]) / (a[n] - a[n + 1]) - Rational(1)));
  }

  checks.push_back({"rho_k < N^-2 delta^N for k >= p", p_index < K,
                    p_index < K ? "p = " + std::to_string(p_index + 1)
                                : "last block too sparse"});
  {
    bool ok = p_index < K;
    std::string where;
    for (std::size_t i = p_index + 1; i < K && ok; ++i) {
      const Block& blk = blocks[i];
      const Rational t = a[blk.first - 1] - b[blk.first - 1];
      const Rational bound = TranslationBound(params, rho[i], blk.u);
      for (std::uint64_t j = blk.first; j <= blk.last; ++j) {
        ok = ok && a[j - 1] - b[j - 1] == t;
      }
      ok = ok && t.sign() >= 0 && t <= bound;
      if (!ok) where = BlockTag(blk);
    }
    checks.push_back({"f(a_n) = a_n - t_k, 0 <= t_k <= (1-delta) N^2 "
                      "delta^-N rho_k u_k for k > p",
                      ok, where});
  }
  {
    bool ok = true;
    const Rational floor = Pow(delta, params.N - 1);
    for (std::size_t i = 0; i < K; ++i) {
      const Block& blk = blocks[i];
      ok = ok && blk.size() <= static_cast<std::uint64_t>(params.N);
      ok = ok && floor <= blk.u / blk.v && blk.u <= blk.v;
      if (i + 1 < K) {
        ok = ok && blocks[i + 1].v / blk.u < delta;
        ok = ok && blocks[i + 1].interval.hi < blk.interval.lo;
      }
    }
    checks.push_back({"block inequalities and disjoint I_k", ok, ""});
  }
  {
    bool ok = true;
    std::string where;
    for (std::size_t i = p_index + 1; i < K && ok; ++i) {
      for (std::uint64_t j = blocks[i].first; j < blocks[i].last; ++j) {
        if (!dev[j - 1].is_zero()) {
          ok = false;
          where = "n = " + std::to_string(j);
          break;
        }
      }
    }
    checks.push_back({"intra-block slopes equal 1", ok, where});
  }
  {
    bool ok = true;
    std::string where;
    const Rational scale = n2 * Pow(delta, -params.N);
    for (std::size_t i = p_index + 1; i + 1 < K && ok; ++i) {
      const std::uint64_t nk = blocks[i].last;
      if (scale * (rho[i] + rho[i + 1]) < dev[nk - 1]) {
        ok = false;
        where = BlockTag(blocks[i]);
      }
    }
    checks.push_back(
        {"|slope at n_k - 1| <= N^2 delta^-N (rho_k + rho_{k+1})", ok, where});
  }
  {
    const auto [lo, hi] = SlopeRange(map);
    std::ostringstream os;
    os << "[" << lo << ", " << hi << "]";
    checks.push_back({"slope range positive and finite", lo.sign() > 0,
                      os.str()});
  }
  return checks;
}

EmbeddingResult BuildEmbedding(const SequencePrefix& prefix,
                               const IntervalSet& e,
                               const EmbedParams& params) {
  EmbeddingResult r;
  r.decomposition = DecomposeBlocks(prefix, params);
  r.a = prefix.values();
  const auto& blocks = r.decomposition.blocks;
  const std::size_t K = blocks.size();
  const Rational& delta = params.delta;
  const Rational n2(static_cast<std::int64_t>(params.N) * params.N);
  const Rational threshold = Pow(delta, params.N) / n2;

  r.rho.resize(K);
  r.t_bound.resize(K);
  for (std::size_t i = 0; i < K; ++i) {
    r.rho[i] = Rational(1) - DensityWithin(e, blocks[i].interval);
    r.t_bound[i] = TranslationBound(params, r.rho[i], blocks[i].u);
  }

  // Smallest p with rho_k < threshold for every k >= p.
  std::size_t p_index = K;
  while (p_index > 0 && r.rho[p_index - 1] < threshold) --p_index;
  if (p_index == K) {
    throw Error(ErrorCode::kDensityTooLow,
                "last block has rho = " + r.rho[K - 1].ToString() +
                    " >= N^-2 delta^N = " + threshold.ToString());
  }
  r.p = static_cast<int>(p_index) + 1;
  const Block& head_block = blocks[p_index];

  r.b.resize(r.a.size());
  const auto head = PickHeadPoints(e, head_block.v, head_block.last);
  if (!head) {
    throw Error(ErrorCode::kHeadSelectionFails,
                "E ∩ (" + head_block.v.ToString() + ", inf) has fewer than " +
                    std::to_string(head_block.last) + " points");
  }
  for (std::uint64_t j = 1; j <= head_block.last; ++j) {
    r.b[j - 1] = (*head)[head_block.last - j];
  }

  r.t.assign(K, std::nullopt);
  std::vector<std::exception_ptr> failures(K);
  const auto first_translated = static_cast<std::int64_t>(p_index) + 1;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = first_translated; i < static_cast<std::int64_t>(K);
       ++i) {
    try {
      const Block& blk = blocks[i];
      std::vector<Rational> pts(r.a.begin() + (blk.first - 1),
                                r.a.begin() + blk.last);
      Rational t = TranslationSearch(e, blk.interval, pts, params);
      for (std::uint64_t j = blk.first; j <= blk.last; ++j) {
        r.b[j - 1] = r.a[j - 1] - t;
      }
      r.t[i] = std::move(t);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  const std::size_t L = r.a.size();
  std::vector<Breakpoint> bps;
  bps.reserve(L + 1);
  bps.push_back({Rational(0), Rational(0)});
  for (std::size_t n = L; n-- > 0;) bps.push_back({r.a[n], r.b[n]});
  r.map = PiecewiseLinearMap(std::move(bps), Rational(1), Rational(1));

  for (std::size_t n = 0; n + 1 < L; ++n) {
    r.slope_deviation.push_back(
        Abs((r.b[n] - r.b[n + 1]) / (r.a[n] - r.a[n + 1]) - Rational(1)));
  }

  r.checks = CertifyEmbedding(prefix, e, params, r.b);
  return r;
}

}  // namespace bilip
