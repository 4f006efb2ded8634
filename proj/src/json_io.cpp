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


#include "bilip/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "bilip/error.hpp"

namespace bilip::io {

namespace {

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Bad(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::uint64_t U64From(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    Bad("expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Json Points(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const Rational& x : xs) out.push_back(x.ToString());
  return out;
}

Json IntervalJson(const Interval& i) {
  return Json::array({i.lo.ToString(), i.hi.ToString()});
}

Json Range(const std::pair<Rational, Rational>& r) {
  return Json::array({r.first.ToString(), r.second.ToString()});
}

}  // namespace

Json ToJson(const Rational& x) { return x.ToString(); }

Rational RationalFrom(const Json& j) {
  if (!j.is_string()) Bad("rationals must be strings \"p/q\"");
  return Rational::Parse(j.get<std::string>());
}

Json ToJson(const BigInt& x) { return x.get_str(); }

BigInt BigIntFrom(const Json& j) {
  if (!j.is_string()) Bad("big integers must be strings");
  BigInt out;
  if (out.set_str(j.get<std::string>(), 10) != 0) {
    Bad("bad integer '" + j.get<std::string>() + "'");
  }
  return out;
}

Json ToJson(const IntervalSet& s) {
  Json comps = Json::array();
  for (const Interval& c : s.components()) comps.push_back(IntervalJson(c));
  return Json{{"components", std::move(comps)}};
}

IntervalSet IntervalSetFrom(const Json& j) {
  const Json& comps = Field(j, "components");
  if (!comps.is_array()) Bad("components must be an array");
  std::vector<Interval> raw;
  raw.reserve(comps.size());
  for (const Json& c : comps) {
    if (!c.is_array() || c.size() != 2) Bad("component must be [lo, hi]");
    raw.push_back(Interval::Make(RationalFrom(c[0]), RationalFrom(c[1])));
  }
  return IntervalSet::Of(std::move(raw));
}

void WriteIntervalSet(std::ostream& os, const IntervalSet& s) {
  os << "{\"components\":[";
  bool first = true;
  for (const Interval& c : s.components()) {
    if (!first) os << ',';
    first = false;
    os << "[\"" << c.lo.ToString() << "\",\"" << c.hi.ToString() << "\"]";
  }
  os << "]}";
}

Json ToJson(const SequenceSpec& s) {
  switch (s.kind) {
    case SequenceKind::kGeometric:
      return {{"kind", "geometric"},
              {"ratio", ToJson(s.ratio)},
              {"first", ToJson(s.first)}};
    case SequenceKind::kHarmonic:
      return {{"kind", "harmonic"}};
    case SequenceKind::kInterleavedMersenne:
      return {{"kind", "interleaved_mersenne"}};
    case SequenceKind::kTower:
      return {{"kind", "tower"}};
    case SequenceKind::kExplicit:
      return {{"kind", "explicit"}, {"terms", Points(s.terms)}};
  }
  return {};
}

SequenceSpec SequenceSpecFrom(const Json& j) {
  if (j.is_array()) {
    std::vector<Rational> terms;
    for (const Json& t : j) terms.push_back(RationalFrom(t));
    return SequenceSpec::Explicit(std::move(terms));
  }
  const Json& kind = Field(j, "kind");
  if (!kind.is_string()) Bad("sequence kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "geometric") {
    return SequenceSpec::Geometric(RationalFrom(Field(j, "ratio")),
                                   RationalFrom(Field(j, "first")));
  }
  if (k == "harmonic") return SequenceSpec::Harmonic();
  if (k == "interleaved_mersenne" || k == "interleaved-mersenne") {
    return SequenceSpec::InterleavedMersenne();
  }
  if (k == "tower") return SequenceSpec::Tower();
  if (k == "explicit") return SequenceSpecFrom(Field(j, "terms"));
  Bad("unknown sequence kind '" + k + "'");
}

SequenceSpec ParseSequence(std::string_view text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      Bad(e.what());
    }
    return SequenceSpecFrom(j);
  }
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  const std::string& kind = parts[0];
  if (kind == "geometric" && parts.size() == 3) {
    return SequenceSpec::Geometric(Rational::Parse(parts[1]),
                                   Rational::Parse(parts[2]));
  }
  if (parts.size() == 1) {
    if (kind == "harmonic") return SequenceSpec::Harmonic();
    if (kind == "interleaved_mersenne" || kind == "interleaved-mersenne") {
      return SequenceSpec::InterleavedMersenne();
    }
    if (kind == "tower") return SequenceSpec::Tower();
  }
  if (kind == "explicit" && parts.size() == 2) {
    std::vector<Rational> terms;
    std::stringstream ss(parts[1]);
    std::string item;
    while (std::getline(ss, item, ',')) terms.push_back(Rational::Parse(item));
    return SequenceSpec::Explicit(std::move(terms));
  }
  Bad("unknown sequence '" + std::string(text) + "'");
}

Json ToJson(const Certificates& c) {
  Json out = Json::array();
  for (const CertificateCheck& k : c) {
    out.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
  }
  return out;
}

Json ToJson(const PiecewiseLinearMap& m) {
  Json bps = Json::array();
  for (const Breakpoint& p : m.breakpoints()) {
    bps.push_back(Json::array({ToJson(p.x), ToJson(p.y)}));
  }
  return {{"breakpoints", std::move(bps)},
          {"left_slope", ToJson(m.left_slope())},
          {"right_slope", ToJson(m.right_slope())},
          {"slope_range", Range(SlopeRange(m))}};
}

PiecewiseLinearMap MapFrom(const Json& j) {
  std::vector<Breakpoint> bps;
  const Json& arr = Field(j, "breakpoints");
  if (!arr.is_array()) Bad("breakpoints must be an array");
  for (const Json& p : arr) {
    if (!p.is_array() || p.size() != 2) Bad("breakpoint must be [x, y]");
    bps.push_back({RationalFrom(p[0]), RationalFrom(p[1])});
  }
  return PiecewiseLinearMap(std::move(bps), RationalFrom(Field(j, "left_slope")),
                            RationalFrom(Field(j, "right_slope")));
}

Json ToJson(const EmbeddingResult& r, const IntervalSet& e) {
  Json blocks = Json::array();
  const auto& bs = r.decomposition.blocks;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const Block& b = bs[i];
    blocks.push_back({{"k", b.k},
                      {"first", b.first},
                      {"last", b.last},
                      {"u", ToJson(b.u)},
                      {"v", ToJson(b.v)},
                      {"interval", IntervalJson(b.interval)},
                      {"terminal", b.terminal},
                      {"rho", ToJson(r.rho[i])},
                      {"t", r.t[i] ? ToJson(*r.t[i]) : Json(nullptr)},
                      {"t_bound", ToJson(r.t_bound[i])}});
  }
  Json member = Json::array();
  for (const Rational& b : r.b) member.push_back(e.contains(b));
  return {{"delta", ToJson(r.decomposition.params.delta)},
          {"N", r.decomposition.params.N},
          {"p", r.p},
          {"a", Points(r.a)},
          {"b", Points(r.b)},
          {"blocks", std::move(blocks)},
          {"slope_deviation", Points(r.slope_deviation)},
          {"membership", std::move(member)},
          {"map", ToJson(r.map)}};
}

Json ToJson(const AvoidanceSet& a) {
  Json rows = Json::array();
  for (const AvoidanceRow& r : a.rows) {
    rows.push_back({{"k", r.k},
                    {"n", r.n},
                    {"ell", r.ell},
                    {"delta", ToJson(r.delta)},
                    {"a_n", ToJson(r.a_n)},
                    {"gap", ToJson(r.gap)}});
  }
  return {{"depth", a.depth},
          {"rows", std::move(rows)},
          {"materialized_depth", a.materialized_depth},
          {"components", a.set.size()},
          {"measure", a.measure ? ToJson(*a.measure) : Json(nullptr)},
          {"measure_lower_bound", ToJson(a.measure_lower_bound)}};
}

std::vector<AvoidanceRow> AvoidanceRowsFrom(const Json& j) {
  std::vector<AvoidanceRow> rows;
  const Json& arr = Field(j, "rows");
  if (!arr.is_array()) Bad("rows must be an array");
  for (const Json& r : arr) {
    AvoidanceRow row;
    const Json& k = Field(r, "k");
    if (!k.is_number_integer()) Bad("row k must be an integer");
    row.k = k.get<int>();
    row.n = U64From(Field(r, "n"));
    row.ell = U64From(Field(r, "ell"));
    row.delta = RationalFrom(Field(r, "delta"));
    row.a_n = RationalFrom(Field(r, "a_n"));
    row.gap = RationalFrom(Field(r, "gap"));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json ToJson(const RefutationCertificate& c) {
  return {{"L", ToJson(c.L)},
          {"C", ToJson(c.C)},
          {"k_star", c.k_star},
          {"n_k", c.n_k},
          {"ell", c.ell},
          {"delta", ToJson(c.delta)},
          {"horizon", c.horizon},
          {"last_index", c.last_index},
          {"prefix_certified", c.prefix_certified},
          {"valid", c.valid}};
}

Json ToJson(const StressReport& r) {
  return {{"trials", r.trials},
          {"successes", r.successes},
          {"first_success",
           r.first_success ? Json(*r.first_success) : Json(nullptr)}};
}

Json ToJson(const MSequence& m) {
  Json M = Json::array();
  Json P = Json::array();
  for (const BigInt& x : m.M) M.push_back(ToJson(x));
  for (const BigInt& x : m.partial_products) P.push_back(ToJson(x));
  return {{"M", std::move(M)},
          {"partial_products", std::move(P)},
          {"delta_sum", ToJson(m.delta_sum)}};
}

Json ToJson(const UniformEmbeddingResult& r) {
  Json levels = Json::array();
  for (const NestedPair& p : r.pairs) {
    levels.push_back({{"level", p.level},
                      {"j", ToJson(p.j)},
                      {"delta", IntervalJson(p.delta)},
                      {"delta_prime", IntervalJson(p.delta_prime)},
                      {"density", ToJson(p.density)}});
  }
  return {{"msequence", ToJson(r.msequence)},
          {"levels", std::move(levels)},
          {"a", Points(r.a)},
          {"b", Points(r.b)},
          {"delta", ToJson(r.delta)},
          {"eta", ToJson(r.eta)},
          {"t", ToJson(r.t_threshold)},
          {"epsilons", Points(r.epsilons)},
          {"map", ToJson(r.map)}};
}

Json ToJson(const GluedMap& g) {
  Json scales = Json::array();
  for (const GluedScale& s : g.scales) {
    scales.push_back({{"n", s.n}, {"f", ToJson(s.f)}, {"h", ToJson(s.h)}});
  }
  Json connectors = Json::array();
  for (const Connector& c : g.connectors) {
    connectors.push_back(
        {{"domain", IntervalJson(c.domain)}, {"slope", ToJson(c.slope)}});
  }
  return {{"N", g.N},
          {"n_max", g.n_max},
          {"delta", ToJson(g.delta)},
          {"scales", std::move(scales)},
          {"connectors", std::move(connectors)},
          {"h", ToJson(g.h)},
          {"H", ToJson(g.H)},
          {"target_points", Points(g.target_points)},
          {"unscaled_H_in_range", g.unscaled_H_in_range}};
}

Json Report(std::string command, Json params, Json result,
            const Certificates& checks) {
  return {{"schema_version", kSchemaVersion},
          {"command", std::move(command)},
          {"params", std::move(params)},
          {"result", std::move(result)},
          {"certificates", ToJson(checks)},
          {"all_pass", AllPass(checks)}};
}

void WriteReport(std::ostream& os, Json report, const IntervalSet* streamed) {
  if (!streamed) {
    os << report.dump(2) << '\n';
    return;
  }
  static const std::string kMark = "\x01streamed-set\x01";
  report["result"]["set"] = kMark;
  const std::string text = report.dump(2);
  const std::string quoted = Json(kMark).dump();
  const std::size_t at = text.find(quoted);
  os << text.substr(0, at);
  WriteIntervalSet(os, *streamed);
  os << text.substr(at + quoted.size()) << '\n';
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    Bad(path + ": " + e.what());
  }
}

}  // namespace bilip::io
