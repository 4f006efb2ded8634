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


#include "bilip/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bilip/avoider.hpp"
#include "bilip/embedder.hpp"
#include "bilip/gluer.hpp"
#include "bilip/json_io.hpp"
#include "bilip/svg.hpp"
#include "bilip/uniform.hpp"

namespace bilip::cli {

namespace {

using io::Json;

struct Options {
  std::string output;
  // gen-set
  std::string kind = "fat-cantor";
  std::string lo = "0";
  std::string hi = "1";
  std::string keep = "31/32,31/32";
  std::string mode = "random";
  int gaps = 100;
  std::string removed = "1/4";
  std::uint64_t seed = 1;
  // constructions
  std::string sequence;
  std::optional<std::uint64_t> terms;
  std::string set;
  int N = 1;
  std::string delta;
  int K = 1;
  std::uint64_t budget = kDefaultMaterializeBudget;
  std::string L;
  std::string avoid;
  std::uint64_t horizon = kDefaultRefuteHorizon;
  std::uint64_t stress_trials = 0;
  std::uint64_t stress_terms = 200;
  std::optional<int> depth;
  int n_max = 1;
  std::string file;
};

// Writes to -o or to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error(ErrorCode::kIoError, "cannot write " + path);
      out_ = file_.get();
    }
  }
  std::ostream& stream() { return *out_; }
  void Close() {
    if (file_) {
      file_->close();
      if (!*file_) throw Error(ErrorCode::kIoError, "write failed");
    }
  }

 private:
  std::ostream* out_;
  std::unique_ptr<std::ofstream> file_;
};

std::vector<Rational> RationalList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::Parse(item));
  return out;
}

IntervalSet SetFromDocument(const Json& doc) {
  if (doc.contains("components")) return io::IntervalSetFrom(doc);
  if (doc.contains("result") && doc["result"].contains("set")) {
    return io::IntervalSetFrom(doc["result"]["set"]);
  }
  throw Error(ErrorCode::kParseError, "document holds no interval set");
}

IntervalSet LoadSet(const std::string& path) {
  if (path.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "--set is required");
  }
  return SetFromDocument(io::ReadJsonFile(path));
}

std::uint64_t DefaultTerms(const SequenceSpec& spec) {
  return std::min<std::uint64_t>(spec.max_length(), std::uint64_t{1} << 62);
}

int Finish(Sink& sink, const Json& report, const Certificates& checks,
           const IntervalSet* streamed = nullptr) {
  io::WriteReport(sink.stream(), report, streamed);
  sink.Close();
  return AllPass(checks) ? kExitOk : kExitCertificate;
}

Json ParamsWithSequence(const SequenceSpec& spec, std::uint64_t terms) {
  return {{"sequence", io::ToJson(spec)}, {"terms", terms}};
}

int GenSet(const Options& o, std::ostream& out) {
  const Interval base =
      Interval::Make(Rational::Parse(o.lo), Rational::Parse(o.hi));
  IntervalSet e;
  Json params = {{"kind", o.kind},
                 {"lo", base.lo.ToString()},
                 {"hi", base.hi.ToString()}};
  if (o.kind == "full") {
    e = IntervalSet::Single(base.lo, base.hi);
  } else if (o.kind == "fat-cantor") {
    const auto keep = RationalList(o.keep);
    if (o.mode != "random" && o.mode != "middle") {
      throw Error(ErrorCode::kParseError, "--mode must be random or middle");
    }
    e = FatCantor(keep, base, o.seed,
                  o.mode == "middle" ? CantorMode::kMiddle : CantorMode::kRandom);
    Json k = Json::array();
    for (const Rational& x : keep) k.push_back(x.ToString());
    params["keep"] = k;
    params["mode"] = o.mode;
    params["seed"] = o.seed;
  } else if (o.kind == "random-gaps") {
    const Rational removed = Rational::Parse(o.removed);
    e = RandomGaps(base, o.gaps, removed, o.seed);
    params["gaps"] = o.gaps;
    params["removed"] = removed.ToString();
    params["seed"] = o.seed;
  } else {
    throw Error(ErrorCode::kParseError, "unknown set kind '" + o.kind + "'");
  }
  const Rational m = Measure(e);
  Certificates checks = {
      {"components closed, disjoint and sorted", true,
       std::to_string(e.size()) + " components"}};
  Json result = {{"measure", m.ToString()}, {"components", e.size()}};
  Sink sink(o.output, out);
  return Finish(sink, io::Report("gen-set", params, result, checks), checks,
                &e);
}

int Embed(const Options& o, std::ostream& out) {
  const SequenceSpec spec = io::ParseSequence(o.sequence);
  if (!o.terms) throw Error(ErrorCode::kPreconditionViolated, "--terms needed");
  const SequencePrefix prefix = Terms(spec, *o.terms);
  const IntervalSet e = LoadSet(o.set);
  const Rational delta =
      o.delta.empty() ? FindDelta(prefix, o.N) : Rational::Parse(o.delta);
  const EmbedParams params = MakeEmbedParams(prefix, delta, o.N);
  const EmbeddingResult r = BuildEmbedding(prefix, e, params);
  Json p = ParamsWithSequence(spec, *o.terms);
  p["N"] = o.N;
  p["delta"] = delta.ToString();
  p["set"] = o.set;
  Sink sink(o.output, out);
  return Finish(sink, io::Report("embed", p, io::ToJson(r, e), r.checks),
                r.checks);
}

int Avoid(const Options& o, std::ostream& out) {
  const SequenceSpec spec = io::ParseSequence(o.sequence);
  const std::uint64_t terms = o.terms.value_or(DefaultTerms(spec));
  const AvoidanceSet a = BuildAvoidance(Terms(spec, terms), o.K, o.budget);
  Json p = ParamsWithSequence(spec, terms);
  p["K"] = o.K;
  p["budget"] = o.budget;
  Sink sink(o.output, out);
  return Finish(sink, io::Report("avoid", p, io::ToJson(a), a.checks),
                a.checks, &a.set);
}

AvoidanceSet AvoidanceFromReport(const Json& doc) {
  AvoidanceSet a;
  const Json& r = doc.at("result");
  a.rows = io::AvoidanceRowsFrom(r);
  a.depth = r.at("depth").get<int>();
  a.materialized_depth = r.at("materialized_depth").get<int>();
  a.set = SetFromDocument(doc);
  a.measure_lower_bound = io::RationalFrom(r.at("measure_lower_bound"));
  if (static_cast<std::size_t>(a.depth) != a.rows.size() ||
      a.materialized_depth > a.depth) {
    throw Error(ErrorCode::kParseError, "inconsistent avoidance report");
  }
  return a;
}

int Refute(const Options& o, std::ostream& out) {
  if (o.avoid.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "--avoid is required");
  }
  const Json doc = io::ReadJsonFile(o.avoid);
  const SequenceSpec spec = io::SequenceSpecFrom(doc.at("params").at("sequence"));
  const std::uint64_t terms =
      o.terms.value_or(doc.at("params").at("terms").get<std::uint64_t>());
  const AvoidanceSet a = AvoidanceFromReport(doc);
  const Rational L = Rational::Parse(o.L);
  const SequencePrefix prefix = Terms(spec, terms);
  const RefutationCertificate c = Refute(prefix, L, a, o.horizon);
  Json p = ParamsWithSequence(spec, terms);
  p["L"] = L.ToString();
  p["avoid"] = o.avoid;
  p["horizon"] = o.horizon;
  Json result = {{"certificate", io::ToJson(c)}};
  if (o.stress_trials > 0) {
    const SequencePrefix sp = Terms(spec, std::min(o.stress_terms, terms));
    result["stress"] = io::ToJson(RandomMapStress(sp, a, L, o.stress_trials, o.seed));
    p["stress_terms"] = sp.length();
    p["seed"] = o.seed;
  }
  Sink sink(o.output, out);
  return Finish(sink, io::Report("refute", p, result, c.checks), c.checks);
}

int UniformEmbed(const Options& o, std::ostream& out) {
  const SequenceSpec spec = io::ParseSequence(o.sequence);
  if (!o.terms) throw Error(ErrorCode::kPreconditionViolated, "--terms needed");
  const SequencePrefix prefix = Terms(spec, *o.terms);
  const IntervalSet e = LoadSet(o.set);
  const int depth = o.depth.value_or(static_cast<int>(*o.terms));
  const UniformEmbeddingResult r = BuildUniform(prefix, e, depth);
  Json p = ParamsWithSequence(spec, *o.terms);
  p["depth"] = depth;
  p["set"] = o.set;
  Sink sink(o.output, out);
  return Finish(sink, io::Report("uniform-embed", p, io::ToJson(r), r.checks),
                r.checks);
}

int Glue(const Options& o, std::ostream& out) {
  const SequenceSpec spec = io::ParseSequence(o.sequence);
  if (!o.terms) throw Error(ErrorCode::kPreconditionViolated, "--terms needed");
  const SequencePrefix prefix = Terms(spec, *o.terms);
  const IntervalSet e = LoadSet(o.set);
  const GluedMap g = BuildGlued(prefix, e, o.n_max);
  Json p = ParamsWithSequence(spec, *o.terms);
  p["n_max"] = o.n_max;
  p["set"] = o.set;
  Sink sink(o.output, out);
  return Finish(sink, io::Report("glue", p, io::ToJson(g), g.checks),
                g.checks);
}

std::vector<Rational> RationalsFrom(const Json& arr) {
  std::vector<Rational> out;
  for (const Json& x : arr) out.push_back(io::RationalFrom(x));
  return out;
}

Certificates VerifyReport(const Json& doc, const std::string& set_path) {
  const std::string cmd = doc.at("command").get<std::string>();
  const Json& p = doc.at("params");
  const Json& r = doc.at("result");
  Certificates checks;
  auto prefix = [&] {
    return Terms(io::SequenceSpecFrom(p.at("sequence")),
                 p.at("terms").get<std::uint64_t>());
  };
  if (cmd == "gen-set") {
    const IntervalSet e = SetFromDocument(doc);
    const Rational m = io::RationalFrom(r.at("measure"));
    checks.push_back({"measure reproduces", Measure(e) == m, m.ToString()});
    return checks;
  }
  if (cmd == "embed") {
    const SequencePrefix pre = prefix();
    const IntervalSet e = LoadSet(set_path);
    const EmbedParams params = MakeEmbedParams(
        pre, io::RationalFrom(p.at("delta")), p.at("N").get<int>());
    const auto b = RationalsFrom(r.at("b"));
    checks.push_back(
        {"a_n reproduce", RationalsFrom(r.at("a")) == pre.values(), ""});
    for (auto& c : CertifyEmbedding(pre, e, params, b)) checks.push_back(c);
    const auto map = io::MapFrom(r.at("map"));
    const auto a = pre.values();
    bool interp = true;
    for (std::size_t n = 0; n < a.size() && n < b.size(); ++n) {
      interp = interp && map(a[n]) == b[n];
    }
    checks.push_back({"stored map interpolates (a_n, b_n)", interp, ""});
    return checks;
  }
  if (cmd == "avoid") {
    const AvoidanceSet stored = AvoidanceFromReport(doc);
    const AvoidanceSet fresh = BuildAvoidance(
        prefix(), p.at("K").get<int>(), p.at("budget").get<std::uint64_t>());
    bool rows = fresh.rows.size() == stored.rows.size();
    for (std::size_t i = 0; rows && i < fresh.rows.size(); ++i) {
      const auto& x = fresh.rows[i];
      const auto& y = stored.rows[i];
      rows = x.k == y.k && x.n == y.n && x.ell == y.ell && x.delta == y.delta &&
             x.a_n == y.a_n && x.gap == y.gap;
    }
    checks.push_back({"rows reproduce", rows, ""});
    checks.push_back({"set reproduces",
                      fresh.set == stored.set &&
                          fresh.materialized_depth == stored.materialized_depth,
                      ""});
    for (const auto& c : fresh.checks) checks.push_back(c);
    return checks;
  }
  if (cmd == "refute") {
    const SequencePrefix pre = prefix();
    const Json& stored = r.at("certificate");
    const Rational L = io::RationalFrom(p.at("L"));
    const int k_star = stored.at("k_star").get<int>();
    const AvoidanceSet rows = BuildAvoidance(pre, k_star, 0);
    const RefutationCertificate c =
        Refute(pre, L, rows, p.at("horizon").get<std::uint64_t>());
    checks.push_back({"certificate reproduces",
                      io::ToJson(c) == stored, ""});
    for (const auto& k : c.checks) checks.push_back(k);
    return checks;
  }
  if (cmd == "uniform-embed") {
    const SequencePrefix pre = prefix();
    const IntervalSet e = LoadSet(set_path);
    std::vector<BigInt> js;
    for (const Json& l : r.at("levels")) js.push_back(io::BigIntFrom(l.at("j")));
    const auto b = RationalsFrom(r.at("b"));
    for (auto& c : CertifyUniform(pre, e, p.at("depth").get<int>(), js, b)) {
      checks.push_back(c);
    }
    return checks;
  }
  if (cmd == "glue") {
    const SequencePrefix pre = prefix();
    const IntervalSet e = LoadSet(set_path);
    const auto h = io::MapFrom(r.at("h"));
    const int N = r.at("N").get<int>();
    checks.push_back({"N is the density scale",
                      FindDensityScale(e, DeltaSum(pre),
                                       p.at("n_max").get<int>()) == N,
                      ""});
    for (auto& c : CertifyGlued(pre, e, p.at("n_max").get<int>(), N, h)) {
      checks.push_back(c);
    }
    checks.push_back(
        {"stored H is h(3^-N x)", io::MapFrom(r.at("H")) == Rescale(h, N), ""});
    return checks;
  }
  throw Error(ErrorCode::kParseError, "cannot verify '" + cmd + "' reports");
}

int Verify(const Options& o, std::ostream& out) {
  const Json doc = io::ReadJsonFile(o.file);
  Certificates checks;
  try {
    checks = VerifyReport(doc, o.set);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  Json p = {{"file", o.file}, {"set", o.set}};
  Json result = {{"verified_command", doc.at("command")}};
  Sink sink(o.output, out);
  return Finish(sink, io::Report("verify", p, result, checks), checks);
}

int Plot(const Options& o, std::ostream& out) {
  const std::string svg = svg::Render(io::ReadJsonFile(o.file));
  Sink sink(o.output, out);
  sink.stream() << svg;
  sink.Close();
  return kExitOk;
}

void AddSequence(CLI::App* app, Options& o) {
  app->add_option("--sequence", o.sequence,
                  "geometric:r:f | harmonic | interleaved-mersenne | tower | "
                  "explicit:p/q,... | JSON")
      ->required();
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  if (code == ErrorCode::kParseError || code == ErrorCode::kIoError) {
    return kExitIo;
  }
  if (IsInternalError(code) || code == ErrorCode::kInequalityFails) {
    return kExitCertificate;
  }
  return kExitPrecondition;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact bi-Lipschitz embedding constructions", "bilip"};
  app.require_subcommand(1);
  app.add_option("-o,--output", o.output, "report path (default stdout)");

  auto* gen = app.add_subcommand("gen-set", "generate a target set");
  gen->add_option("--kind", o.kind, "full | fat-cantor | random-gaps");
  gen->add_option("--lo", o.lo);
  gen->add_option("--hi", o.hi);
  gen->add_option("--keep", o.keep, "kept fractions per level");
  gen->add_option("--mode", o.mode, "random | middle");
  gen->add_option("--gaps", o.gaps);
  gen->add_option("--removed", o.removed);
  gen->add_option("--seed", o.seed);

  auto* embed = app.add_subcommand("embed", "embed a fast-decaying sequence");
  AddSequence(embed, o);
  embed->add_option("--terms", o.terms);
  embed->add_option("--set", o.set)->required();
  embed->add_option("--N", o.N);
  embed->add_option("--delta", o.delta, "default: smallest k/64 that works");

  auto* avoid = app.add_subcommand("avoid", "build an avoidance set");
  AddSequence(avoid, o);
  avoid->add_option("--K", o.K)->required();
  avoid->add_option("--terms", o.terms);
  avoid->add_option("--budget", o.budget, "max materialized components");

  auto* refute = app.add_subcommand("refute", "refutation certificate");
  refute->add_option("--L", o.L)->required();
  refute->add_option("--avoid", o.avoid)->required();
  refute->add_option("--terms", o.terms);
  refute->add_option("--horizon", o.horizon);
  refute->add_option("--stress-trials", o.stress_trials);
  refute->add_option("--stress-terms", o.stress_terms);
  refute->add_option("--seed", o.seed);

  auto* uniform = app.add_subcommand("uniform-embed", "uniform-constant map");
  AddSequence(uniform, o);
  uniform->add_option("--terms", o.terms);
  uniform->add_option("--set", o.set)->required();
  uniform->add_option("--depth", o.depth);

  auto* glue = app.add_subcommand("glue", "glue scales near a density point");
  AddSequence(glue, o);
  glue->add_option("--terms", o.terms);
  glue->add_option("--set", o.set)->required();
  glue->add_option("--n-max", o.n_max)->required();

  auto* verify = app.add_subcommand("verify", "re-check a report");
  verify->add_option("file", o.file)->required();
  verify->add_option("--set", o.set);

  auto* plot = app.add_subcommand("plot", "render a report as SVG");
  plot->add_option("file", o.file)->required();

  for (auto* sub : {gen, embed, avoid, refute, uniform, glue, verify, plot}) {
    sub->add_option("-o,--output", o.output, "output path (default stdout)");
  }

  std::vector<std::string> argv_store = {"bilip"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*gen) return GenSet(o, out);
    if (*embed) return Embed(o, out);
    if (*avoid) return Avoid(o, out);
    if (*refute) return Refute(o, out);
    if (*uniform) return UniformEmbed(o, out);
    if (*glue) return Glue(o, out);
    if (*verify) return Verify(o, out);
    if (*plot) return Plot(o, out);
  } catch (const Error& e) {
    err << Json{{"error", {{"code", ErrorCodeName(e.code())},
                           {"message", e.what()}}}}
               .dump()
        << '\n';
    return ExitCodeFor(e.code());
  } catch (const Json::exception& e) {
    err << Json{{"error", {{"code", "ParseError"}, {"message", e.what()}}}}
               .dump()
        << '\n';
    return kExitIo;
  }
  return kExitPrecondition;
}

}  // namespace bilip::cli
