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


#include "bilip/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

#include "bilip/error.hpp"

namespace bilip::svg {

namespace {

using io::Json;

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kMargin = 50;

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double D(const Json& j) { return io::RationalFrom(j).ToDouble(); }

struct Frame {
  double x0, x1, y0, y1;

  double X(double x) const {
    return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin);
  }
  double Y(double y) const {
    return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
  }
};

Frame Fit(double x0, double x1, double y0, double y1) {
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  const double px = (x1 - x0) * 0.05;
  const double py = (y1 - y0) * 0.05;
  return {x0 - px, x1 + px, y0 - py, y1 + py};
}

class Doc {
 public:
  explicit Doc(const std::string& title) {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
        << ' ' << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    Text(kMargin, 25, title, 16);
  }

  void Text(double x, double y, const std::string& s, int size = 11) {
    os_ << "<text x=\"" << Num(x) << "\" y=\"" << Num(y)
        << "\" font-family=\"monospace\" font-size=\"" << size << "\">"
        << Escape(s) << "</text>\n";
  }
  void Rect(double x, double y, double w, double h, const char* fill,
            double opacity = 1) {
    os_ << "<rect x=\"" << Num(x) << "\" y=\"" << Num(y) << "\" width=\""
        << Num(std::max(w, 0.5)) << "\" height=\"" << Num(std::max(h, 0.5))
        << "\" fill=\"" << fill << "\" fill-opacity=\"" << Num(opacity)
        << "\"/>\n";
  }
  void Line(double x0, double y0, double x1, double y1, const char* stroke,
            double width = 1) {
    os_ << "<line x1=\"" << Num(x0) << "\" y1=\"" << Num(y0) << "\" x2=\""
        << Num(x1) << "\" y2=\"" << Num(y1) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << Num(width) << "\"/>\n";
  }
  void Dot(double x, double y, const char* fill) {
    os_ << "<circle cx=\"" << Num(x) << "\" cy=\"" << Num(y)
        << "\" r=\"2.5\" fill=\"" << fill << "\"/>\n";
  }
  void Axes(const Frame& f) {
    Line(kMargin, kHeight - kMargin, kWidth - kMargin, kHeight - kMargin,
         "black");
    Line(kMargin, kMargin, kMargin, kHeight - kMargin, "black");
    Text(kMargin, kHeight - kMargin + 15, Num(f.x0));
    Text(kWidth - kMargin - 60, kHeight - kMargin + 15, Num(f.x1));
    Text(2, kHeight - kMargin, Num(f.y0), 9);
    Text(2, kMargin + 4, Num(f.y1), 9);
  }
  std::string Finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  static std::string Escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
      }
    }
    return out;
  }

  std::ostringstream os_;
};

std::vector<std::pair<double, double>> MapPoints(const Json& map) {
  std::vector<std::pair<double, double>> pts;
  for (const Json& p : map.at("breakpoints")) pts.emplace_back(D(p[0]), D(p[1]));
  return pts;
}

void DrawMap(Doc& doc, const Frame& f,
             const std::vector<std::pair<double, double>>& pts,
             const char* stroke) {
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    doc.Line(f.X(pts[i].first), f.Y(pts[i].second), f.X(pts[i + 1].first),
             f.Y(pts[i + 1].second), stroke, 1.5);
  }
}

Frame FrameOf(const std::vector<std::pair<double, double>>& pts) {
  double x0 = pts.front().first, x1 = x0, y0 = pts.front().second, y1 = y0;
  for (const auto& [x, y] : pts) {
    x0 = std::min(x0, x), x1 = std::max(x1, x);
    y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  return Fit(x0, x1, y0, y1);
}

// One bar of width kWidth - 2 kMargin over [lo, hi]; components are merged
// per pixel column so huge sets stay small.
void DrawSetBar(Doc& doc, const Json& comps, double lo, double hi, double y,
                double h, const char* fill) {
  const double span = kWidth - 2 * kMargin;
  std::vector<char> cols(static_cast<std::size_t>(span), 0);
  for (const Json& c : comps) {
    const double a = (D(c[0]) - lo) / (hi - lo) * span;
    const double b = (D(c[1]) - lo) / (hi - lo) * span;
    const auto first = static_cast<std::ptrdiff_t>(std::max(0.0, a));
    const auto last = static_cast<std::ptrdiff_t>(std::min(span - 1, b));
    for (std::ptrdiff_t i = first; i <= last; ++i) cols[i] = 1;
  }
  for (std::size_t i = 0; i < cols.size();) {
    if (!cols[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cols.size() && cols[j]) ++j;
    doc.Rect(kMargin + static_cast<double>(i), y, static_cast<double>(j - i),
             h, fill);
    i = j;
  }
}

std::string RenderSet(const Json& set, const std::string& title) {
  Doc doc(title);
  const Json& comps = set.at("components");
  double lo = 0, hi = 1;
  if (!comps.empty()) {
    lo = D(comps.front()[0]);
    hi = D(comps.back()[1]);
  }
  const Frame f = Fit(lo, hi, 0, 1);
  DrawSetBar(doc, comps, f.x0, f.x1, kHeight / 2 - 20, 40, "steelblue");
  doc.Text(kMargin, kHeight / 2 + 45,
           std::to_string(comps.size()) + " components on [" + Num(lo) +
               ", " + Num(hi) + "]");
  return doc.Finish();
}

std::string RenderEmbed(const Json& r) {
  Doc doc("embedding: f(a_n) = b_n, bands I_k");
  const auto pts = MapPoints(r.at("map"));
  const Frame f = FrameOf(pts);
  int i = 0;
  for (const Json& b : r.at("blocks")) {
    const double lo = f.X(D(b.at("interval")[0]));
    const double hi = f.X(D(b.at("interval")[1]));
    doc.Rect(lo, kMargin, hi - lo, kHeight - 2 * kMargin,
             i++ % 2 ? "orange" : "gold", 0.25);
  }
  doc.Axes(f);
  DrawMap(doc, f, pts, "navy");
  const Json& a = r.at("a");
  const Json& b = r.at("b");
  for (std::size_t n = 0; n < a.size(); ++n) {
    doc.Dot(f.X(D(a[n])), f.Y(D(b[n])), "crimson");
  }
  return doc.Finish();
}

std::string RenderUniform(const Json& r, const std::string& title) {
  Doc doc(title);
  const auto pts = MapPoints(r.at("map"));
  const Frame f = FrameOf(pts);
  for (const Json& l : r.at("levels")) {
    const double lo = f.Y(D(l.at("delta_prime")[1]));
    const double hi = f.Y(D(l.at("delta_prime")[0]));
    doc.Rect(kMargin, lo, kWidth - 2 * kMargin, hi - lo, "seagreen", 0.2);
  }
  doc.Axes(f);
  DrawMap(doc, f, pts, "navy");
  return doc.Finish();
}

std::string RenderGlue(const Json& r) {
  Doc doc("glued map h across scales, connectors in red");
  const auto pts = MapPoints(r.at("h"));
  const Frame f = FrameOf(pts);
  doc.Axes(f);
  DrawMap(doc, f, pts, "navy");
  const auto h = io::MapFrom(r.at("h"));
  for (const Json& c : r.at("connectors")) {
    const Rational x0 = io::RationalFrom(c.at("domain")[0]);
    const Rational x1 = io::RationalFrom(c.at("domain")[1]);
    doc.Line(f.X(x0.ToDouble()), f.Y(h(x0).ToDouble()), f.X(x1.ToDouble()),
             f.Y(h(x1).ToDouble()), "red", 3);
  }
  return doc.Finish();
}

std::string RenderAvoid(const Json& r) {
  Doc doc("avoidance set, depth " + std::to_string(r.at("depth").get<int>()));
  double y = 60;
  doc.Text(kMargin, y, "materialized depth " +
                           std::to_string(r.at("materialized_depth").get<int>()));
  y += 20;
  if (r.contains("set")) {
    DrawSetBar(doc, r.at("set").at("components"), 0, 1, y, 40, "steelblue");
    y += 60;
  }
  for (const Json& row : r.at("rows")) {
    doc.Text(kMargin, y,
             "k=" + std::to_string(row.at("k").get<int>()) +
                 "  n_k=" + std::to_string(row.at("n").get<std::uint64_t>()) +
                 "  ell_k=" + std::to_string(row.at("ell").get<std::uint64_t>()) +
                 "  delta_k~" + Num(D(row.at("delta"))));
    y += 16;
    if (y > kHeight - 10) break;
  }
  return doc.Finish();
}

std::string RenderRefute(const Json& r) {
  Doc doc("refutation certificate");
  double y = 70;
  for (const char* key : {"L", "C", "delta"}) {
    doc.Text(kMargin, y, std::string(key) + " ~ " + Num(D(r.at(key))));
    y += 18;
  }
  for (const char* key : {"k_star", "n_k", "ell", "last_index"}) {
    doc.Text(kMargin, y, std::string(key) + " = " + r.at(key).dump());
    y += 18;
  }
  doc.Text(kMargin, y, std::string("valid = ") +
                           (r.at("valid").get<bool>() ? "true" : "false"));
  return doc.Finish();
}

}  // namespace

std::string Render(const Json& doc) {
  try {
    if (doc.contains("components") && !doc.contains("command")) {
      return RenderSet(doc, "interval set");
    }
    const std::string cmd = doc.at("command").get<std::string>();
    const Json& r = doc.at("result");
    if (cmd == "gen-set") return RenderSet(r.at("set"), "generated set");
    if (cmd == "embed") return RenderEmbed(r);
    if (cmd == "avoid") return RenderAvoid(r);
    if (cmd == "refute") return RenderRefute(r.at("certificate"));
    if (cmd == "uniform-embed") return RenderUniform(r, "uniform embedding");
    if (cmd == "glue") return RenderGlue(r);
    throw Error(ErrorCode::kParseError, "nothing to plot for '" + cmd + "'");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace bilip::svg
