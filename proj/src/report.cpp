// Copyright 2026 The QPR Authors
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

#include "qpr/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "qpr/error.hpp"

namespace qpr {
namespace {

using Json = nlohmann::ordered_json;

Json method_json(const RankReport& r) {
  Json j;
  j["scores"] = std::vector<double>(r.scores.begin(), r.scores.end());
  Json rounded = Json::array();
  for (const auto& v : r.rounded) rounded.push_back(v.value());
  j["rounded"] = std::move(rounded);
  Json order = Json::array();
  for (Vertex v : r.order) order.push_back(v + 1);
  j["order"] = std::move(order);
  j["degeneracy"] = r.degeneracy;
  return j;
}

const RankReport& pick(const RankBundle& b, RankMethod m) {
  switch (m) {
    case RankMethod::Cpr:
      return b.cpr;
    case RankMethod::QprOi:
      return b.qpr_oi;
    case RankMethod::QprDi:
      return b.qpr_di;
    case RankMethod::QprPd:
      break;
  }
  throw UsageError("rank tables can be sorted by cpr, qpr_oi or qpr_di only");
}

std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

double mean_of(const std::vector<CompareRow>& rows, std::size_t CompareRow::*field) {
  if (rows.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : rows) sum += static_cast<double>(r.*field);
  return sum / static_cast<double>(rows.size());
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_rounded(const RoundedValue& r) {
  if (r.mantissa == 0) return "0";
  std::string digits = std::to_string(std::llabs(r.mantissa));
  const std::string sign = r.mantissa < 0 ? "-" : "";
  const int lead = r.exponent + static_cast<int>(digits.size()) - 1;  // power of the first digit
  if (lead < -6 || lead > 9) {
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    char exp[16];
    std::snprintf(exp, sizeof exp, "e%+03d", lead);
    return sign + mant + exp;
  }
  if (r.exponent >= 0) return sign + digits + std::string(static_cast<std::size_t>(r.exponent), '0');
  const auto frac = static_cast<std::size_t>(-r.exponent);
  if (digits.size() <= frac) digits.insert(0, frac - digits.size() + 1, '0');
  digits.insert(digits.size() - frac, ".");
  return sign + digits;
}

GraphSummary summarize(const Graph& g, std::optional<std::uint64_t> seed) {
  return {g.vertex_count(), g.edge_count(), g.is_directed(), seed};
}

RankBundle rank_all(const Graph& g, const QprOptions& opt, std::optional<std::uint64_t> seed) {
  RankBundle b;
  b.graph = summarize(g, seed);
  b.alpha = opt.alpha;
  b.gamma = opt.gamma;
  b.omega = opt.omega;
  b.tf = opt.tf;
  b.sig_digits = opt.sig_digits;
  b.cpr = cpr_report(g, opt.alpha, opt.sig_digits);
  b.qpr_oi = qpr(g, Scheme::OnlyIncoherence, opt);
  b.qpr_di = qpr(g, Scheme::DephasingWithIncoherence, opt);
  return b;
}

std::string rank_json(const RankBundle& b) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["graph"] = {{"m", b.graph.m}, {"edges", b.graph.edges}, {"directed", b.graph.directed}};
  j["graph"]["seed"] = b.graph.seed ? Json(*b.graph.seed) : Json(nullptr);
  j["params"] = {{"alpha", b.alpha}, {"gamma", b.gamma}, {"omega", b.omega}, {"tf", b.tf}, {"sig_digits", b.sig_digits}};
  j["methods"] = {{"cpr", method_json(b.cpr)}, {"qpr_oi", method_json(b.qpr_oi)}, {"qpr_di", method_json(b.qpr_di)}};
  return j.dump(2) + "\n";
}

std::string rank_csv(const RankBundle& b, RankMethod sort_by) {
  const RankReport& key = pick(b, sort_by);
  std::ostringstream out;
  out << "vertex,cpr,qpr_oi,qpr_di\n";
  for (Vertex v : key.order) {
    out << v + 1 << ',' << format_rounded(b.cpr.rounded[v]) << ',' << format_rounded(b.qpr_oi.rounded[v]) << ','
        << format_rounded(b.qpr_di.rounded[v]) << '\n';
  }
  return out.str();
}

std::string sweep_csv(const SweepResult& r) {
  std::ostringstream out;
  out << "omega,tau_oi_ratio,tau_di_ratio,replicates\n";
  for (std::size_t i = 0; i < r.omegas.size(); ++i) {
    out << format_double(r.omegas[i]) << ',' << format_double(r.ratio_oi[i]) << ',' << format_double(r.ratio_di[i])
        << ',' << r.replicates << '\n';
  }
  return out.str();
}

std::string sweep_svg(const SweepResult& r, const std::string& title) {
  constexpr double kW = 640, kH = 400, kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;
  const double pw = kW - kLeft - kRight;
  const double ph = kH - kTop - kBottom;
  double ymax = 0.0;
  for (double v : r.ratio_oi) ymax = std::max(ymax, v);
  for (double v : r.ratio_di) ymax = std::max(ymax, v);
  ymax = ymax > 0.0 ? 1.1 * ymax : 1.0;
  const auto sx = [&](double w) { return kLeft + w * pw; };
  const auto sy = [&](double v) { return kTop + ph - v / ymax * ph; };
  const auto line = [&](const std::vector<double>& ys) {
    std::string pts;
    for (std::size_t i = 0; i < r.omegas.size(); ++i) {
      if (i) pts += ' ';
      pts += fixed2(sx(r.omegas[i])) + ',' + fixed2(sy(ys[i]));
    }
    return pts;
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) s << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(title) << "</text>\n";
  s << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 10; ++i) {
    const double w = i / 10.0;
    s << "<line x1=\"" << fixed2(sx(w)) << "\" y1=\"" << kTop + ph << "\" x2=\"" << fixed2(sx(w)) << "\" y2=\""
      << kTop + ph + 5 << "\" stroke=\"black\"/>";
    s << "<text x=\"" << fixed2(sx(w)) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << fixed2(w).substr(0, 3)
      << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double v = ymax * i / 5.0;
    s << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fixed2(sy(v)) << "\" x2=\"" << kLeft << "\" y2=\"" << fixed2(sy(v))
      << "\" stroke=\"black\"/>";
    s << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed2(sy(v) + 4) << "\" text-anchor=\"end\">" << fixed2(v) << "</text>\n";
  }
  s << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kH - 15 << "\" text-anchor=\"middle\">&#969;</text>\n";
  s << "<text x=\"18\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << kTop + ph / 2
    << ")\">&#964;_QPR / &#964;_CPR</text>\n";
  s << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"" << line(r.ratio_oi) << "\"/>\n";
  s << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"" << line(r.ratio_di) << "\"/>\n";
  s << "<text x=\"" << kLeft + pw - 90 << "\" y=\"" << kTop + 18 << "\" fill=\"#1f77b4\">QPR-OI</text>\n";
  s << "<text x=\"" << kLeft + pw - 90 << "\" y=\"" << kTop + 34 << "\" fill=\"#d62728\">QPR-DI</text>\n";
  s << "</svg>\n";
  return s.str();
}

double CompareTable::mean_cpr() const { return mean_of(rows, &CompareRow::cpr); }
double CompareTable::mean_qpr_oi() const { return mean_of(rows, &CompareRow::qpr_oi); }
double CompareTable::mean_qpr_di() const { return mean_of(rows, &CompareRow::qpr_di); }

std::string compare_csv(const CompareTable& t) {
  std::ostringstream out;
  out << "network,seed,cpr,qpr_oi,qpr_di\n";
  for (const auto& r : t.rows) {
    out << r.network << ',' << r.seed << ',' << r.cpr << ',' << r.qpr_oi << ',' << r.qpr_di << '\n';
  }
  return out.str();
}

std::string compare_json(const CompareTable& t) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = t.family;
  j["omega"] = t.omega;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"network", r.network}, {"seed", r.seed}, {"cpr", r.cpr}, {"qpr_oi", r.qpr_oi}, {"qpr_di", r.qpr_di}});
  }
  j["rows"] = std::move(rows);
  j["mean"] = {{"cpr", t.mean_cpr()}, {"qpr_oi", t.mean_qpr_oi()}, {"qpr_di", t.mean_qpr_di()}};
  return j.dump(2) + "\n";
}

}  // namespace qpr
