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

#include "qpr/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpr/edgelist.hpp"
#include "qpr/error.hpp"
#include "qpr/ranking.hpp"
#include "qpr/report.hpp"

namespace qpr {
namespace {

using Json = nlohmann::ordered_json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

template <typename T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
void opt_from(const Json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key)) return;
  if (j.at(key).is_null()) {
    v.reset();
  } else {
    v = j.at(key).get<T>();
  }
}

template <typename T>
void from(const Json& j, const char* key, T& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

FamilySpec family_spec(const RunConfig& c) {
  FamilySpec s;
  s.family = parse_family(c.family);
  s.n = c.n;
  s.p = c.p;
  s.k = c.k;
  s.a = c.a;
  s.r = c.r;
  const std::string o = lower(c.orientation);
  if (o == "random") {
    s.orient = true;
  } else if (o == "none") {
    s.orient = false;
  } else if (o != "auto") {
    throw ParameterError("orientation must be auto, random or none, got '" + c.orientation + "'");
  }
  return s;
}

struct Source {
  std::vector<Graph> graphs;
  std::optional<std::uint64_t> seed;
};

Source resolve_graphs(const RunConfig& c, std::size_t replicates) {
  if (!c.graph.empty()) return {{load_edgelist(c.graph)}, std::nullopt};
  return {generate_ensemble(family_spec(c), Seed{c.seed}, replicates), c.seed};
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty() || c.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw Error("cannot open '" + c.output + "' for writing");
  f << text;
  if (!f.flush()) throw Error("failed writing '" + c.output + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw Error("failed writing '" + path + "'");
}

std::string format_or(const RunConfig& c, const char* fallback) {
  return c.format.empty() ? fallback : lower(c.format);
}

RankMethod sort_key(const std::string& s) {
  const std::string l = lower(s);
  if (l == "cpr") return RankMethod::Cpr;
  if (l == "qpr_oi" || l == "oi") return RankMethod::QprOi;
  if (l == "qpr_di" || l == "di") return RankMethod::QprDi;
  throw ParameterError("sort key must be cpr, qpr_oi or qpr_di, got '" + s + "'");
}

void cmd_generate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Graph g = generate_member(family_spec(c), Seed{c.seed});
  std::ostringstream text;
  write_edgelist(g, text);
  emit(c, text.str(), out);
  std::ostream& log = (c.output.empty() || c.output == "-") ? err : out;
  log << "M=" << g.vertex_count() << " edges=" << g.edge_count() << " seed=" << c.seed << '\n';
}

void cmd_rank(const RunConfig& c, std::ostream& out) {
  const Source src = resolve_graphs(c, 1);
  QprOptions opt;
  opt.omega = c.omega.value_or(0.9);
  opt.tf = c.tf.value_or(kDefaultRankTime);
  opt.alpha = c.alpha;
  opt.gamma = c.gamma;
  opt.sig_digits = c.sig_digits;
  const RankBundle b = rank_all(src.graphs.front(), opt, src.seed);
  const std::string fmt = format_or(c, "json");
  if (fmt == "json") {
    emit(c, rank_json(b), out);
  } else if (fmt == "csv") {
    emit(c, rank_csv(b, sort_key(c.sort_by)), out);
  } else {
    throw ParameterError("rank writes json or csv, not '" + fmt + "'");
  }
}

void cmd_sweep(const RunConfig& c, std::ostream& out) {
  const Source src = resolve_graphs(c, c.replicates);
  SweepOptions opt;
  opt.grid = c.grid;
  opt.convergence.tf = c.tf.value_or(kDefaultSweepTime);
  opt.convergence.tol = c.tol;
  opt.convergence.alpha = c.alpha;
  opt.convergence.gamma = c.gamma;
  opt.threads = c.threads;
  const SweepResult r = sweep_omega(src.graphs, opt);
  const std::string fmt = format_or(c, "csv");
  if (fmt == "csv") {
    emit(c, sweep_csv(r), out);
  } else if (fmt == "svg") {
    emit(c, sweep_svg(r), out);
  } else {
    throw ParameterError("sweep writes csv or svg, not '" + fmt + "'");
  }
  if (!c.svg.empty()) write_file(c.svg, sweep_svg(r));
}

void cmd_compare(const RunConfig& c, std::ostream& out) {
  if (!c.graph.empty()) throw UsageError("compare works on a generated family; drop --graph");
  const FamilySpec spec = family_spec(c);
  CompareTable t;
  t.family = std::string(to_string(spec.family));
  t.omega = c.omega.value_or(family_default_omega(spec));
  QprOptions opt;
  opt.omega = t.omega;
  opt.tf = c.tf.value_or(kDefaultRankTime);
  opt.alpha = c.alpha;
  opt.gamma = c.gamma;
  opt.sig_digits = c.sig_digits;
  const auto graphs = generate_ensemble(spec, Seed{c.seed}, c.replicates);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const RankBundle b = rank_all(graphs[i], opt, c.seed);
    t.rows.push_back({i + 1, derive_seed(Seed{c.seed}, 2 * i).value, b.cpr.degeneracy, b.qpr_oi.degeneracy,
                      b.qpr_di.degeneracy});
  }
  const std::string fmt = format_or(c, "csv");
  if (fmt == "csv") {
    emit(c, compare_csv(t), out);
  } else if (fmt == "json") {
    emit(c, compare_json(t), out);
  } else {
    throw ParameterError("compare writes csv or json, not '" + fmt + "'");
  }
}

void add_family_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family, "bernoulli, ws, ba, price, spatial or zachary");
  sub->add_option("--n", c.n, "vertex count");
  sub->add_option("--p", c.p, "edge probability (bernoulli) or rewiring probability (ws)");
  sub->add_option("--k", c.k, "lattice neighbours per side (ws) or edges per new vertex (ba, price)");
  sub->add_option("--a", c.a, "Price attractiveness offset");
  sub->add_option("--r", c.r, "spatial connection radius");
  sub->add_option("--orientation", c.orientation, "auto, random or none");
  sub->add_option("--seed", c.seed, "master seed");
}

void add_model_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--graph", c.graph, "edge-list file (instead of a family)");
  sub->add_option("--alpha", c.alpha, "Google matrix damping");
  sub->add_option("--gamma", c.gamma, "hopping rate of the generator");
  sub->add_option("--tf", c.tf, "evolution horizon");
  sub->add_option("--format", c.format, "output format");
  sub->add_option("-o,--output", c.output, "output path (default stdout)");
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Bernoulli:
      return "bernoulli";
    case Family::WattsStrogatz:
      return "ws";
    case Family::BarabasiAlbert:
      return "ba";
    case Family::Price:
      return "price";
    case Family::Spatial:
      return "spatial";
    case Family::Zachary:
      return "zachary";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  const std::string l = lower(text);
  if (l == "bernoulli" || l == "er") return Family::Bernoulli;
  if (l == "ws" || l == "watts-strogatz") return Family::WattsStrogatz;
  if (l == "ba" || l == "barabasi-albert") return Family::BarabasiAlbert;
  if (l == "price") return Family::Price;
  if (l == "spatial") return Family::Spatial;
  if (l == "zachary" || l == "karate") return Family::Zachary;
  throw ParameterError("unknown family '" + std::string(text) + "'");
}

double family_default_omega(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::WattsStrogatz:
      return 0.4;
    case Family::Spatial:
      return spec.r.value_or(0.35) <= 0.35 ? 0.8 : 0.9;
    default:
      return 0.9;
  }
}

Seed derive_seed(Seed master, std::uint64_t stream) {
  std::uint64_t z = master.value + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Seed{z ^ (z >> 31)};
}

Graph generate_member(const FamilySpec& spec, Seed master, std::size_t index) {
  const Seed gs = derive_seed(master, 2 * index);
  const Seed os = derive_seed(master, 2 * index + 1);
  Graph g;
  switch (spec.family) {
    case Family::Bernoulli:
      g = gen_bernoulli(spec.n, spec.p.value_or(0.6), gs);
      break;
    case Family::WattsStrogatz:
      g = gen_watts_strogatz(spec.n, spec.p.value_or(0.2), gs, spec.k.value_or(2));
      break;
    case Family::BarabasiAlbert:
      g = gen_barabasi_albert(spec.n, spec.k.value_or(2), gs);
      break;
    case Family::Price:
      g = gen_price(spec.n, spec.k.value_or(2), spec.a.value_or(1.0), gs);
      break;
    case Family::Spatial:
      g = gen_spatial(spec.n, spec.r.value_or(0.35), gs);
      break;
    case Family::Zachary:
      g = zachary();
      break;
  }
  const bool orient = spec.orient.value_or(spec.family != Family::Zachary);
  if (orient && !g.is_directed()) g = random_orientation(g, os);
  return g;
}

std::vector<Graph> generate_ensemble(const FamilySpec& spec, Seed master, std::size_t replicates) {
  if (replicates == 0) throw ParameterError("replicates must be positive");
  std::vector<Graph> out;
  out.reserve(replicates);
  for (std::size_t i = 0; i < replicates; ++i) out.push_back(generate_member(spec, master, i));
  return out;
}

std::string serialize(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["family"] = c.family;
  j["n"] = c.n;
  j["p"] = opt_json(c.p);
  j["k"] = opt_json(c.k);
  j["a"] = opt_json(c.a);
  j["r"] = opt_json(c.r);
  j["orientation"] = c.orientation;
  j["graph"] = c.graph;
  j["omega"] = opt_json(c.omega);
  j["alpha"] = c.alpha;
  j["gamma"] = c.gamma;
  j["tf"] = opt_json(c.tf);
  j["tol"] = c.tol;
  j["sig_digits"] = c.sig_digits;
  j["replicates"] = c.replicates;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["grid"] = c.grid;
  j["format"] = c.format;
  j["output"] = c.output;
  j["svg"] = c.svg;
  j["sort_by"] = c.sort_by;
  return j.dump(2) + "\n";
}

RunConfig parse_run_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  RunConfig c;
  try {
    from(j, "command", c.command);
    from(j, "family", c.family);
    from(j, "n", c.n);
    opt_from(j, "p", c.p);
    opt_from(j, "k", c.k);
    opt_from(j, "a", c.a);
    opt_from(j, "r", c.r);
    from(j, "orientation", c.orientation);
    from(j, "graph", c.graph);
    opt_from(j, "omega", c.omega);
    from(j, "alpha", c.alpha);
    from(j, "gamma", c.gamma);
    opt_from(j, "tf", c.tf);
    from(j, "tol", c.tol);
    from(j, "sig_digits", c.sig_digits);
    from(j, "replicates", c.replicates);
    from(j, "seed", c.seed);
    from(j, "threads", c.threads);
    from(j, "grid", c.grid);
    from(j, "format", c.format);
    from(j, "output", c.output);
    from(j, "svg", c.svg);
    from(j, "sort_by", c.sort_by);
  } catch (const Json::exception& e) {
    throw ParameterError(std::string("bad config field: ") + e.what());
  }
  return c;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string config_path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string_view(argv[i]) == "--config") config_path = argv[i + 1];
  }
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path, std::ios::binary);
      if (!f) throw Error("cannot open config '" + config_path + "'");
      std::stringstream ss;
      ss << f.rdbuf();
      c = parse_run_config(ss.str());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  CLI::App app{"Quantum and classical PageRank on small networks"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.add_option("--config", config_path, "JSON run configuration; flags override it");
  bool dump = false;
  app.add_flag("--dump-config", dump, "print the effective configuration as JSON and exit");

  auto* gen = app.add_subcommand("generate", "write a network of a family as an edge list");
  add_family_options(gen, c);
  gen->add_option("-o,--output", c.output, "output path (default stdout)");

  auto* rank = app.add_subcommand("rank", "CPR, QPR-OI and QPR-DI scores with degeneracy counts");
  add_family_options(rank, c);
  add_model_options(rank, c);
  rank->add_option("--omega", c.omega, "coherent/incoherent mix, 0 < omega <= 1");
  rank->add_option("--sig-digits", c.sig_digits, "significant digits for degeneracy");
  rank->add_option("--sort-by", c.sort_by, "row order for csv: cpr, qpr_oi or qpr_di");

  auto* sweep = app.add_subcommand("sweep", "convergence-time ratios over an omega grid");
  add_family_options(sweep, c);
  add_model_options(sweep, c);
  sweep->add_option("--tol", c.tol, "population distance tolerance");
  sweep->add_option("--replicates", c.replicates, "networks in the ensemble");
  sweep->add_option("--grid", c.grid, "omega values; must include 1");
  sweep->add_option("--threads", c.threads, "worker threads (0: all cores)");
  sweep->add_option("--svg", c.svg, "also write a plot to this path");

  auto* compare = app.add_subcommand("compare", "degeneracy counts over an ensemble");
  add_family_options(compare, c);
  compare->add_option("--alpha", c.alpha, "Google matrix damping");
  compare->add_option("--gamma", c.gamma, "hopping rate of the generator");
  compare->add_option("--omega", c.omega, "override the family omega");
  compare->add_option("--tf", c.tf, "evolution horizon");
  compare->add_option("--sig-digits", c.sig_digits, "significant digits for degeneracy");
  compare->add_option("--replicates", c.replicates, "networks in the ensemble");
  compare->add_option("--format", c.format, "csv or json");
  compare->add_option("-o,--output", c.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  for (auto* sub : {gen, rank, sweep, compare}) {
    if (sub->parsed()) c.command = sub->get_name();
  }
  if (dump) {
    out << serialize(c);
    return 0;
  }
  if (c.command.empty()) {
    err << "error: no command given (generate, rank, sweep or compare)\n" << app.help();
    return 1;
  }

  try {
    if (c.command == "generate") cmd_generate(c, out, err);
    if (c.command == "rank") cmd_rank(c, out);
    if (c.command == "sweep") cmd_sweep(c, out);
    if (c.command == "compare") cmd_compare(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qpr
