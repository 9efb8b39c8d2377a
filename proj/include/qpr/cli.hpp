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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpr/graph.hpp"

namespace qpr {

enum class Family { Bernoulli, WattsStrogatz, BarabasiAlbert, Price, Spatial, Zachary };

std::string_view to_string(Family f);
/// bernoulli | ws | ba | price | spatial | zachary
Family parse_family(std::string_view text);

/// A network family with generator arguments. Unset arguments take the
/// values of the reference ensembles: Bernoulli p = 0.6,
/// WS p = 0.2, BA k = 2, Price k = 2 and a = 1, spatial r = 0.35.
struct FamilySpec {
  Family family = Family::Zachary;
  std::size_t n = 100;
  std::optional<double> p;
  std::optional<std::size_t> k;
  std::optional<double> a;
  std::optional<double> r;
  /// Randomly orient undirected families. Unset: yes, except Zachary.
  std::optional<bool> orient;
};

/// The omega used for degeneracy comparisons: WS 0.4, spatial 0.8 for
/// r <= 0.35, 0.9 otherwise.
double family_default_omega(const FamilySpec& spec);

/// SplitMix64 of master + stream; independent streams from one seed.
Seed derive_seed(Seed master, std::uint64_t stream);

/// Replicate `index` of the family: graph drawn with derive_seed(master,
/// 2 index), orientation with derive_seed(master, 2 index + 1).
Graph generate_member(const FamilySpec& spec, Seed master, std::size_t index = 0);
std::vector<Graph> generate_ensemble(const FamilySpec& spec, Seed master, std::size_t replicates);

/// Every knob of a command-line run. Unset optionals fall back to the
/// command's default (tf: 200 for rank, 800 for sweep; omega: 0.9, or the
/// family value for compare).
struct RunConfig {
  std::string command;
  std::string family = "zachary";
  std::size_t n = 100;
  std::optional<double> p;
  std::optional<std::size_t> k;
  std::optional<double> a;
  std::optional<double> r;
  std::string orientation = "auto";  // auto | random | none
  std::string graph;                 // edge-list path; overrides family
  std::optional<double> omega;
  double alpha = 0.9;
  double gamma = 1.0;
  std::optional<double> tf;
  double tol = 1e-6;
  int sig_digits = 4;
  std::size_t replicates = 5;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::string format;  // json | csv | svg; empty picks the command default
  std::string output;  // empty: stdout
  std::string svg;     // extra SVG path for sweep
  std::string sort_by = "qpr_oi";

  bool operator==(const RunConfig&) const = default;
};

/// JSON text; parse_run_config(serialize(c)) == c.
std::string serialize(const RunConfig& c);
RunConfig parse_run_config(std::string_view json);

/// Entry point of the qpr tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpr
