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
#include <optional>
#include <string>
#include <vector>

#include "qpr/ranking.hpp"

namespace qpr {

inline constexpr int kSchemaVersion = 1;

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);
/// Decimal text of a rounded score, e.g. "0.1965" or "1.250e-05".
std::string format_rounded(const RoundedValue& r);

struct GraphSummary {
  std::size_t m = 0;
  std::size_t edges = 0;
  bool directed = true;
  std::optional<std::uint64_t> seed;
};

GraphSummary summarize(const Graph& g, std::optional<std::uint64_t> seed = std::nullopt);

struct RankBundle {
  GraphSummary graph;
  double alpha = kDefaultAlpha;
  double gamma = kDefaultGamma;
  double omega = 0.9;
  double tf = kDefaultRankTime;
  int sig_digits = kDefaultSigDigits;
  RankReport cpr;
  RankReport qpr_oi;
  RankReport qpr_di;
};

/// CPR, QPR-OI and QPR-DI for one graph with shared parameters.
RankBundle rank_all(const Graph& g, const QprOptions& opt, std::optional<std::uint64_t> seed = std::nullopt);

/// {schema_version, graph{m, edges, directed, seed}, params{alpha, gamma,
/// omega, tf, sig_digits}, methods{cpr, qpr_oi, qpr_di}}; each method holds
/// scores, rounded, order (1-based) and degeneracy.
std::string rank_json(const RankBundle& b);

/// One row per vertex (1-based), rounded scores, ordered like `sort_by`.
std::string rank_csv(const RankBundle& b, RankMethod sort_by = RankMethod::QprOi);

/// Header "omega,tau_oi_ratio,tau_di_ratio,replicates".
std::string sweep_csv(const SweepResult& r);

/// Static line plot of both ratio curves against omega.
std::string sweep_svg(const SweepResult& r, const std::string& title = "");

struct CompareRow {
  std::size_t network = 0;  // 1-based
  std::uint64_t seed = 0;
  std::size_t cpr = 0;
  std::size_t qpr_oi = 0;
  std::size_t qpr_di = 0;
};

struct CompareTable {
  std::string family;
  double omega = 0.9;
  std::vector<CompareRow> rows;

  double mean_cpr() const;
  double mean_qpr_oi() const;
  double mean_qpr_di() const;
};

/// Header "network,seed,cpr,qpr_oi,qpr_di".
std::string compare_csv(const CompareTable& t);
std::string compare_json(const CompareTable& t);

}  // namespace qpr
