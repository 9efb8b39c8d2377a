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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qpr/dynamics.hpp"
#include "qpr/graph.hpp"
#include "qpr/operators.hpp"

namespace qpr {

inline constexpr double kDefaultRankTime = 200.0;
inline constexpr double kDefaultSweepTime = 800.0;
inline constexpr double kDefaultConvergenceTol = 1e-6;
inline constexpr int kDefaultSigDigits = 4;

/// A decimal mantissa * 10^exponent with exactly `digits` significant
/// digits (or zero). Equality is exact, unlike comparing rounded doubles.
struct RoundedValue {
  std::int64_t mantissa = 0;
  int exponent = 0;

  double value() const;
  auto operator<=>(const RoundedValue& o) const { return value() <=> o.value(); }
  bool operator==(const RoundedValue&) const = default;
};

/// Rounds the exact binary value of x half away from zero.
RoundedValue round_significant(double x, int digits = kDefaultSigDigits);

/// M minus the number of distinct scores after rounding.
std::size_t degeneracy_count(const Eigen::VectorXd& scores, int sig_digits = kDefaultSigDigits);

enum class RankMethod { Cpr, QprPd, QprOi, QprDi };
std::string_view to_string(RankMethod m);
RankMethod rank_method(Scheme s);

struct RankReport {
  RankMethod method = RankMethod::Cpr;
  Eigen::VectorXd scores;
  std::vector<RoundedValue> rounded;
  /// Descending by rounded score, ties by ascending vertex id.
  std::vector<Vertex> order;
  std::size_t degeneracy = 0;
  int sig_digits = kDefaultSigDigits;
  double alpha = kDefaultAlpha;
  std::optional<double> gamma;
  std::optional<double> omega;
  std::optional<double> tf;
};

RankReport make_report(RankMethod method, Eigen::VectorXd scores, int sig_digits = kDefaultSigDigits);

/// Stationary vector of the Google matrix by power iteration, stopped once
/// ||G p - p||_1 < tol. Throws NumericalError after 10^6 iterations.
ProbabilityVector cpr(const GoogleMatrix& gm, double tol = 1e-12);
RankReport cpr_report(const Graph& g, double alpha = kDefaultAlpha, int sig_digits = kDefaultSigDigits);

struct QprOptions {
  double omega = 0.9;
  double tf = kDefaultRankTime;
  double alpha = kDefaultAlpha;
  double gamma = kDefaultGamma;
  int sig_digits = kDefaultSigDigits;
};

/// Populations of exp(tf O) 1/M. Only OI and DI are accepted, with
/// 0 < omega <= 1; anything else is a UsageError.
RankReport qpr(const Graph& g, Scheme scheme, const QprOptions& opt = {});

struct ConvergenceOptions {
  double tf = kDefaultSweepTime;
  double tol = kDefaultConvergenceTol;
  double alpha = kDefaultAlpha;
  double gamma = kDefaultGamma;
};

/// Smallest integer t with ||diag rho(t) - diag rho(tf)||_2 < tol, starting
/// from 1/M. tf must be a positive integer, and rho(tf) must already be
/// stationary: ||diag rho(tf) - diag rho(tf - 1)||_2 < tol / 10, else
/// StationarityError.
int convergence_time(const Superoperator& s, double tf = kDefaultSweepTime, double tol = kDefaultConvergenceTol);
int convergence_time(const Graph& g, Scheme scheme, double omega, const ConvergenceOptions& opt = {});

/// Population distance to rho(tf) at every integer time 0..tf.
std::vector<double> population_distances(const Superoperator& s, int tf);

struct SweepOptions {
  std::vector<double> grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  ConvergenceOptions convergence;
  unsigned threads = 0;  // 0: hardware concurrency
};

std::vector<double> default_omega_grid();

struct SweepResult {
  std::vector<double> omegas;
  /// tau[replicate][omega index]
  std::vector<std::vector<int>> tau_oi;
  std::vector<std::vector<int>> tau_di;
  /// Replicate means of tau / tau_DI(omega = 1).
  std::vector<double> ratio_oi;
  std::vector<double> ratio_di;
  std::size_t replicates = 0;

  bool operator==(const SweepResult&) const = default;
};

/// Convergence-time ratios over an omega grid for an ensemble of graphs.
/// Each replicate is normalised by its own DI time at omega = 1, so the
/// grid must contain 1.
SweepResult sweep_omega(const std::vector<Graph>& replicates, const SweepOptions& opt = {});

/// 1 / |Re lambda_1|, lambda_1 being the eigenvalue of largest real part
/// among those with Re < -1e-12, after the trace-preserving zero mode is
/// projected out. Returns +infinity when there is none. Dense: M <= 50.
double spectral_bound(const Superoperator& s);

}  // namespace qpr
