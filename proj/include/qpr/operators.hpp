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
#include <string_view>

#include <Eigen/Dense>

#include "qpr/graph.hpp"

namespace qpr {

inline constexpr double kDefaultAlpha = 0.9;
inline constexpr double kDefaultGamma = 1.0;

/// Incoherent scattering scheme of a quantum stochastic walk.
enum class Scheme {
  PureDephasing,             ///< |i><i| operators only (PD)
  OnlyIncoherence,           ///< |i><j|, i != j (OI)
  DephasingWithIncoherence,  ///< every |i><j| (DI)
};

std::string_view to_string(Scheme s);
/// Accepts "pd", "oi", "di" in any case. Throws ParameterError otherwise.
Scheme parse_scheme(std::string_view text);

/// Column-stochastic damped transition matrix of a directed graph.
///
/// entry(i, j) = alpha * [j->i] / out_deg(j) + (1 - alpha) / M, or 1/M for
/// the whole column when j has no out-arcs. Undirected graphs count each
/// edge in both directions.
class GoogleMatrix {
 public:
  GoogleMatrix(Eigen::MatrixXd entries, double alpha) : entries_(std::move(entries)), alpha_(alpha) {}

  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  double alpha() const noexcept { return alpha_; }
  const Eigen::MatrixXd& matrix() const noexcept { return entries_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

 private:
  Eigen::MatrixXd entries_;
  double alpha_;
};

GoogleMatrix google_matrix(const Graph& g, double alpha = kDefaultAlpha);

/// gamma-scaled Laplacian of the undirected view: degree * gamma on the
/// diagonal, -gamma between adjacent vertices.
class GeneratorMatrix {
 public:
  GeneratorMatrix(Eigen::MatrixXd entries, double gamma) : entries_(std::move(entries)), gamma_(gamma) {}

  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  double gamma() const noexcept { return gamma_; }
  const Eigen::MatrixXd& matrix() const noexcept { return entries_; }

 private:
  Eigen::MatrixXd entries_;
  double gamma_;
};

GeneratorMatrix generator_matrix(const Graph& g, double gamma = kDefaultGamma);

/// Implicit set of rank-one Lindblad operators sqrt(G_ij) |i><j| over the
/// index set selected by the scheme. Nothing is materialised: the set is
/// the Google matrix masked to the scheme's (i, j) pairs.
class LindbladSpec {
 public:
  LindbladSpec(Scheme scheme, const GoogleMatrix& source);

  Scheme scheme() const noexcept { return scheme_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(rates_.rows()); }

  /// Nominal operator count X: M, M(M-1) or M^2. Zero-amplitude operators
  /// are counted.
  std::size_t operator_count() const noexcept;

  bool includes(std::size_t i, std::size_t j) const noexcept;
  /// sqrt(|G_ij|) when (i, j) is in the scheme's index set, else 0.
  double amplitude(std::size_t i, std::size_t j) const;

  /// Squared amplitudes: the Google matrix with excluded entries zeroed.
  /// Column j holds the jump rates out of vertex j.
  const Eigen::MatrixXd& rates() const noexcept { return rates_; }
  /// Diagonal of sum_x O_x^dagger O_x, i.e. the column sums of rates().
  Eigen::VectorXd loss_rates() const { return rates_.colwise().sum().transpose(); }

 private:
  Scheme scheme_;
  Eigen::MatrixXd rates_;
};

LindbladSpec lindblad_set(const GoogleMatrix& gm, Scheme scheme);

}  // namespace qpr
