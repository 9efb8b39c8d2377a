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

#include "qpr/operators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "qpr/error.hpp"

namespace qpr {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::PureDephasing:
      return "pd";
    case Scheme::OnlyIncoherence:
      return "oi";
    case Scheme::DephasingWithIncoherence:
      return "di";
  }
  return "?";
}

Scheme parse_scheme(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "pd") return Scheme::PureDephasing;
  if (lower == "oi") return Scheme::OnlyIncoherence;
  if (lower == "di") return Scheme::DephasingWithIncoherence;
  throw ParameterError("unknown scheme '" + std::string(text) + "' (expected pd, oi or di)");
}

GoogleMatrix google_matrix(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ParameterError("damping factor alpha must lie in [0,1], got " + std::to_string(alpha));
  }
  const auto m = static_cast<Eigen::Index>(g.vertex_count());
  if (m < 1) throw ParameterError("google matrix needs at least one vertex");

  const auto out_deg = g.out_degrees();
  const double uniform = 1.0 / static_cast<double>(m);
  Eigen::MatrixXd entries = Eigen::MatrixXd::Constant(m, m, uniform);
  for (Eigen::Index j = 0; j < m; ++j) {
    if (out_deg[static_cast<std::size_t>(j)] > 0) entries.col(j).setConstant((1.0 - alpha) * uniform);
  }
  for (const auto& arc : g.arcs()) {
    entries(arc.to, arc.from) += alpha / static_cast<double>(out_deg[arc.from]);
  }
  return GoogleMatrix(std::move(entries), alpha);
}

GeneratorMatrix generator_matrix(const Graph& g, double gamma) {
  if (!(gamma > 0.0)) throw ParameterError("hopping rate gamma must be positive, got " + std::to_string(gamma));
  const Graph view = g.undirected_view();
  const auto m = static_cast<Eigen::Index>(view.vertex_count());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (const auto& e : view.edges()) {
    h(e.from, e.to) = -gamma;
    h(e.to, e.from) = -gamma;
    h(e.from, e.from) += gamma;
    h(e.to, e.to) += gamma;
  }
  return GeneratorMatrix(std::move(h), gamma);
}

LindbladSpec::LindbladSpec(Scheme scheme, const GoogleMatrix& source)
    : scheme_(scheme), rates_(source.matrix().cwiseAbs()) {
  switch (scheme) {
    case Scheme::PureDephasing:
      rates_ = Eigen::MatrixXd(rates_.diagonal().asDiagonal());
      break;
    case Scheme::OnlyIncoherence:
      rates_.diagonal().setZero();
      break;
    case Scheme::DephasingWithIncoherence:
      break;
  }
}

std::size_t LindbladSpec::operator_count() const noexcept {
  const std::size_t m = dim();
  switch (scheme_) {
    case Scheme::PureDephasing:
      return m;
    case Scheme::OnlyIncoherence:
      return m * (m - 1);
    case Scheme::DephasingWithIncoherence:
      return m * m;
  }
  return 0;
}

bool LindbladSpec::includes(std::size_t i, std::size_t j) const noexcept {
  switch (scheme_) {
    case Scheme::PureDephasing:
      return i == j;
    case Scheme::OnlyIncoherence:
      return i != j;
    case Scheme::DephasingWithIncoherence:
      return true;
  }
  return false;
}

double LindbladSpec::amplitude(std::size_t i, std::size_t j) const {
  if (!includes(i, j)) return 0.0;
  return std::sqrt(rates_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
}

LindbladSpec lindblad_set(const GoogleMatrix& gm, Scheme scheme) { return LindbladSpec(scheme, gm); }

}  // namespace qpr
