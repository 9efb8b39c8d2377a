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

// Independent reference implementations used only by the tests. Nothing
// here shares code with the library's fast paths.

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qpr/graph.hpp"
#include "qpr/operators.hpp"

namespace qpr::testing {

using Cd = std::complex<double>;

// Generator written term by term: every Lindblad operator is materialised
// as a dense M x M matrix and every Kronecker product is formed.
inline Eigen::MatrixXcd literal_superoperator(const Eigen::MatrixXd& h, const Eigen::MatrixXd& google, Scheme scheme,
                                              double omega) {
  const auto m = h.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
  const Eigen::MatrixXcd hc = h.cast<Cd>();
  Eigen::MatrixXcd out = Cd(0.0, -(1.0 - omega)) *
                         (Eigen::kroneckerProduct(id, hc).eval() - Eigen::kroneckerProduct(hc.transpose(), id).eval());
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (scheme == Scheme::PureDephasing && i != j) continue;
      if (scheme == Scheme::OnlyIncoherence && i == j) continue;
      Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(m, m);
      op(i, j) = std::sqrt(std::abs(google(i, j)));
      const Eigen::MatrixXcd odo = op.adjoint() * op;
      out += omega * (Eigen::kroneckerProduct(op.conjugate(), op).eval() -
                      0.5 * Eigen::kroneckerProduct(id, odo).eval() -
                      0.5 * Eigen::kroneckerProduct((op.transpose() * op.conjugate()).eval(), id).eval());
    }
  }
  return out;
}

// Scaling and squaring with Pade, from Eigen's unsupported module.
inline Eigen::MatrixXcd dense_expm(const Eigen::MatrixXcd& a) { return a.exp(); }

inline Eigen::VectorXcd column_stack(const Eigen::MatrixXcd& a) {
  Eigen::VectorXcd v(a.size());
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) v(r + c * a.rows()) = a(r, c);
  }
  return v;
}

inline Eigen::MatrixXcd unstack(const Eigen::VectorXcd& v, Eigen::Index m) {
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    for (Eigen::Index r = 0; r < m; ++r) a(r, c) = v(r + c * m);
  }
  return a;
}

// Random simple directed graph, each ordered pair present with probability p.
inline Graph random_digraph(std::size_t m, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < m; ++j) {
      if (i != j && coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::directed(m, std::move(edges));
}

// A A^dagger / tr for a complex Gaussian A: full rank, generic coherences.
inline Eigen::MatrixXcd random_density(std::size_t m, std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  const auto n = static_cast<Eigen::Index>(m);
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = Cd(n01(rng), n01(rng));
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace();
  return 0.5 * (rho + rho.adjoint());
}

// Fixed-step RK4 for dp/dt = Q p.
inline Eigen::VectorXd rk4(const Eigen::MatrixXd& q, Eigen::VectorXd p, double t, int steps) {
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const Eigen::VectorXd k1 = q * p;
    const Eigen::VectorXd k2 = q * (p + 0.5 * h * k1);
    const Eigen::VectorXd k3 = q * (p + 0.5 * h * k2);
    const Eigen::VectorXd k4 = q * (p + h * k3);
    p += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return p;
}

}  // namespace qpr::testing
