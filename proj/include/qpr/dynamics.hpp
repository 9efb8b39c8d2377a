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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qpr/operators.hpp"

namespace qpr {

using Complex = std::complex<double>;
using SparseSuperMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-8;

/// Hermitian, unit-trace, positive semidefinite M x M matrix.
class DensityState {
 public:
  /// Validates the invariants; throws NumericalError with the offending
  /// drift when one fails.
  explicit DensityState(Eigen::MatrixXcd rho);

  /// The maximally mixed state 1/M.
  static DensityState maximally_mixed(std::size_t m);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  /// Real parts of the diagonal.
  Eigen::VectorXd populations() const { return rho_.diagonal().real(); }

 private:
  Eigen::MatrixXcd rho_;
};

struct StateDrift {
  double hermiticity = 0.0;  // max |rho - rho^dagger|
  double trace = 0.0;        // |tr rho - 1|
  double min_eigenvalue = 0.0;
};

StateDrift measure_drift(const Eigen::MatrixXcd& rho);

/// Nonnegative real vector summing to one.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(Eigen::VectorXd p);
  static ProbabilityVector uniform(std::size_t m);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(p_.size()); }
  const Eigen::VectorXd& values() const noexcept { return p_; }
  double operator[](std::size_t i) const { return p_(static_cast<Eigen::Index>(i)); }

 private:
  Eigen::VectorXd p_;
};

/// Column stacking: entry (r, c) lands at r + c * M.
inline std::size_t vec_index(std::size_t row, std::size_t col, std::size_t m) noexcept {
  return row + col * m;
}
Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho);
Eigen::VectorXcd vectorize(const DensityState& rho);
/// Throws ParameterError when the length is not a perfect square.
Eigen::MatrixXcd devectorize(const Eigen::VectorXcd& v);

/// Vectorised Lindblad generator of the quantum stochastic walk,
///
///   -i (1 - w) (1 (x) H - H^T (x) 1)
///   + w sum_x [O_x^* (x) O_x - 1/2 (1 (x) O_x^dag O_x + O_x^T O_x^* (x) 1)].
///
/// The sparse matrix is kept for inspection and spectral work. Time
/// evolution goes through apply(), which acts on M x M matrices directly
/// and never touches the M^2 x M^2 form.
class Superoperator {
 public:
  Superoperator(const GeneratorMatrix& h, const LindbladSpec& l, double omega);

  std::size_t dim() const noexcept { return m_ * m_; }
  std::size_t hilbert_dim() const noexcept { return m_; }
  double omega() const noexcept { return omega_; }
  Scheme scheme() const noexcept { return scheme_; }
  const SparseSuperMatrix& matrix() const noexcept { return matrix_; }

  /// devectorize(matrix() * vectorize(rho)) without the Kronecker form.
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;
  /// Same map for Hermitian rho = X + iY stored as the real M x 2M block
  /// [X | Y]. One dense product per call, and the output is exactly
  /// symmetric / antisymmetric again.
  Eigen::MatrixXd apply_pair(const Eigen::MatrixXd& xy) const;

  /// trace(matrix()) / M^2.
  double shift() const noexcept { return shift_; }
  /// Upper bound on the operator 2-norm of matrix() - shift() I.
  double norm_bound() const noexcept { return norm_bound_; }

 private:
  Eigen::MatrixXd commutator_real(const Eigen::MatrixXd& x) const;

  std::size_t m_;
  double omega_;
  Scheme scheme_;
  bool sparse_h_;
  Eigen::MatrixXd h_;                       // (1 - w) H
  Eigen::SparseMatrix<double> h_sparse_;    // same, when sparse enough
  Eigen::MatrixXd jump_;                    // w * rates
  Eigen::MatrixXd loss_;                    // w (c_r + c_c) / 2
  SparseSuperMatrix matrix_;
  double shift_ = 0.0;
  double norm_bound_ = 0.0;
};

Superoperator assemble_superoperator(const GeneratorMatrix& h, const LindbladSpec& l, double omega);

/// exp(t O) rho0. The result is symmetrised when its Hermiticity drift is
/// below kStateTolerance and rejected with NumericalError otherwise.
DensityState evolve_density(const Superoperator& s, const DensityState& rho0, double t);

/// exp(t O) applied to the Hermitian part of rho, without validation.
Eigen::MatrixXcd propagate(const Superoperator& s, const Eigen::MatrixXcd& rho, double t);

/// Populations of rho(k dt) for k = 0..steps, evolved step by step.
std::vector<Eigen::VectorXd> population_trajectory(const Superoperator& s, const DensityState& rho0, int steps,
                                                   double dt = 1.0);

/// Classical continuous-time walk p(t) = exp(-H t) p0.
ProbabilityVector ctrw_propagate(const GeneratorMatrix& h, const ProbabilityVector& p0, double t);

struct DephasingProbe {
  double diagonal_drift = 0.0;    // max_i |rho_ii(t) - rho_ii(0)|
  Eigen::MatrixXd decay;          // |rho_ij(t)| / |rho_ij(0)|; NaN where rho_ij(0) = 0 or i = j
  DensityState state;             // rho(t)
};

/// Evolves under the pure-dephasing set at w = 1 and reports how far the
/// populations moved and how much each coherence shrank.
DephasingProbe pd_offdiagonal_probe(const GoogleMatrix& gm, const DensityState& rho0, double t);

}  // namespace qpr
