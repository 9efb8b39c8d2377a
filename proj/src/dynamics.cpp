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

#include "qpr/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qpr/error.hpp"
#include "qpr/expm.hpp"

namespace qpr {
namespace {

// Dense products win once H is more than about a quarter full.
constexpr double kSparseDensity = 0.25;

double hermiticity_drift(const Eigen::MatrixXcd& rho) {
  if (rho.size() == 0) return 0.0;
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Symmetrises in place, or throws when the state is not physical.
void repair_and_check(Eigen::MatrixXcd& rho) {
  const double herm = hermiticity_drift(rho);
  if (!(herm < kStateTolerance)) throw NumericalError("density matrix lost Hermiticity", herm);
  rho = (0.5 * (rho + rho.adjoint())).eval();

  const double trace = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (!(trace < kStateTolerance)) throw NumericalError("density matrix trace drifted from 1", trace);

  const double lo = min_eigenvalue(rho);
  if (!(lo >= -kPositivityTolerance)) throw NumericalError("density matrix has a negative eigenvalue", -lo);
}

// [X | Y] with X the symmetric part of Re rho and Y the antisymmetric part
// of Im rho.
Eigen::MatrixXd hermitian_pair(const Eigen::MatrixXcd& rho) {
  const auto m = rho.rows();
  Eigen::MatrixXd xy(m, 2 * m);
  xy.leftCols(m) = 0.5 * (rho.real() + rho.real().transpose());
  xy.rightCols(m) = 0.5 * (rho.imag() - rho.imag().transpose());
  return xy;
}

auto pair_apply(const Superoperator& s) {
  return [&s](const Eigen::MatrixXd& z) { return s.apply_pair(z); };
}

}  // namespace

DensityState::DensityState(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) {
    throw ParameterError("density matrix must be square and nonempty");
  }
  repair_and_check(rho_);
}

DensityState DensityState::maximally_mixed(std::size_t m) {
  if (m == 0) throw ParameterError("density matrix must be square and nonempty");
  const auto n = static_cast<Eigen::Index>(m);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(n, n) / static_cast<double>(m);
  return DensityState(std::move(rho));
}

StateDrift measure_drift(const Eigen::MatrixXcd& rho) {
  StateDrift d;
  d.hermiticity = hermiticity_drift(rho);
  d.trace = std::abs(rho.trace() - Complex(1.0, 0.0));
  const Eigen::MatrixXcd sym = 0.5 * (rho + rho.adjoint());
  d.min_eigenvalue = min_eigenvalue(sym);
  return d;
}

ProbabilityVector::ProbabilityVector(Eigen::VectorXd p) : p_(std::move(p)) {
  if (p_.size() == 0) throw ParameterError("probability vector must be nonempty");
  const double lo = p_.minCoeff();
  if (!(lo >= -kStateTolerance)) throw NumericalError("probability vector has a negative entry", -lo);
  const double sum_err = std::abs(p_.sum() - 1.0);
  if (!(sum_err < kStateTolerance)) throw NumericalError("probability vector does not sum to 1", sum_err);
  p_ = p_.cwiseMax(0.0);
}

ProbabilityVector ProbabilityVector::uniform(std::size_t m) {
  if (m == 0) throw ParameterError("probability vector must be nonempty");
  return ProbabilityVector(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(m), 1.0 / static_cast<double>(m)));
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw ParameterError("only square matrices are vectorised");
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

Eigen::VectorXcd vectorize(const DensityState& rho) { return vectorize(rho.matrix()); }

Eigen::MatrixXcd devectorize(const Eigen::VectorXcd& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size()) {
    throw ParameterError("vector length " + std::to_string(v.size()) + " is not a perfect square");
  }
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), n, n);
}

Superoperator::Superoperator(const GeneratorMatrix& h, const LindbladSpec& l, double omega)
    : m_(h.dim()), omega_(omega), scheme_(l.scheme()) {
  if (h.dim() != l.dim()) {
    throw ParameterError("generator is " + std::to_string(h.dim()) + "-dimensional but the Lindblad set is " +
                         std::to_string(l.dim()) + "-dimensional");
  }
  if (!(omega >= 0.0 && omega <= 1.0)) throw ParameterError("omega must lie in [0,1], got " + std::to_string(omega));
  if (m_ == 0) throw ParameterError("superoperator needs at least one vertex");

  const auto m = static_cast<Eigen::Index>(m_);
  h_ = (1.0 - omega) * h.matrix();
  jump_ = omega * l.rates();
  const Eigen::VectorXd c = l.loss_rates();
  loss_ = 0.5 * omega * (c.replicate(1, m) + c.transpose().replicate(m, 1));

  const auto h_nnz = (h_.array() != 0.0).count();
  sparse_h_ = static_cast<double>(h_nnz) < kSparseDensity * static_cast<double>(m * m);
  if (sparse_h_) h_sparse_ = h_.sparseView();

  // Sparse assembly. Row idx(r, c) collects
  //   -i (Hρ)_rc  via (1 (x) H):   column idx(k, c), value -i H_rk
  //   +i (ρH)_rc  via (H^T (x) 1): column idx(r, k), value +i H_kc
  //   -loss_rc on the diagonal, and for r = c the jumps w R_rj from idx(j, j).
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(static_cast<std::size_t>(2 * h_nnz * m + m * m + (jump_.array() != 0.0).count()));
  const Complex minus_i(0.0, -1.0);
  for (Eigen::Index col = 0; col < m; ++col) {
    for (Eigen::Index row = 0; row < m; ++row) {
      const auto target = static_cast<Eigen::Index>(vec_index(row, col, m_));
      for (Eigen::Index k = 0; k < m; ++k) {
        if (h_(row, k) != 0.0) {
          trip.emplace_back(target, static_cast<Eigen::Index>(vec_index(k, col, m_)), minus_i * h_(row, k));
        }
        if (h_(k, col) != 0.0) {
          trip.emplace_back(target, static_cast<Eigen::Index>(vec_index(row, k, m_)), -minus_i * h_(k, col));
        }
      }
      if (loss_(row, col) != 0.0) trip.emplace_back(target, target, Complex(-loss_(row, col), 0.0));
    }
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      if (jump_(i, j) != 0.0) {
        trip.emplace_back(static_cast<Eigen::Index>(vec_index(i, i, m_)), static_cast<Eigen::Index>(vec_index(j, j, m_)),
                          Complex(jump_(i, j), 0.0));
      }
    }
  }
  matrix_.resize(m * m, m * m);
  matrix_.setFromTriplets(trip.begin(), trip.end());
  matrix_.makeCompressed();

  // The coherent part is traceless, so the shift is real.
  const double n = static_cast<double>(m * m);
  shift_ = (jump_.trace() - loss_.sum()) / n;

  double coherent = 0.0;
  if (omega < 1.0 && m > 1) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h_, Eigen::EigenvaluesOnly);
    coherent = es.eigenvalues().maxCoeff() - es.eigenvalues().minCoeff();
  }
  double jump_norm = 0.0;
  if (jump_.any()) {
    // Largest singular value via the symmetric eigenproblem of J^T J;
    // Eigen's divide-and-conquer SVD is not reliable on these rank-deficient
    // inputs.
    const Eigen::MatrixXd gram = jump_.transpose() * jump_;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    jump_norm = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }
  const double diag = (loss_.array() + shift_).abs().maxCoeff();
  norm_bound_ = coherent + jump_norm + diag;
}

Eigen::MatrixXd Superoperator::commutator_real(const Eigen::MatrixXd& x) const {
  if (sparse_h_) return h_sparse_ * x - x * h_sparse_;
  return h_ * x - x * h_;
}

Eigen::MatrixXcd Superoperator::apply(const Eigen::MatrixXcd& rho) const {
  const auto m = static_cast<Eigen::Index>(m_);
  if (rho.rows() != m || rho.cols() != m) throw ParameterError("state dimension does not match the superoperator");
  const Eigen::MatrixXd x = rho.real();
  const Eigen::MatrixXd y = rho.imag();
  // -i [H, X + iY] = [H, Y] - i [H, X]
  Eigen::MatrixXd re = -loss_.cwiseProduct(x);
  Eigen::MatrixXd im = -loss_.cwiseProduct(y);
  re.diagonal() += jump_ * x.diagonal();
  im.diagonal() += jump_ * y.diagonal();
  if (omega_ < 1.0) {
    re += commutator_real(y);
    im -= commutator_real(x);
  }
  Eigen::MatrixXcd out(m, m);
  out.real() = re;
  out.imag() = im;
  return out;
}

Eigen::MatrixXd Superoperator::apply_pair(const Eigen::MatrixXd& xy) const {
  const auto m = static_cast<Eigen::Index>(m_);
  if (xy.rows() != m || xy.cols() != 2 * m) throw ParameterError("state dimension does not match the superoperator");
  const auto x = xy.leftCols(m);
  const auto y = xy.rightCols(m);
  Eigen::MatrixXd out(m, 2 * m);
  auto re = out.leftCols(m);
  auto im = out.rightCols(m);
  re.noalias() = -loss_.cwiseProduct(x);
  im.noalias() = -loss_.cwiseProduct(y);
  re.diagonal() += jump_ * x.diagonal();
  if (omega_ < 1.0) {
    // X symmetric, Y antisymmetric: [H, X] = A - A^T, [H, Y] = B + B^T
    // with [A | B] = H [X | Y].
    Eigen::MatrixXd ab(m, 2 * m);
    if (sparse_h_) {
      ab.noalias() = h_sparse_ * xy;
    } else {
      ab.noalias() = h_ * xy;
    }
    const auto a = ab.leftCols(m);
    const auto b = ab.rightCols(m);
    re += b + b.transpose();
    im -= a - a.transpose();
  }
  return out;
}

Superoperator assemble_superoperator(const GeneratorMatrix& h, const LindbladSpec& l, double omega) {
  return Superoperator(h, l, omega);
}

Eigen::MatrixXcd propagate(const Superoperator& s, const Eigen::MatrixXcd& rho, double t) {
  if (!(t >= 0.0)) throw ParameterError("evolution time must be nonnegative, got " + std::to_string(t));
  const auto m = rho.rows();
  Eigen::MatrixXd xy = hermitian_pair(rho);
  xy = expm_action(pair_apply(s), std::move(xy), t, s.norm_bound(), s.shift());
  Eigen::MatrixXcd out(m, m);
  out.real() = xy.leftCols(m);
  out.imag() = xy.rightCols(m);
  return out;
}

DensityState evolve_density(const Superoperator& s, const DensityState& rho0, double t) {
  if (rho0.dim() != s.hilbert_dim()) throw ParameterError("state dimension does not match the superoperator");
  if (t == 0.0) return rho0;
  return DensityState(propagate(s, rho0.matrix(), t));
}

std::vector<Eigen::VectorXd> population_trajectory(const Superoperator& s, const DensityState& rho0, int steps,
                                                   double dt) {
  if (rho0.dim() != s.hilbert_dim()) throw ParameterError("state dimension does not match the superoperator");
  if (steps < 0 || !(dt >= 0.0)) throw ParameterError("trajectory needs a nonnegative step count and step size");
  const auto m = static_cast<Eigen::Index>(s.hilbert_dim());
  Eigen::MatrixXd xy = hermitian_pair(rho0.matrix());
  std::vector<Eigen::VectorXd> pops;
  pops.reserve(static_cast<std::size_t>(steps) + 1);
  pops.emplace_back(xy.leftCols(m).diagonal());
  for (int k = 0; k < steps; ++k) {
    xy = expm_action(pair_apply(s), std::move(xy), dt, s.norm_bound(), s.shift());
    pops.emplace_back(xy.leftCols(m).diagonal());
  }
  return pops;
}

ProbabilityVector ctrw_propagate(const GeneratorMatrix& h, const ProbabilityVector& p0, double t) {
  if (h.dim() != p0.dim()) throw ParameterError("probability vector dimension does not match the generator");
  if (!(t >= 0.0)) throw ParameterError("evolution time must be nonnegative, got " + std::to_string(t));
  if (t == 0.0) return p0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.matrix());
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Eigen::VectorXd decay = (-t * es.eigenvalues().array()).exp();
  Eigen::VectorXd p = v * decay.cwiseProduct(v.transpose() * p0.values());
  return ProbabilityVector(std::move(p));
}

DephasingProbe pd_offdiagonal_probe(const GoogleMatrix& gm, const DensityState& rho0, double t) {
  const auto m = static_cast<Eigen::Index>(gm.dim());
  if (rho0.dim() != gm.dim()) throw ParameterError("state dimension does not match the Google matrix");
  // The coherent term is switched off at w = 1, so any generator will do.
  const GeneratorMatrix silent(Eigen::MatrixXd::Zero(m, m), kDefaultGamma);
  const Superoperator s(silent, lindblad_set(gm, Scheme::PureDephasing), 1.0);
  DensityState rho_t = evolve_density(s, rho0, t);

  DephasingProbe probe{0.0, Eigen::MatrixXd::Constant(m, m, std::numeric_limits<double>::quiet_NaN()), rho_t};
  const auto& a = rho0.matrix();
  const auto& b = rho_t.matrix();
  probe.diagonal_drift = (b.diagonal() - a.diagonal()).cwiseAbs().maxCoeff();
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i != j && std::abs(a(i, j)) != 0.0) probe.decay(i, j) = std::abs(b(i, j)) / std::abs(a(i, j));
    }
  }
  return probe;
}

}  // namespace qpr
