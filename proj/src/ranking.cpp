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

#include "qpr/ranking.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include <Eigen/Eigenvalues>

#include "qpr/error.hpp"

namespace qpr {

double RoundedValue::value() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%llde%d", static_cast<long long>(mantissa), exponent);
  return std::strtod(buf, nullptr);
}

RoundedValue round_significant(double x, int digits) {
  if (digits < 1 || digits > 17) throw ParameterError("significant digits must be in 1..17");
  if (!std::isfinite(x)) throw ParameterError("cannot round a non-finite score");
  if (x == 0.0) return {};

  // 40 digits after the point is far beyond the 17 that identify a double,
  // so the digit right after the cut decides the rounding.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.40e", std::abs(x));
  std::int64_t mantissa = 0;
  const char* p = buf;
  int taken = 0;
  for (; *p != 'e' && taken < digits; ++p) {
    if (*p == '.') continue;
    mantissa = mantissa * 10 + (*p - '0');
    ++taken;
  }
  if (*p == '.') ++p;
  const bool up = *p >= '5' && *p <= '9';
  const int exp10 = std::atoi(std::strchr(buf, 'e') + 1);

  RoundedValue r{mantissa + (up ? 1 : 0), exp10 - digits + 1};
  std::int64_t limit = 1;
  for (int i = 0; i < digits; ++i) limit *= 10;
  if (r.mantissa == limit) {
    r.mantissa /= 10;
    r.exponent += 1;
  }
  if (x < 0) r.mantissa = -r.mantissa;
  return r;
}

std::size_t degeneracy_count(const Eigen::VectorXd& scores, int sig_digits) {
  std::set<std::pair<std::int64_t, int>> distinct;
  for (double s : scores) {
    const RoundedValue r = round_significant(s, sig_digits);
    distinct.emplace(r.mantissa, r.exponent);
  }
  return static_cast<std::size_t>(scores.size()) - distinct.size();
}

std::string_view to_string(RankMethod m) {
  switch (m) {
    case RankMethod::Cpr:
      return "cpr";
    case RankMethod::QprPd:
      return "qpr_pd";
    case RankMethod::QprOi:
      return "qpr_oi";
    case RankMethod::QprDi:
      return "qpr_di";
  }
  return "?";
}

RankMethod rank_method(Scheme s) {
  switch (s) {
    case Scheme::PureDephasing:
      return RankMethod::QprPd;
    case Scheme::OnlyIncoherence:
      return RankMethod::QprOi;
    case Scheme::DephasingWithIncoherence:
      return RankMethod::QprDi;
  }
  return RankMethod::QprDi;
}

RankReport make_report(RankMethod method, Eigen::VectorXd scores, int sig_digits) {
  RankReport r;
  r.method = method;
  r.sig_digits = sig_digits;
  r.rounded.reserve(static_cast<std::size_t>(scores.size()));
  for (double s : scores) r.rounded.push_back(round_significant(s, sig_digits));
  r.order.resize(static_cast<std::size_t>(scores.size()));
  std::iota(r.order.begin(), r.order.end(), Vertex{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](Vertex a, Vertex b) { return r.rounded[a].value() > r.rounded[b].value(); });
  r.degeneracy = degeneracy_count(scores, sig_digits);
  r.scores = std::move(scores);
  return r;
}

ProbabilityVector cpr(const GoogleMatrix& gm, double tol) {
  if (!(tol > 0.0)) throw ParameterError("cpr tolerance must be positive");
  constexpr long kCap = 1'000'000;
  const auto m = static_cast<Eigen::Index>(gm.dim());
  Eigen::VectorXd p = Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
  double residual = std::numeric_limits<double>::infinity();
  for (long it = 0; it < kCap; ++it) {
    Eigen::VectorXd next = gm.matrix() * p;
    next /= next.sum();
    residual = (next - p).lpNorm<1>();
    p = std::move(next);
    if (residual < tol) return ProbabilityVector(std::move(p));
  }
  throw NumericalError("power iteration did not converge", residual);
}

RankReport cpr_report(const Graph& g, double alpha, int sig_digits) {
  RankReport r = make_report(RankMethod::Cpr, cpr(google_matrix(g, alpha)).values(), sig_digits);
  r.alpha = alpha;
  return r;
}

namespace {

void check_rank_scheme(Scheme scheme, double omega) {
  if (scheme == Scheme::PureDephasing) {
    throw UsageError("pure dephasing leaves the populations frozen and cannot rank vertices; use oi or di");
  }
  if (omega == 0.0) throw UsageError("omega = 0 is a closed unitary walk with no stationary state to rank by");
  if (!(omega > 0.0 && omega <= 1.0)) throw ParameterError("omega must lie in (0,1], got " + std::to_string(omega));
}

Superoperator build(const Graph& g, Scheme scheme, double omega, double alpha, double gamma) {
  return assemble_superoperator(generator_matrix(g, gamma), lindblad_set(google_matrix(g, alpha), scheme), omega);
}

}  // namespace

RankReport qpr(const Graph& g, Scheme scheme, const QprOptions& opt) {
  check_rank_scheme(scheme, opt.omega);
  if (!(opt.tf >= 0.0)) throw ParameterError("tf must be nonnegative");
  const Superoperator s = build(g, scheme, opt.omega, opt.alpha, opt.gamma);
  const DensityState rho = evolve_density(s, DensityState::maximally_mixed(g.vertex_count()), opt.tf);
  RankReport r = make_report(rank_method(scheme), rho.populations(), opt.sig_digits);
  r.alpha = opt.alpha;
  r.gamma = opt.gamma;
  r.omega = opt.omega;
  r.tf = opt.tf;
  return r;
}

std::vector<double> population_distances(const Superoperator& s, int tf) {
  if (tf < 1) throw ParameterError("tf must be a positive integer");
  const auto pops = population_trajectory(s, DensityState::maximally_mixed(s.hilbert_dim()), tf);
  std::vector<double> dist;
  dist.reserve(pops.size());
  for (const auto& p : pops) dist.push_back((p - pops.back()).norm());
  return dist;
}

int convergence_time(const Superoperator& s, double tf, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  if (!(tf >= 1.0) || tf != std::floor(tf) || tf > 1e7) throw ParameterError("tf must be a positive integer");
  const int steps = static_cast<int>(tf);
  const std::vector<double> dist = population_distances(s, steps);
  const double tail = dist[static_cast<std::size_t>(steps) - 1];
  if (!(tail < tol / 10.0)) {
    throw StationarityError("state is not stationary at tf = " + std::to_string(steps) + " (last unit step moved " +
                            std::to_string(tail) + "); increase tf");
  }
  for (std::size_t t = 0; t < dist.size(); ++t) {
    if (dist[t] < tol) return static_cast<int>(t);
  }
  throw StationarityError("no time up to tf reached the tolerance");
}

int convergence_time(const Graph& g, Scheme scheme, double omega, const ConvergenceOptions& opt) {
  check_rank_scheme(scheme, omega);
  return convergence_time(build(g, scheme, omega, opt.alpha, opt.gamma), opt.tf, opt.tol);
}

std::vector<double> default_omega_grid() { return SweepOptions{}.grid; }

SweepResult sweep_omega(const std::vector<Graph>& replicates, const SweepOptions& opt) {
  if (replicates.empty()) throw ParameterError("sweep needs at least one replicate");
  if (opt.grid.empty()) throw ParameterError("omega grid is empty");
  for (double w : opt.grid) {
    if (!(w > 0.0 && w <= 1.0)) throw ParameterError("omega grid values must lie in (0,1]");
  }
  const auto ref = std::find(opt.grid.begin(), opt.grid.end(), 1.0);
  if (ref == opt.grid.end()) throw ParameterError("omega grid must contain 1.0 for normalisation");
  const auto ref_idx = static_cast<std::size_t>(ref - opt.grid.begin());

  const std::size_t nw = opt.grid.size();
  const std::size_t nr = replicates.size();
  SweepResult res;
  res.omegas = opt.grid;
  res.replicates = nr;
  res.tau_oi.assign(nr, std::vector<int>(nw, 0));
  res.tau_di.assign(nr, std::vector<int>(nw, 0));

  // Tasks are independent and write to disjoint slots, so the result does
  // not depend on the thread count.
  const std::size_t tasks = nr * nw * 2;
  unsigned threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks; k = next++) {
      const std::size_t r = k / (2 * nw);
      const std::size_t w = (k / 2) % nw;
      const bool di = k % 2 == 1;
      const Scheme scheme = di ? Scheme::DephasingWithIncoherence : Scheme::OnlyIncoherence;
      const int tau = convergence_time(replicates[r], scheme, opt.grid[w], opt.convergence);
      (di ? res.tau_di : res.tau_oi)[r][w] = tau;
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (unsigned i = 0; i < threads; ++i) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }

  res.ratio_oi.assign(nw, 0.0);
  res.ratio_di.assign(nw, 0.0);
  for (std::size_t r = 0; r < nr; ++r) {
    const int base = res.tau_di[r][ref_idx];
    if (base == 0) throw StationarityError("reference convergence time at omega = 1 is zero; ratios are undefined");
    for (std::size_t w = 0; w < nw; ++w) {
      res.ratio_oi[w] += static_cast<double>(res.tau_oi[r][w]) / base;
      res.ratio_di[w] += static_cast<double>(res.tau_di[r][w]) / base;
    }
  }
  for (std::size_t w = 0; w < nw; ++w) {
    res.ratio_oi[w] /= static_cast<double>(nr);
    res.ratio_di[w] /= static_cast<double>(nr);
  }
  return res;
}

double spectral_bound(const Superoperator& s) {
  const auto m = static_cast<Eigen::Index>(s.hilbert_dim());
  const Eigen::Index n = m * m;
  if (n <= 1) return std::numeric_limits<double>::infinity();

  // Householder reflection P sending vec(1)/sqrt(M) to e_0. The trace
  // functional annihilates the generator from the left, so the first row of
  // P O P is zero and the remaining block carries every other eigenvalue.
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  const double inv = 1.0 / std::sqrt(static_cast<double>(m));
  for (Eigen::Index i = 0; i < m; ++i) w(static_cast<Eigen::Index>(vec_index(i, i, s.hilbert_dim()))) = inv;
  w(0) -= 1.0;
  w.normalize();
  const Eigen::VectorXcd wc = w.cast<Complex>();

  Eigen::MatrixXcd a = Eigen::MatrixXcd(s.matrix());
  a -= 2.0 * wc * (wc.transpose() * a);
  a -= 2.0 * (a * wc) * wc.transpose();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a.bottomRightCorner(n - 1, n - 1), false);
  double lead = -std::numeric_limits<double>::infinity();
  for (const Complex& ev : es.eigenvalues()) {
    if (ev.real() < -1e-12) lead = std::max(lead, ev.real());
  }
  if (!std::isfinite(lead)) return std::numeric_limits<double>::infinity();
  return 1.0 / std::abs(lead);
}

}  // namespace qpr
