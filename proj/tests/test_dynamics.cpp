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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpr/dynamics.hpp"
#include "qpr/error.hpp"

namespace qpr {
namespace {

using testing::Cd;

struct Instance {
  Graph graph;
  Scheme scheme;
  double omega;
};

Superoperator build(const Graph& g, Scheme s, double omega) {
  return assemble_superoperator(generator_matrix(g), lindblad_set(google_matrix(g), s), omega);
}

Eigen::MatrixXcd literal(const Graph& g, Scheme s, double omega) {
  return testing::literal_superoperator(generator_matrix(g).matrix(), google_matrix(g).matrix(), s, omega);
}

Scheme any_scheme(int i) {
  return i % 3 == 0 ? Scheme::PureDephasing : i % 3 == 1 ? Scheme::OnlyIncoherence : Scheme::DephasingWithIncoherence;
}

TEST(Vectorize, ColumnStacking) {
  const Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
  const Eigen::VectorXcd v = vectorize(half);
  EXPECT_EQ(v, Eigen::Vector4cd(0.5, 0, 0, 0.5));

  Eigen::MatrixXcd ket12 = Eigen::MatrixXcd::Zero(2, 2);
  ket12(0, 1) = 1.0;
  const Eigen::VectorXcd u = vectorize(ket12);
  EXPECT_EQ(u(static_cast<Eigen::Index>(vec_index(0, 1, 2))), Cd(1.0));
  EXPECT_EQ(u.cwiseAbs().sum(), 1.0);
}

TEST(Vectorize, RoundTripAndBadLength) {
  std::mt19937_64 rng(1);
  const Eigen::MatrixXcd rho = testing::random_density(5, rng);
  EXPECT_EQ(devectorize(vectorize(rho)), rho);
  EXPECT_EQ(vectorize(DensityState(rho)), vectorize(DensityState(rho).matrix()));
  EXPECT_THROW(devectorize(Eigen::VectorXcd::Zero(5)), ParameterError);
}

TEST(Vectorize, KroneckerConvention) {
  // vec(A X B) = (B^T (x) A) vec(X): the identity the assembly relies on.
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n01;
  auto rnd = [&](int n) {
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = Cd(n01(rng), n01(rng));
    return a;
  };
  for (int n = 1; n <= 4; ++n) {
    const Eigen::MatrixXcd a = rnd(n), x = rnd(n), b = rnd(n);
    const Eigen::MatrixXcd k = Eigen::kroneckerProduct(b.transpose(), a);
    EXPECT_LT((vectorize(Eigen::MatrixXcd(a * x * b)) - k * vectorize(x)).norm(), 1e-12);
  }
}

TEST(Superoperator, MatchesLiteralAssembly) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t m = 2 + rep % 4;
    const Graph g = testing::random_digraph(m, 0.4, rng);
    const Scheme s = any_scheme(rep);
    const double omega = rep % 5 == 0 ? 1.0 : rep % 5 == 1 ? 0.0 : unit(rng);
    const Eigen::MatrixXcd fast = Eigen::MatrixXcd(build(g, s, omega).matrix());
    EXPECT_LT((fast - literal(g, s, omega)).cwiseAbs().maxCoeff(), 1e-12) << "rep " << rep;
  }
}

TEST(Superoperator, ThreeVertexDiAtHalf) {
  const Graph g = Graph::directed(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  const Superoperator s = build(g, Scheme::DephasingWithIncoherence, 0.5);
  EXPECT_EQ(s.dim(), 9u);
  EXPECT_EQ(s.matrix().rows(), 9);
  const Eigen::MatrixXcd ref = literal(g, Scheme::DephasingWithIncoherence, 0.5);
  EXPECT_LT((Eigen::MatrixXcd(s.matrix()) - ref).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Superoperator, LimitsOfOmega) {
  const Graph g = random_orientation(gen_bernoulli(5, 0.5, Seed{3}), Seed{4});
  const Eigen::MatrixXcd classical = Eigen::MatrixXcd(build(g, Scheme::OnlyIncoherence, 1.0).matrix());
  EXPECT_EQ(classical.imag().cwiseAbs().maxCoeff(), 0.0);
  const Eigen::MatrixXcd unitary = Eigen::MatrixXcd(build(g, Scheme::OnlyIncoherence, 0.0).matrix());
  EXPECT_LT((unitary + unitary.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Superoperator, PreservesTrace) {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 12; ++rep) {
    const Graph g = testing::random_digraph(3 + rep % 4, 0.3, rng);
    const Superoperator s = build(g, any_scheme(rep), 0.3 + 0.05 * rep);
    const auto m = static_cast<Eigen::Index>(s.hilbert_dim());
    const Eigen::VectorXcd id = vectorize(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(m, m)));
    const Eigen::RowVectorXcd lhs = id.transpose() * s.matrix();
    EXPECT_LT(lhs.cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Superoperator, RejectsBadInputs) {
  const Graph a = Graph::directed(3, {{0, 1}});
  const Graph b = Graph::directed(4, {{0, 1}});
  EXPECT_THROW(assemble_superoperator(generator_matrix(a), lindblad_set(google_matrix(b), Scheme::OnlyIncoherence), 0.5),
               ParameterError);
  EXPECT_THROW(build(a, Scheme::OnlyIncoherence, 1.5), ParameterError);
  EXPECT_THROW(build(a, Scheme::OnlyIncoherence, 0.5).apply(Eigen::MatrixXcd::Zero(2, 2)), ParameterError);
}

TEST(Superoperator, MatrixFreeApplyMatchesSparse) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n01;
  // Dense and sparse internal paths: small random graphs and a 30-vertex ring.
  std::vector<Graph> graphs{testing::random_digraph(4, 0.5, rng), testing::random_digraph(7, 0.6, rng),
                            random_orientation(gen_watts_strogatz(30, 0.1, Seed{1}), Seed{2})};
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    for (int si = 0; si < 3; ++si) {
      const Superoperator s = build(graphs[gi], any_scheme(si), 0.35);
      const auto m = static_cast<Eigen::Index>(s.hilbert_dim());
      Eigen::MatrixXcd x(m, m);
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Cd(n01(rng), n01(rng));
      const Eigen::MatrixXcd want = devectorize(s.matrix() * vectorize(x));
      EXPECT_LT((s.apply(x) - want).cwiseAbs().maxCoeff(), 1e-12);

      const Eigen::MatrixXcd h = 0.5 * (x + x.adjoint());
      Eigen::MatrixXd pair(m, 2 * m);
      pair << h.real(), h.imag();
      const Eigen::MatrixXd got = s.apply_pair(pair);
      const Eigen::MatrixXcd want_h = devectorize(s.matrix() * vectorize(h));
      EXPECT_LT((got.leftCols(m) - want_h.real()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((got.rightCols(m) - want_h.imag()).cwiseAbs().maxCoeff(), 1e-12);
      // Hermitian in, Hermitian out, bit for bit.
      EXPECT_EQ(got.leftCols(m), got.leftCols(m).transpose());
      EXPECT_EQ(got.rightCols(m), -got.rightCols(m).transpose());
    }
  }
}

TEST(Superoperator, ShiftAndNormBound) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 15; ++rep) {
    const Graph g = testing::random_digraph(2 + rep % 5, 0.4, rng);
    const Superoperator s = build(g, any_scheme(rep), rep / 15.0);
    const Eigen::MatrixXcd a = Eigen::MatrixXcd(s.matrix());
    const auto n = a.rows();
    EXPECT_NEAR(s.shift(), a.trace().real() / static_cast<double>(n), 1e-14);
    EXPECT_NEAR(a.trace().imag(), 0.0, 1e-12);
    const Eigen::MatrixXcd shifted = a - s.shift() * Eigen::MatrixXcd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
    EXPECT_LE(svd.singularValues()(0), s.norm_bound() * (1 + 1e-12));
  }
}

TEST(Superoperator, NormBoundWithManyDanglingVertices) {
  // Eleven identical 1/M columns: the jump matrix is nearly rank one.
  const Graph g = Graph::directed(12, {{0, 1}});
  for (Scheme scheme : {Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence}) {
    for (double w : {0.1, 0.5, 1.0}) {
      const Superoperator s = build(g, scheme, w);
      const Eigen::MatrixXcd a = Eigen::MatrixXcd(s.matrix());
      const Eigen::MatrixXcd shifted = a - s.shift() * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
      EXPECT_LE(svd.singularValues()(0), s.norm_bound() * (1 + 1e-12));
    }
  }
}

TEST(DensityState, Validation) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
  EXPECT_NO_THROW(DensityState{rho});
  Eigen::MatrixXcd bad = rho;
  bad(0, 1) = 0.1;
  EXPECT_THROW(DensityState{bad}, NumericalError);
  bad = rho * 1.1;
  EXPECT_THROW(DensityState{bad}, NumericalError);
  bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  try {
    DensityState s(bad);
    FAIL();
  } catch (const NumericalError& e) {
    EXPECT_NEAR(e.drift(), 0.5, 1e-12);
  }
  EXPECT_THROW(DensityState(Eigen::MatrixXcd::Zero(2, 3)), ParameterError);

  // Drift below the tolerance is repaired.
  Eigen::MatrixXcd nearly = rho;
  nearly(0, 1) = Cd(1e-12, 0.0);
  const DensityState fixed(nearly);
  EXPECT_EQ(fixed.matrix(), fixed.matrix().adjoint());
}

TEST(ProbabilityVector, Validation) {
  EXPECT_NO_THROW(ProbabilityVector(Eigen::Vector2d(0.25, 0.75)));
  EXPECT_THROW(ProbabilityVector(Eigen::Vector2d(0.5, 0.6)), NumericalError);
  EXPECT_THROW(ProbabilityVector(Eigen::Vector2d(-0.1, 1.1)), NumericalError);
  EXPECT_EQ(ProbabilityVector::uniform(4).values(), Eigen::VectorXd::Constant(4, 0.25));
}

TEST(EvolveDensity, ZeroTimeIsExact) {
  std::mt19937_64 rng(10);
  const DensityState rho(testing::random_density(4, rng));
  const Superoperator s = build(testing::random_digraph(4, 0.5, rng), Scheme::DephasingWithIncoherence, 0.3);
  EXPECT_EQ(evolve_density(s, rho, 0.0).matrix(), rho.matrix());
  EXPECT_THROW(evolve_density(s, rho, -1.0), ParameterError);
  EXPECT_THROW(evolve_density(s, DensityState::maximally_mixed(3), 1.0), ParameterError);
}

TEST(EvolveDensity, MatchesDenseExponential) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t m = 2 + rep % 5;
    const Graph g = testing::random_digraph(m, 0.2 + 0.5 * unit(rng), rng);
    const Scheme s = any_scheme(rep);
    const double omega = unit(rng);
    const double t = 0.1 + 8.0 * unit(rng);
    const Eigen::MatrixXcd rho0 = testing::random_density(m, rng);

    const Superoperator op = build(g, s, omega);
    const Eigen::MatrixXcd got = evolve_density(op, DensityState(rho0), t).matrix();
    const Eigen::MatrixXcd big = literal(g, s, omega);
    const Eigen::MatrixXcd want =
        testing::unstack(testing::dense_expm(t * big) * testing::column_stack(rho0), static_cast<Eigen::Index>(m));
    EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-8) << "rep " << rep;
  }
}

TEST(EvolveDensity, PhysicalAndSemigroup) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t m = 2 + rep % 9;
    const Superoperator s = build(testing::random_digraph(m, 0.3, rng), any_scheme(rep), unit(rng));
    const DensityState rho0(testing::random_density(m, rng));
    const double t1 = 5.0 * unit(rng), t2 = 5.0 * unit(rng);
    const DensityState a = evolve_density(s, rho0, t1 + t2);
    const DensityState b = evolve_density(s, evolve_density(s, rho0, t1), t2);
    const StateDrift d = measure_drift(a.matrix());
    EXPECT_LT(d.trace, 1e-10);
    EXPECT_LT(d.hermiticity, 1e-10);
    EXPECT_GE(d.min_eigenvalue, -1e-8);
    EXPECT_LT((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(EvolveDensity, ClassicalLimitKeepsStatesDiagonal) {
  // At omega = 1 the populations obey dp/dt = (R - diag(c)) p with R the
  // scheme's rates and c their column sums.
  std::mt19937_64 rng(13);
  for (Scheme scheme : {Scheme::OnlyIncoherence, Scheme::DephasingWithIncoherence}) {
    for (int rep = 0; rep < 5; ++rep) {
      const std::size_t m = 3 + rep;
      const Graph g = testing::random_digraph(m, 0.4, rng);
      const LindbladSpec l = lindblad_set(google_matrix(g), scheme);
      const Superoperator s = assemble_superoperator(generator_matrix(g), l, 1.0);

      Eigen::VectorXd p0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
      p0(0) = 0.7;
      p0(static_cast<Eigen::Index>(m) - 1) = 0.3;
      const DensityState rho0(Eigen::MatrixXcd(p0.cast<Cd>().asDiagonal()));
      const double t = 2.5;
      const Eigen::MatrixXcd rho = evolve_density(s, rho0, t).matrix();

      Eigen::MatrixXcd off = rho;
      off.diagonal().setZero();
      EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-14);
      const Eigen::MatrixXd q = l.rates() - Eigen::MatrixXd(l.loss_rates().asDiagonal());
      const Eigen::VectorXd want = testing::rk4(q, p0, t, 4000);
      EXPECT_LT((rho.diagonal().real() - want).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(CtrwPropagate, TwoVertexClosedForm) {
  const GeneratorMatrix h = generator_matrix(Graph::undirected(2, {{0, 1}}));
  const ProbabilityVector p0(Eigen::Vector2d(1.0, 0.0));
  EXPECT_EQ(ctrw_propagate(h, p0, 0.0).values(), p0.values());
  for (double t : {0.1, 0.5, 1.0, 3.0}) {
    const ProbabilityVector p = ctrw_propagate(h, p0, t);
    EXPECT_NEAR(p[0], 0.5 * (1 + std::exp(-2 * t)), 1e-14);
    EXPECT_NEAR(p[1], 0.5 * (1 - std::exp(-2 * t)), 1e-14);
  }
}

TEST(CtrwPropagate, EquilibratesAndConservesMass) {
  // Connected, so the walk equilibrates to uniform.
  const GeneratorMatrix h = generator_matrix(zachary());
  Eigen::VectorXd start = Eigen::VectorXd::Zero(34);
  start(3) = 1.0;
  const ProbabilityVector p0(start);
  for (double t : {0.3, 2.0, 10.0}) {
    const ProbabilityVector p = ctrw_propagate(h, p0, t);
    EXPECT_NEAR(p.values().sum(), 1.0, 1e-12);
    EXPECT_GE(p.values().minCoeff(), 0.0);
  }
  const ProbabilityVector late = ctrw_propagate(h, p0, 2000.0);
  EXPECT_LT((late.values().array() - 1.0 / 34).abs().maxCoeff(), 1e-8);
  EXPECT_THROW(ctrw_propagate(h, ProbabilityVector::uniform(3), 1.0), ParameterError);
}

TEST(DephasingProbe, DiagonalStatesAreFixed) {
  const GoogleMatrix gm = google_matrix(Graph::directed(3, {{0, 1}, {1, 2}}));
  const DensityState rho0(Eigen::MatrixXcd(Eigen::Vector3cd(0.2, 0.3, 0.5).asDiagonal()));
  const DephasingProbe p = pd_offdiagonal_probe(gm, rho0, 3.0);
  EXPECT_LT(p.diagonal_drift, 1e-15);
  Eigen::MatrixXcd off = p.state.matrix();
  off.diagonal().setZero();
  EXPECT_EQ(off.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_TRUE(p.decay.array().isNaN().all());
}

TEST(DephasingProbe, ZeroTime) {
  std::mt19937_64 rng(14);
  const GoogleMatrix gm = google_matrix(testing::random_digraph(4, 0.5, rng));
  const DensityState rho0(testing::random_density(4, rng));
  const DephasingProbe p = pd_offdiagonal_probe(gm, rho0, 0.0);
  EXPECT_EQ(p.diagonal_drift, 0.0);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      if (i != j) EXPECT_EQ(p.decay(i, j), 1.0);
    }
  }
}

TEST(DephasingProbe, DecayRateFromTheDissipator) {
  // Uniform coherences on three vertices; compare with RK4 integration of
  // the full vectorised equation built term by term.
  const Graph g = Graph::directed(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  const GoogleMatrix gm = google_matrix(g);
  Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Constant(3, 3, Cd(0.1, 0.0));
  rho0.diagonal().setConstant(1.0 / 3.0);
  const DensityState start(rho0);
  const Eigen::MatrixXcd big = testing::literal_superoperator(Eigen::MatrixXd::Zero(3, 3), gm.matrix(),
                                                              Scheme::PureDephasing, 1.0);
  for (double t : {0.5, 1.0, 2.0}) {
    const DephasingProbe p = pd_offdiagonal_probe(gm, start, t);
    EXPECT_LT(p.diagonal_drift, 1e-10);
    // RK4 on the real-valued problem is enough: everything stays real here.
    const Eigen::MatrixXd rbig = big.real();
    const Eigen::VectorXd v = testing::rk4(rbig, testing::column_stack(rho0).real(), t, 2000);
    for (Eigen::Index i = 0; i < 3; ++i) {
      for (Eigen::Index j = 0; j < 3; ++j) {
        if (i == j) continue;
        const double rate = 0.5 * (gm(i, i) + gm(j, j));
        EXPECT_NEAR(p.decay(i, j), std::exp(-t * rate), 1e-12);
        EXPECT_NEAR(p.decay(i, j), v(i + 3 * j) / 0.1, 1e-10);
        EXPECT_LT(p.decay(i, j), 1.0);
      }
    }
  }
}

}  // namespace
}  // namespace qpr
