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

// Action of the matrix exponential, exp(t A) v, by a scaled and truncated
// Taylor series (Al-Mohy & Higham, SIAM J. Sci. Comput. 33, 2011).
//
// The operator is never formed: callers supply a functor applying A to a
// vector-like value and a bound on ||A - shift I|| in a norm consistent with
// the vector norm. The series is split into `steps` pieces of degree
// `degree` chosen to minimise degree * steps subject to the backward error
// staying below double precision unit roundoff.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>

namespace qpr {

struct TaylorPlan {
  int degree = 0;
  int steps = 1;
};

namespace detail {

struct ThetaEntry {
  int degree;
  double theta;
};

// theta_m for a backward error tolerance of 2^-53.
inline constexpr std::array<ThetaEntry, 35> kTaylorTheta{{
    {1, 2.29e-16}, {2, 2.58e-8}, {3, 1.39e-5}, {4, 3.40e-4}, {5, 2.40e-3}, {6, 9.07e-3},
    {7, 2.38e-2},  {8, 5.00e-2}, {9, 8.96e-2}, {10, 1.44e-1}, {11, 2.14e-1}, {12, 3.00e-1},
    {13, 4.00e-1}, {14, 5.14e-1}, {15, 6.41e-1}, {16, 7.81e-1}, {17, 9.31e-1}, {18, 1.09},
    {19, 1.26},    {20, 1.44},  {21, 1.62},   {22, 1.82},   {23, 2.01},   {24, 2.22},
    {25, 2.43},    {26, 2.64},  {27, 2.86},   {28, 3.08},   {29, 3.31},   {30, 3.54},
    {35, 4.7},     {40, 6.0},   {45, 7.2},    {50, 8.5},    {55, 9.9},
}};

template <typename V>
double inf_norm(const V& v) {
  return v.size() == 0 ? 0.0 : static_cast<double>(v.cwiseAbs().maxCoeff());
}

}  // namespace detail

/// Degree and step count for ||t (A - shift I)|| <= scaled_norm.
inline TaylorPlan plan_taylor(double scaled_norm) {
  if (!(scaled_norm > 0.0)) return {0, 1};
  TaylorPlan best{0, 0};
  double best_cost = std::numeric_limits<double>::infinity();
  for (const auto& [m, theta] : detail::kTaylorTheta) {
    double s = std::max(1.0, std::ceil(scaled_norm / theta));
    double cost = m * s;
    if (cost < best_cost) {
      best_cost = cost;
      best = {m, static_cast<int>(s)};
    }
  }
  return best;
}

/// exp(t A) v where `apply(x)` returns A x.
///
/// `norm_bound` bounds ||A - shift I||; a loose bound only costs extra
/// products. Terms are dropped once two consecutive ones are negligible
/// relative to the running sum, so vectors close to the kernel of
/// A - shift I converge in a handful of products.
template <typename Apply, typename V>
V expm_action(const Apply& apply, V v, double t, double norm_bound, double shift = 0.0) {
  if (t == 0.0) return v;
  const TaylorPlan plan = plan_taylor(std::abs(t) * norm_bound);
  const double tol = std::ldexp(1.0, -53);
  const double h = t / plan.steps;
  const double eta = std::exp(h * shift);

  V f = v;
  V b = std::move(v);
  for (int step = 0; step < plan.steps; ++step) {
    double c1 = detail::inf_norm(b);
    for (int j = 1; j <= plan.degree; ++j) {
      V next = apply(b);
      if (shift != 0.0) next -= shift * b;
      b = (h / j) * next;
      const double c2 = detail::inf_norm(b);
      f += b;
      if (c1 + c2 <= tol * detail::inf_norm(f)) break;
      c1 = c2;
    }
    f *= eta;
    b = f;
  }
  return f;
}

}  // namespace qpr
