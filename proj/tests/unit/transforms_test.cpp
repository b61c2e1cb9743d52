// Copyright 2026 The fpt Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fpt/algo2.hpp"
#include "fpt/error.hpp"
#include "fpt/stats.hpp"
#include "fpt/transforms.hpp"

namespace fpt {
namespace {

constexpr double kPi = std::numbers::pi;

OuProblem problem(double omega, double lambda = 0.5, double x0 = 0.0) {
  OuProblem p;
  p.alpha = 2.0;
  p.beta = 1.0;
  p.omega = omega;
  p.lambda = lambda;
  p.x0 = x0;
  p.horizon = 5.0;
  return p;
}

TEST(TransformedBoundary, StartsAtPhiZeroMinusX0) {
  EXPECT_DOUBLE_EQ(transformed_boundary(problem(2 * kPi)).value(0.0), 3.0);
  EXPECT_DOUBLE_EQ(transformed_boundary(problem(2 * kPi, 0.5, 0.25)).value(0.0), 2.75);
}

TEST(TransformedBoundary, DeclaredSlopeBound) {
  const auto psi = transformed_boundary(problem(2 * kPi));
  EXPECT_NEAR(*psi.rho_plus(), 7.783185307179586, 1e-12);
  EXPECT_NEAR(*psi.rho_minus(), 7.783185307179586, 1e-12);
  for (int i = 0; i <= 200000; ++i) {
    const double t = 0.001 * i;
    ASSERT_LE(std::abs(psi.derivative(t)), *psi.rho_plus() + 1e-10) << t;
  }
}

TEST(TransformedBoundary, DerivativeMatchesFiniteDifferences) {
  constexpr double h = 1e-5;
  for (const auto& p : {problem(2 * kPi), problem(kPi / 5, 0.5, 0.3), problem(0, 1.5)}) {
    const auto psi = transformed_boundary(p);
    for (int i = 1; i <= 2000; ++i) {
      const double t = 0.05 * i;
      const double fd = (psi.value(t + h) - psi.value(t - h)) / (2 * h);
      ASSERT_NEAR(psi.derivative(t), fd, 1e-6) << t;
    }
  }
}

TEST(TransformedBoundary, ZeroLambdaIsTheShiftedBoundary) {
  const auto psi = transformed_boundary(problem(kPi / 5, 0.0, 0.4));
  const auto phi = Boundary::cosine(2.0, 1.0, kPi / 5);
  for (double t : {0.0, 0.3, 2.0, 17.0}) {
    EXPECT_DOUBLE_EQ(psi.value(t), phi.value(t) - 0.4);
    EXPECT_DOUBLE_EQ(psi.derivative(t), phi.derivative(t));
  }
}

TEST(TimeChange, KnownValues) {
  EXPECT_NEAR(time_change(0.5, 5.0), std::exp(5.0) - 1.0, 1e-12);
  EXPECT_NEAR(time_change(0.5, 5.0), 147.4131591025766, 1e-10);
  for (double lambda : {1e-6, 0.5, 3.0}) {
    EXPECT_EQ(time_change(lambda, 0.0), 0.0);
    EXPECT_EQ(time_change_inverse(lambda, 0.0), 0.0);
  }
  EXPECT_EQ(time_change(0.0, 3.0), 3.0);
}

TEST(TimeChange, InversePairIsMonotone) {
  RngStream s(31, 0);
  for (int i = 0; i < 10000; ++i) {
    const double lambda = 1e-6 + 4.0 * s.uniform();
    const double t = 100.0 / (2 * lambda + 1) * s.uniform();
    const double u = time_change(lambda, t);
    ASSERT_NEAR(time_change_inverse(lambda, u), t, 1e-12 * std::max(t, 1e-300));
    ASSERT_LT(time_change(lambda, t), time_change(lambda, t * 1.001 + 1e-9));
    ASSERT_LT(time_change_inverse(lambda, u), time_change_inverse(lambda, u * 1.001 + 1e-9));
  }
}

TEST(TimeChange, OverflowGuard) {
  try {
    time_change(0.5, 701.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
  EXPECT_NO_THROW(time_change(0.5, 699.0));
}

TEST(DefaultSlope, Values) {
  EXPECT_NEAR(default_slope(problem(2 * kPi)), 8.283185307179586, 1e-12);
  EXPECT_NEAR(default_slope(problem(kPi / 5)), 2.628318530717959, 1e-12);
  auto flat = problem(3.0);
  flat.beta = 0.0;
  EXPECT_DOUBLE_EQ(default_slope(flat), 0.5 + 0.5 * 2.0);
}

TEST(OuProblem, Validation) {
  auto p = problem(1.0);
  p.lambda = -0.1;
  EXPECT_THROW(p.validate(), Error);
  p = problem(1.0);
  p.horizon = 0.0;
  EXPECT_THROW(p.validate(), Error);
  p = problem(1.0);
  p.x0 = 3.5;
  EXPECT_THROW(p.validate(), Error);
  EXPECT_THROW(make_ou_problem(parse_boundary_spec("sqrt:alpha=1"), 5.0), Error);
}

TEST(OuHitting, TauStaysInsideHorizon) {
  const auto p = problem(2 * kPi);
  for (std::uint64_t i = 0; i < 2000; ++i) {
    RngStream s(41, i);
    const auto out = simulate_ou_hitting(p, 0x1.0p-10, s);
    ASSERT_GE(out.tau, 0.0);
    ASSERT_LE(out.tau, p.horizon);
    if (out.truncated) ASSERT_EQ(out.tau, p.horizon);
  }
}

TEST(OuHitting, FlatBoundaryRunsEndToEnd) {
  auto p = problem(0.0);
  p.beta = 0.0;
  const auto psi = transformed_boundary(p);
  const auto r = check_hypotheses(psi, 10 * time_change(p.lambda, p.horizon), 10000);
  EXPECT_EQ(r.h4, Verdict::kPass);
  RngStream s(43, 0);
  EXPECT_NO_THROW(simulate_ou_hitting(p, 0x1.0p-10, s));
}

TEST(OuHitting, VanishingLambdaMatchesBrownianRun) {
  const auto p = problem(kPi / 5, 1e-6, 0.3);
  const auto shifted = Boundary::transformed({2.0, 1.0, kPi / 5}, 0.0, 0.3);
  Algo2Config c;
  c.epsilon = 0x1.0p-10;
  c.horizon = p.horizon;
  c.slope = default_slope(p);
  constexpr int n = 10000;
  std::vector<double> ou, bm;
  for (int i = 0; i < n; ++i) {
    RngStream a(51, i), b(52, i);
    ou.push_back(simulate_ou_hitting(p, c.epsilon, a).tau);
    bm.push_back(simulate_algo2(shifted, c, b).tau);
  }
  EXPECT_LT(ks_two_sample(EmpiricalCdf(ou), EmpiricalCdf(bm)), 0.02);
}

}  // namespace
}  // namespace fpt
