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

#include "fpt/boundary.hpp"
#include "fpt/error.hpp"
#include "fpt/rng.hpp"

namespace fpt {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Boundary> every_family() {
  return {Boundary::constant(1.0),
          Boundary::affine(2.0, -0.3),
          Boundary::sqrt_family(1.0),
          Boundary::sqrt_family(0.01),
          Boundary::cosine(3.5, 3.0, kPi / 2),
          Boundary::transformed({2.0, 1.0, 2 * kPi}, 0.5, 0.0),
          Boundary::transformed({2.0, 1.0, kPi / 5}, 0.5, 0.3),
          Boundary::transformed({2.0, 0.0, 0.0}, 0.0, 0.5)};
}

TEST(Boundary, Values) {
  EXPECT_DOUBLE_EQ(Boundary::sqrt_family(1.0).value(3.0), 2.0);
  EXPECT_DOUBLE_EQ(Boundary::cosine(3.5, 3.0, kPi / 2).value(0.0), 6.5);
  EXPECT_DOUBLE_EQ(Boundary::constant(1.0).value(17.0), 1.0);
  EXPECT_DOUBLE_EQ(Boundary::affine(2.0, -0.3).value(10.0), -1.0);
}

TEST(Boundary, Derivatives) {
  EXPECT_DOUBLE_EQ(Boundary::sqrt_family(1.0).derivative(0.0), 0.5);
  EXPECT_DOUBLE_EQ(Boundary::cosine(3.5, 3.0, kPi / 2).derivative(0.0), 0.0);
  EXPECT_DOUBLE_EQ(Boundary::cosine(1.0, 3.0, kPi / 2).derivative(0.0), 0.0);
  for (double t : {0.0, 1.0, 123.0}) {
    EXPECT_DOUBLE_EQ(Boundary::affine(2.0, -0.3).derivative(t), -0.3);
  }
}

TEST(Boundary, DerivativeMatchesFiniteDifferences) {
  RngStream s(99, 0);
  constexpr double h = 1e-5;
  for (const auto& b : every_family()) {
    for (int i = 0; i < 500; ++i) {
      const double t = h + 50.0 * s.uniform();
      const double fd = (b.value(t + h) - b.value(t - h)) / (2 * h);
      ASSERT_NEAR(b.derivative(t), fd, 1e-6) << b.spec() << " at t=" << t;
    }
  }
}

TEST(Boundary, DeclaredSlopeBoundsDominateDerivative) {
  for (const auto& b : every_family()) {
    if (!b.rho_plus() || !b.rho_minus()) continue;
    for (int i = 0; i <= 20000; ++i) {
      const double t = 0.005 * i;
      const double d = b.derivative(t);
      ASSERT_LE(d, *b.rho_plus() + 1e-12) << b.spec();
      ASSERT_GE(d, -*b.rho_minus() - 1e-12) << b.spec();
    }
    if (b.monotone_nondecreasing()) {
      for (int i = 0; i <= 1000; ++i) ASSERT_GE(b.derivative(0.1 * i), 0.0);
    }
  }
}

TEST(Boundary, SlopeBoundsOfBuiltinFamilies) {
  const auto c = Boundary::cosine(3.5, 3.0, kPi / 2);
  EXPECT_DOUBLE_EQ(*c.rho_plus(), 3.0 * kPi / 2);
  EXPECT_DOUBLE_EQ(*c.rho_minus(), 3.0 * kPi / 2);
  EXPECT_FALSE(c.monotone_nondecreasing());
  const auto s = Boundary::sqrt_family(1.0);
  EXPECT_TRUE(s.monotone_nondecreasing());
  EXPECT_DOUBLE_EQ(*s.rho_minus(), 0.0);
  const auto a = Boundary::affine(1.0, -0.7);
  EXPECT_DOUBLE_EQ(*a.rho_minus(), 0.7);
  EXPECT_DOUBLE_EQ(*a.rho_plus(), 0.0);
}

TEST(Boundary, RejectsInvalidParameters) {
  EXPECT_THROW(Boundary::sqrt_family(-0.1), Error);
  EXPECT_THROW(Boundary::transformed({2, 1, 0}, -1.0, 0.0), Error);
  EXPECT_THROW(Boundary::constant(NAN), Error);
}

TEST(Hypotheses, SqrtAlphaOnePassesFirstThree) {
  const auto grid = default_hypothesis_grid(10.0);
  const auto r = check_hypotheses(Boundary::sqrt_family(1.0), grid.horizon, grid.points);
  EXPECT_EQ(r.h1, Verdict::kPass);
  EXPECT_EQ(r.h2, Verdict::kPass);
  EXPECT_EQ(r.h3, Verdict::kPass);
}

TEST(Hypotheses, SqrtAlphaOneAndAHalfFailsH3AtZero) {
  const auto r = check_hypotheses(Boundary::sqrt_family(1.5), 100.0, 10000);
  EXPECT_EQ(r.h3, Verdict::kFail);
  const Witness* w = r.first_witness(Hypothesis::kH3);
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->t, 0.0);
  EXPECT_DOUBLE_EQ(w->quantity, 1.5);
  EXPECT_LT(r.h3_margin, 0.0);
}

TEST(Hypotheses, CosineIsNotMonotoneButHasBoundedSlope) {
  const auto r = check_hypotheses(Boundary::cosine(3.5, 3.0, kPi / 2), 200.0, 10000);
  EXPECT_EQ(r.h2, Verdict::kFail);
  EXPECT_EQ(r.h4, Verdict::kPass);
  const Witness* w = r.first_witness(Hypothesis::kH2);
  ASSERT_NE(w, nullptr);
  EXPECT_GT(w->t, 0.0);
  EXPECT_LT(w->quantity, 0.0);
}

TEST(Hypotheses, RisingLineFailsGrowthCondition) {
  const auto r = check_hypotheses(Boundary::affine(1.0, 0.2), 100.0, 1000);
  EXPECT_EQ(r.h1, Verdict::kFail);
  EXPECT_NE(r.first_witness(Hypothesis::kH1), nullptr);
  const auto flat = check_hypotheses(Boundary::affine(1.0, -0.2), 100.0, 1000);
  EXPECT_EQ(flat.h1, Verdict::kPass);
}

TEST(Hypotheses, NonPositiveStartFailsH1) {
  const auto r = check_hypotheses(Boundary::constant(-1.0), 10.0, 100);
  EXPECT_EQ(r.h1, Verdict::kFail);
}

TEST(Hypotheses, Deterministic) {
  const auto b = Boundary::cosine(3.5, 3.0, kPi / 2);
  const auto r1 = check_hypotheses(b, 200.0, 10000);
  const auto r2 = check_hypotheses(b, 200.0, 10000);
  EXPECT_EQ(r1.h4_margin, r2.h4_margin);
  EXPECT_EQ(r1.h2_margin, r2.h2_margin);
  ASSERT_EQ(r1.witnesses.size(), r2.witnesses.size());
  for (std::size_t i = 0; i < r1.witnesses.size(); ++i) {
    EXPECT_EQ(r1.witnesses[i].t, r2.witnesses[i].t);
  }
}

TEST(BoundarySpec, ParsesEveryFamily) {
  EXPECT_DOUBLE_EQ(make_boundary(parse_boundary_spec("const:c=1")).value(5), 1.0);
  EXPECT_DOUBLE_EQ(make_boundary(parse_boundary_spec("affine:a=2,b=-0.3")).value(10), -1.0);
  EXPECT_DOUBLE_EQ(make_boundary(parse_boundary_spec("sqrt:alpha=1")).value(3), 2.0);
  EXPECT_DOUBLE_EQ(
      make_boundary(parse_boundary_spec("cosine:alpha=3.5,beta=3,omega=1.5707963")).value(0),
      6.5);
  const auto ou = make_boundary(
      parse_boundary_spec("ou:alpha=2,beta=1,omega=6.2831853,lambda=0.5,x0=0"));
  EXPECT_EQ(ou.family(), BoundaryFamily::kTransformed);
  EXPECT_DOUBLE_EQ(ou.value(0.0), 3.0);
}

TEST(BoundarySpec, SpecRoundTrips) {
  for (const auto& b : every_family()) {
    const auto again = make_boundary(parse_boundary_spec(b.spec()));
    EXPECT_EQ(again.spec(), b.spec());
    for (double t : {0.0, 0.37, 5.0, 80.0}) EXPECT_EQ(again.value(t), b.value(t));
  }
}

TEST(BoundarySpec, RejectsMalformedText) {
  for (const char* bad : {"", "sqrt", "sqrt:", "sqrt:alpha", "sqrt:alpha=x",
                          "circle:r=1", "sqrt:alpha=1,beta=2", "const:c=1,c=2",
                          "cosine:alpha=1,beta=2"}) {
    EXPECT_THROW(make_boundary(parse_boundary_spec(bad)), Error) << bad;
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(9.765625e-4), "0.0009765625");
  EXPECT_EQ(std::stod(format_double(1.0 / 3)), 1.0 / 3);
}

}  // namespace
}  // namespace fpt
