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

#include "fpt/error.hpp"
#include "fpt/harness.hpp"
#include "fpt/report.hpp"
#include "../oracles.hpp"

namespace fpt {
namespace {

ExperimentConfig small(const char* preset, std::uint64_t trials) {
  ExperimentConfig c;
  apply_preset(c, preset);
  c.trials = trials;
  return c;
}

TEST(MonteCarlo, SingleTrialSummaryIsTheSample) {
  auto c = small("sqrt-1", 1);
  const auto r = run_monte_carlo(c);
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_EQ(r.summary.tau.value, r.samples[0].tau);
  EXPECT_EQ(r.summary.steps.value, static_cast<double>(r.samples[0].steps));
  EXPECT_EQ(r.summary.tau.std_error, 0.0);
}

TEST(MonteCarlo, WorkerCountDoesNotChangeResults) {
  for (const char* preset : {"sqrt-1", "cosine-K20", "ou-figure"}) {
    auto c = small(preset, 3000);
    c.workers = 1;
    const auto one = run_monte_carlo(c);
    c.workers = 8;
    const auto eight = run_monte_carlo(c);
    EXPECT_EQ(samples_table(one.samples).to_csv(), samples_table(eight.samples).to_csv());
    EXPECT_EQ(cdf_table(one.summary).to_csv(), cdf_table(eight.summary).to_csv());
  }
}

TEST(MonteCarlo, CdfGridAndMonotonicity) {
  auto c = small("cosine-K20", 2000);
  c.grid_points = 64;
  const auto r = run_monte_carlo(c);
  ASSERT_EQ(r.summary.cdf.size(), 64u);
  EXPECT_EQ(r.summary.cdf.front().t, 0.0);
  EXPECT_EQ(r.summary.cdf.back().t, 20.0);
  for (std::size_t i = 1; i < r.summary.cdf.size(); ++i) {
    EXPECT_GE(r.summary.cdf[i].value, r.summary.cdf[i - 1].value);
  }
}

TEST(MonteCarlo, EverySamplerAlgorithmRuns) {
  for (const char* algo : {"algo1", "algo2", "ou", "euler-plain", "euler-bridge",
                           "euler-shifted"}) {
    ExperimentConfig c;
    c.set("algo", algo);
    c.set("trials", "50");
    c.set("boundary", std::string(algo).starts_with("algo")
                          ? "sqrt:alpha=1"
                          : "ou:alpha=2,beta=1,omega=1,lambda=0.5");
    c.set("horizon", "5");
    EXPECT_NO_THROW(run_monte_carlo(c)) << algo;
  }
  ExperimentConfig psi;
  psi.algorithm = Algorithm::kPsi;
  EXPECT_THROW(make_sampler(psi), Error);
}

TEST(Gate, Algo1RefusesCosineUnlessForced) {
  auto c = small("cosine-K20", 10);
  c.algorithm = Algorithm::kAlgo1;
  try {
    gate_hypotheses(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesis);
    EXPECT_NE(std::string(e.what()).find("H2"), std::string::npos);
  }
  c.force = true;
  EXPECT_NO_THROW(gate_hypotheses(c));
  EXPECT_NO_THROW(gate_hypotheses(small("sqrt-1", 10)));
}

TEST(Sweeps, EpsilonScheduleRowsAndMonotonicity) {
  auto c = small("sqrt-1", 2000);
  const auto rows = steps_vs_epsilon(c);
  ASSERT_EQ(rows.size(), c.schedule.size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].steps.value, rows[i - 1].steps.value);
    EXPECT_EQ(rows[i].epsilon, std::pow(0.5, c.schedule[i]));
  }
  EXPECT_EQ(steps_table(rows, false).to_csv(), steps_table(steps_vs_epsilon(c), false).to_csv());
}

TEST(Sweeps, LongerHorizonNeedsMoreSteps) {
  auto c = small("cosine-K20", 2000);
  c.schedule = {4, 8};
  for (int n : c.schedule) {
    c.epsilon = std::pow(0.5, n);
    const std::vector<double> ks = {20.0, 100.0};
    const auto rows = steps_vs_horizon(c, ks);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_GT(rows[1].steps.value, rows[0].steps.value);
  }
}

TEST(Sandwich, GridBelowEpsilonIsVacuous) {
  SandwichSetup s{Boundary::sqrt_family(1.0)};
  s.grid = {0.0, 0.001, 0.01};
  s.trials = 100;
  const auto r = sandwich_check(s);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.points_checked, 0u);
  EXPECT_TRUE(std::isinf(r.worst_margin));
  s.eps_fine = s.eps_coarse;
  EXPECT_THROW(sandwich_check(s), Error);
}

TEST(Sandwich, CosineAlgo2Passes) {
  SandwichSetup s{Boundary::cosine(3.5, 3.0, std::numbers::pi / 2)};
  s.algorithm = Algorithm::kAlgo2;
  s.horizon = 20.0;
  s.trials = 10000;
  for (int i = 0; i < 128; ++i) s.grid.push_back(20.0 * i / 127);
  const auto r = sandwich_check(s);
  EXPECT_TRUE(r.pass) << r.worst_margin << " at " << r.worst_t;
  EXPECT_NEAR(r.bound, (1 + 1.5 * std::numbers::pi) * std::sqrt(2 * 0x1.0p-6 / std::numbers::pi),
              1e-12);
}

TEST(PsiCurve, NegativeAndDeterministic) {
  const std::vector<double> alphas = {0.1, 1.0, 100.0};
  const auto a = psi_curve(alphas, 5000, RngStream(3, 0));
  const auto b = psi_curve(alphas, 5000, RngStream(3, 0));
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_LT(a[i].psi.value, 0.0);
    EXPECT_EQ(a[i].psi.value, b[i].psi.value);
  }
}

TEST(PsiCurve, MatchesQuadrature) {
  const std::vector<double> alphas = {0.1, 0.5, 1.0, 10.0, 100.0};
  const auto rows = psi_curve(alphas, 100000, RngStream(8, 0));
  for (const auto& r : rows) {
    EXPECT_NEAR(r.psi.value, oracle::psi_quadrature(r.alpha), 4 * r.psi.std_error)
        << "alpha=" << r.alpha;
  }
  EXPECT_NEAR(oracle::psi_quadrature(100.0), -0.0049752463, 1e-9);
}

TEST(Checks, PresetsProduceNamedResults) {
  auto c = small("sqrt-1", 5000);
  c.grid_points = 64;
  const auto checks = run_checks(c);
  std::vector<std::string> names;
  for (const auto& r : checks) names.push_back(r.name);
  EXPECT_EQ(names, (std::vector<std::string>{"H1", "H2", "H3", "sandwich"}));
  for (const auto& r : checks) EXPECT_TRUE(r.pass) << r.name;

  auto ou = small("ou-figure", 2000);
  ou.grid_points = 64;
  for (const auto& r : run_checks(ou)) EXPECT_TRUE(r.pass) << r.name;

  auto cos1 = small("cosine-K20", 10);
  cos1.algorithm = Algorithm::kAlgo1;
  const auto failed = run_checks(cos1);
  ASSERT_EQ(failed.size(), 3u);
  EXPECT_FALSE(failed[1].pass);
  EXPECT_TRUE(failed[1].witness_t.has_value());
}

TEST(Report, JsonShapes) {
  std::vector<CheckResult> checks = {{"a", true, 0.5, 1.0, 2.0},
                                     {"b", false, -1.0, std::nullopt, std::nullopt}};
  const auto json = checks_json(checks);
  EXPECT_NE(json.find("\"all_pass\": false"), std::string::npos);
  EXPECT_NE(json.find("\"check_name\": \"a\""), std::string::npos);
  EXPECT_NE(json.find("\"witness\""), std::string::npos);
}

}  // namespace
}  // namespace fpt
