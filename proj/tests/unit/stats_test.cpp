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

#include <algorithm>
#include <cmath>
#include <vector>

#include "fpt/stats.hpp"

namespace fpt {
namespace {

TEST(EmpiricalCdf, RightContinuousSteps) {
  const EmpiricalCdf f({3.0, 1.0, 2.0, 2.0});
  EXPECT_EQ(f(0.5), 0.0);
  EXPECT_EQ(f(1.0), 0.25);
  EXPECT_EQ(f(2.0), 0.75);
  EXPECT_EQ(f(2.5), 0.75);
  EXPECT_EQ(f(3.0), 1.0);
  EXPECT_DOUBLE_EQ(f.std_error(2.0), std::sqrt(0.75 * 0.25 / 4));
  EXPECT_EQ(f.quantile(0.0), 1.0);
  EXPECT_EQ(f.quantile(1.0), 3.0);
}

TEST(MeanAccumulator, MatchesTwoPassFormulas) {
  const std::vector<double> xs = {1.5, -2.0, 4.0, 0.25, 9.0};
  MeanAccumulator acc;
  for (double x : xs) acc.add(x);
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  EXPECT_NEAR(acc.mean(), mean, 1e-14);
  EXPECT_NEAR(acc.variance(), ss / (xs.size() - 1), 1e-12);
  EXPECT_NEAR(acc.estimate().std_error, std::sqrt(ss / (xs.size() - 1) / xs.size()),
              1e-12);
}

TEST(KolmogorovSmirnov, CriticalValueAtOnePercent) {
  EXPECT_NEAR(ks_critical_value(1, 0.01), 1.6276, 1e-4);
  EXPECT_NEAR(ks_critical_value(100000, 0.01), 0.005147, 1e-6);
  EXPECT_NEAR(ks_critical_value(100, 100, 0.01), 1.6276 * std::sqrt(0.02), 1e-4);
}

TEST(KolmogorovSmirnov, StatisticOfKnownSample) {
  // Against the uniform CDF the largest gap is 1/3 - 0.1, reached at 0.1 and 0.9.
  const EmpiricalCdf f({0.1, 0.5, 0.9});
  const double d = ks_statistic(f, [](double t) { return std::clamp(t, 0.0, 1.0); });
  EXPECT_NEAR(d, 0.2333333333, 1e-9);
  EXPECT_EQ(ks_two_sample(f, f), 0.0);
  EXPECT_NEAR(ks_two_sample(f, EmpiricalCdf({0.6, 0.7, 0.8})), 2.0 / 3, 1e-12);
}

TEST(LeastSquares, RecoversExactSlope) {
  const std::vector<double> x = {0, 1, 2, 3};
  const std::vector<double> y = {1, 3.5, 6, 8.5};
  EXPECT_NEAR(least_squares_slope(x, y), 2.5, 1e-14);
}

TEST(NormalCdf, KnownValues) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(1.959963984540054), 0.975, 1e-12);
}

}  // namespace
}  // namespace fpt
