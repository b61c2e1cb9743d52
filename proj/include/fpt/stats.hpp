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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fpt {

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Welford running mean/variance. Adding values in a fixed order gives
// bit-identical results.
class MeanAccumulator {
 public:
  void add(double x) noexcept;
  std::int64_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept;  // unbiased; 0 for n < 2
  Estimate estimate() const noexcept;

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Right-continuous empirical CDF, F(t) = #{x_i <= t} / n.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  double operator()(double t) const noexcept;
  std::size_t size() const noexcept { return sorted_.size(); }
  const std::vector<double>& sorted() const noexcept { return sorted_; }
  double quantile(double p) const noexcept;

  // Binomial standard error sqrt(F(1-F)/n) at t.
  double std_error(double t) const noexcept;

 private:
  std::vector<double> sorted_;
};

double normal_cdf(double x) noexcept;

/// sup_t |F_n(t) - F(t)| for a continuous reference CDF.
double ks_statistic(const EmpiricalCdf& empirical,
                    const std::function<double(double)>& cdf);

/// sup_t |F_n(t) - G_m(t)|.
double ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b);

/// Asymptotic one-sample critical distance c(level)/sqrt(n), with
/// c(level) = sqrt(-log(level/2)/2) (1.628 at the 1% level).
double ks_critical_value(std::size_t n, double level);

/// Two-sample version, c(level) * sqrt((n+m)/(n m)).
double ks_critical_value(std::size_t n, std::size_t m, double level);

/// Ordinary least squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace fpt
