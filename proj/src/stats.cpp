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

#include "fpt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fpt/error.hpp"

namespace fpt {

void MeanAccumulator::add(double x) noexcept {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

double MeanAccumulator::variance() const noexcept {
  return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

Estimate MeanAccumulator::estimate() const noexcept {
  if (n_ == 0) return {};
  return {mean_, std::sqrt(variance() / static_cast<double>(n_))};
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples)
    : sorted_(std::move(samples)) {
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double t) const noexcept {
  if (sorted_.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double EmpiricalCdf::quantile(double p) const noexcept {
  if (sorted_.empty()) return 0.0;
  const double pos = std::clamp(p, 0.0, 1.0) *
                     static_cast<double>(sorted_.size() - 1);
  return sorted_[static_cast<std::size_t>(std::ceil(pos))];
}

double EmpiricalCdf::std_error(double t) const noexcept {
  if (sorted_.empty()) return 0.0;
  const double f = (*this)(t);
  return std::sqrt(f * (1.0 - f) / static_cast<double>(sorted_.size()));
}

double normal_cdf(double x) noexcept {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double ks_statistic(const EmpiricalCdf& empirical,
                    const std::function<double(double)>& cdf) {
  const auto& xs = empirical.sorted();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f,
                  f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  const auto& xs = a.sorted();
  const auto& ys = b.sorted();
  const double n = static_cast<double>(xs.size());
  const double m = static_cast<double>(ys.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < xs.size() && j < ys.size()) {
    const double t = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] <= t) ++i;
    while (j < ys.size() && ys[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n -
                             static_cast<double>(j) / m));
  }
  return d;
}

namespace {

double ks_coefficient(double level) {
  // c(level) = sqrt(-log(level/2)/2), the Kolmogorov asymptotic quantile.
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "KS level must lie in (0, 1)");
  }
  return std::sqrt(-0.5 * std::log(level / 2.0));
}

}  // namespace

double ks_critical_value(std::size_t n, double level) {
  return ks_coefficient(level) / std::sqrt(static_cast<double>(n));
}

double ks_critical_value(std::size_t n, std::size_t m, double level) {
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  return ks_coefficient(level) * std::sqrt((nn + mm) / (nn * mm));
}

double least_squares_slope(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "least_squares_slope: need two equally sized series (n >= 2)");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace fpt
