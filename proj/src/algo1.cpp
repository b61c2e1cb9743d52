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

#include "fpt/algo1.hpp"

#include <cmath>
#include <string>

#include "fpt/error.hpp"

namespace fpt {
namespace {

// A Gaussian this small would overflow the step; redrawing it changes the law
// by less than machine precision.
constexpr double kZeroGaussian = 1e-300;

double nonzero_gaussian(RngStream& stream) {
  double g = sample_gaussian(stream);
  while (std::abs(g) < kZeroGaussian) g = sample_gaussian(stream);
  return g;
}

}  // namespace

HitSample simulate_algo1(const Boundary& boundary, const Algo1Options& options,
                         RngStream& stream) {
  if (!(options.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "algo1: epsilon must be > 0");
  }
  const double phi0 = boundary.value(0.0);
  if (!(phi0 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "algo1: phi(0) must be > 0");
  }

  HitSample out;
  double g = nonzero_gaussian(stream);
  double t_curr = (phi0 / g) * (phi0 / g);
  double phi_prev = phi0;
  double phi_curr = boundary.value(t_curr);
  out.steps = 1;
  if (options.record_trace) {
    out.trace.push_back({0.0, phi0, phi0, 0.0});
    out.trace.push_back({t_curr, phi_curr, phi0, g});
  }

  while (phi_curr - phi_prev > options.epsilon) {
    if (out.steps >= options.max_steps) {
      throw Error(ErrorCode::kMaxStepsExceeded,
                  "algo1: exceeded " + std::to_string(options.max_steps) +
                      " steps; does the boundary satisfy H2/H3?");
    }
    const double gap = phi_curr - phi_prev;
    g = nonzero_gaussian(stream);
    t_curr = t_curr + (gap / g) * (gap / g);
    phi_prev = phi_curr;
    phi_curr = boundary.value(t_curr);
    ++out.steps;
    if (options.record_trace) out.trace.push_back({t_curr, phi_curr, gap, g});
  }
  out.tau = t_curr;
  out.truncated = false;
  out.exit = ExitReason::kEpsilon;
  return out;
}

Estimate estimate_m(std::int64_t n_draws, RngStream& stream) {
  if (n_draws < 1000) {
    throw Error(ErrorCode::kInvalidArgument, "estimate_m: need n_draws >= 1000");
  }
  MeanAccumulator acc;
  for (std::int64_t i = 0; i < n_draws; ++i) {
    const double g = nonzero_gaussian(stream);
    acc.add(std::log(4.0 * g * g));
  }
  return acc.estimate();
}

}  // namespace fpt
