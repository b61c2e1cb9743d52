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

#include "fpt/boundary.hpp"
#include "fpt/rng.hpp"
#include "fpt/sample.hpp"
#include "fpt/stats.hpp"

namespace fpt {

struct Algo1Options {
  double epsilon = 0x1.0p-10;
  std::uint64_t max_steps = 1'000'000;
  bool record_trace = false;
};

/// Samples the first passage of Brownian motion through a non-decreasing
/// boundary by crossing successive horizontal levels phi(T_k).
///
/// Starting from T_1 = (phi(0)/G_0)^2, each iteration moves to
/// T_{k+1} = T_k + (phi(T_k) - phi(T_{k-1}))^2 / G_k^2 and stops as soon as the
/// gap phi(T_k) - phi(T_{k-1}) is no longer > epsilon. Exactly one Gaussian is
/// consumed per step, so a smaller epsilon on the same stream extends the
/// coarser run. The result never exceeds the true passage time in law.
///
/// The caller is responsible for the boundary satisfying H1-H3.
/// Throws Error(kMaxStepsExceeded) past options.max_steps and
/// Error(kInvalidArgument) for a non-positive epsilon or phi(0) <= 0.
HitSample simulate_algo1(const Boundary& boundary, const Algo1Options& options,
                         RngStream& stream);


/// Monte Carlo estimate of m = E[log(4 G^2)] for standard Gaussian G.
Estimate estimate_m(std::int64_t n_draws, RngStream& stream);

}  // namespace fpt
