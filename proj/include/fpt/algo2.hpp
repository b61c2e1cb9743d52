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
#include <optional>
#include <span>
#include <string>

#include "fpt/boundary.hpp"
#include "fpt/rng.hpp"
#include "fpt/sample.hpp"

namespace fpt {

struct Algo2Config {
  double epsilon = 0x1.0p-10;
  double horizon = 1.0;  // K
  double slope = 1.0;    // r, must dominate rho_minus of the boundary
  std::uint64_t max_steps = 10'000'000;
  bool record_trace = false;
};

/// rho_minus + 0.5, the default tilt for a boundary with declared slope bounds.
double default_algo2_slope(const Boundary& boundary);

/// Samples tau ^ K for a boundary with bounded derivative by chaining first
/// passages of Brownian motion through lines of slope -r.
///
/// With (T, H) = (0, phi(0)), while H > epsilon and T < K, a step draws
/// G ~ I(H/r, H^2) and sets H <- phi(T+G) - phi(T) + r G, T <- T + G. The
/// sample is tau = min(T, K); it is truncated when the loop ended on the
/// horizon with H still above epsilon. A simultaneous epsilon/horizon exit is
/// reported as an epsilon exit.
///
/// Throws Error(kInvalidSlope) when r < rho_minus (or rho_minus is unknown),
/// Error(kMaxStepsExceeded) past config.max_steps, and
/// Error(kInvalidArgument) for bad epsilon/K or phi(0) <= 0.
HitSample simulate_algo2(const Boundary& boundary, const Algo2Config& config,
                         RngStream& stream);

struct HCheckResult {
  bool ok = true;
  std::size_t index = 0;  // first offending trace position when !ok
  std::string detail;
};

/// Re-derives every stored H_k = phi(T_k) - phi(T_{k-1}) + r s_k
/// from the trace (relative tolerance 1e-12) and checks H_k > 0 at every step
/// that did not terminate the run.
HCheckResult h_invariant_check(std::span<const TracePoint> trace, double slope);

}  // namespace fpt
