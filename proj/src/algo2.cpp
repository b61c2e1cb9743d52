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

#include "fpt/algo2.hpp"

#include <algorithm>
#include <cmath>

#include "fpt/error.hpp"

namespace fpt {

double default_algo2_slope(const Boundary& boundary) {
  const auto rho = boundary.rho_minus();
  if (!rho) {
    throw Error(ErrorCode::kInvalidSlope,
                "boundary has no declared rho_minus; pass the slope explicitly");
  }
  return *rho + 0.5;
}

HitSample simulate_algo2(const Boundary& boundary, const Algo2Config& config,
                         RngStream& stream) {
  if (!(config.epsilon > 0.0) || !(config.horizon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "algo2: epsilon and horizon must be > 0");
  }
  const auto rho_minus = boundary.rho_minus();
  if (!rho_minus || !(config.slope >= *rho_minus) || !(config.slope > 0.0)) {
    throw Error(ErrorCode::kInvalidSlope,
                "algo2: slope r = " + format_double(config.slope) +
                    " must be positive and dominate rho_minus = " +
                    (rho_minus ? format_double(*rho_minus) : "unknown"));
  }
  const double r = config.slope;
  const double phi0 = boundary.value(0.0);
  if (!(phi0 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "algo2: phi(0) must be > 0");
  }

  HitSample out;
  double t = 0.0;
  double h = phi0;
  double phi_t = phi0;
  if (config.record_trace) out.trace.push_back({0.0, phi0, phi0, 0.0});

  while (h > config.epsilon && t < config.horizon) {
    if (out.steps >= config.max_steps) {
      throw Error(ErrorCode::kMaxStepsExceeded,
                  "algo2: exceeded " + std::to_string(config.max_steps) +
                      " steps");
    }
    const double g =
        sample_inverse_gaussian(stream, InverseGaussianParams(h / r, h * h));
    const double phi_next = boundary.value(t + g);
    // Clamped: a non-positive gap can only arise from rounding when r equals
    // rho_minus, and it ends the loop either way.
    h = std::max(phi_next - phi_t + r * g, 0.0);
    t += g;
    phi_t = phi_next;
    ++out.steps;
    if (config.record_trace) out.trace.push_back({t, phi_t, h, g});
  }

  out.tau = std::min(t, config.horizon);
  if (h <= config.epsilon) {
    out.exit = ExitReason::kEpsilon;
    out.truncated = false;
  } else {
    out.exit = ExitReason::kHorizon;
    out.truncated = true;
  }
  return out;
}

HCheckResult h_invariant_check(std::span<const TracePoint> trace,
                               double slope) {
  HCheckResult result;
  for (std::size_t k = 1; k < trace.size(); ++k) {
    const TracePoint& prev = trace[k - 1];
    const TracePoint& cur = trace[k];
    const double step = cur.draw;  // s_k
    const double formula = cur.boundary - prev.boundary + slope * step;
    const double scale = std::abs(cur.boundary) + std::abs(prev.boundary) +
                         std::abs(slope * step);
    const double tol = 1e-12 * std::max(scale, 1e-300);
    // Stored H is clamped at 0, so compare against the clamped formula.
    if (std::abs(cur.gap - std::max(formula, 0.0)) > tol) {
      result.ok = false;
      result.index = k;
      result.detail = "H[" + std::to_string(k) + "] = " +
                      format_double(cur.gap) + " but the update rule gives " +
                      format_double(formula);
      return result;
    }
    const bool last = k + 1 == trace.size();
    if (!last && !(cur.gap > 0.0)) {
      result.ok = false;
      result.index = k;
      result.detail = "H[" + std::to_string(k) + "] = " +
                      format_double(cur.gap) + " is not positive";
      return result;
    }
  }
  return result;
}

}  // namespace fpt
