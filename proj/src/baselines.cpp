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

#include "fpt/baselines.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fpt/error.hpp"
#include "fpt/parallel.hpp"

namespace fpt {

std::string_view to_string(EulerVariant variant) {
  switch (variant) {
    case EulerVariant::kPlain: return "plain";
    case EulerVariant::kBridge: return "bridge";
    case EulerVariant::kShifted: return "shifted";
  }
  return "unknown";
}

EulerVariant parse_euler_variant(std::string_view name) {
  if (name == "plain") return EulerVariant::kPlain;
  if (name == "bridge") return EulerVariant::kBridge;
  if (name == "shifted") return EulerVariant::kShifted;
  throw Error(ErrorCode::kParse,
              "unknown Euler variant '" + std::string(name) + "'");
}

void EulerConfig::validate() const {
  if (!(dt > 0.0) || !(horizon > 0.0) || !(dt <= horizon)) {
    throw Error(ErrorCode::kInvalidArgument,
                "Euler: need 0 < dt <= K (dt = " + format_double(dt) +
                    ", K = " + format_double(horizon) + ")");
  }
  if (!std::isfinite(shift)) {
    throw Error(ErrorCode::kInvalidArgument, "Euler: shift must be finite");
  }
}

HitSample euler_hit(const OuProblem& problem, const EulerConfig& config,
                    RngStream& stream) {
  problem.validate();
  config.validate();
  const double k_end = config.horizon;
  auto barrier = [&](double t) {
    return problem.alpha + problem.beta * std::cos(problem.omega * t);
  };
  const double lowering = config.variant == EulerVariant::kShifted
                              ? config.shift * std::sqrt(config.dt)
                              : 0.0;
  // Cells [k dt, (k+1) dt], the last one cut at K. The tolerance keeps K/dt
  // that is an integer up to rounding from producing a sliver cell.
  const auto n_cells =
      static_cast<std::uint64_t>(std::ceil(k_end / config.dt - 1e-9));

  HitSample out;
  double x = problem.x0;
  double t = 0.0;
  double gap = barrier(0.0) - x;
  for (std::uint64_t k = 0; k < n_cells; ++k) {
    const double t_next =
        k + 1 == n_cells ? k_end
                         : static_cast<double>(k + 1) * config.dt;
    const double h = t_next - t;
    const double g = sample_gaussian(stream);
    const double x_next = x - problem.lambda * x * h + std::sqrt(h) * g;
    const double phi_next = barrier(t_next);
    ++out.steps;
    if (x_next >= phi_next - lowering) {
      out.tau = t_next;
      out.exit = ExitReason::kGridHit;
      return out;
    }
    const double gap_next = phi_next - x_next;
    if (config.variant == EulerVariant::kBridge) {
      const double cross = std::exp(-2.0 * gap * gap_next / h);
      if (stream.uniform() < cross) {
        out.tau = t + 0.5 * h;
        out.exit = ExitReason::kBridgeHit;
        return out;
      }
    }
    x = x_next;
    t = t_next;
    gap = gap_next;
  }
  out.tau = k_end;
  out.truncated = true;
  out.exit = ExitReason::kHorizon;
  return out;
}

BiasTable bias_experiment(const OuProblem& problem, std::span<const double> dts,
                          std::uint64_t n_trials, const Estimate& reference,
                          std::uint64_t master_seed, unsigned workers,
                          std::span<const EulerVariant> variants) {
  problem.validate();
  if (dts.empty() || n_trials < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "bias_experiment: need at least one dt and two trials");
  }
  for (std::size_t i = 1; i < dts.size(); ++i) {
    if (!(dts[i] < dts[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bias_experiment: dts must be strictly decreasing");
    }
  }
  static constexpr EulerVariant kAll[] = {
      EulerVariant::kPlain, EulerVariant::kBridge, EulerVariant::kShifted};
  if (variants.empty()) variants = kAll;

  BiasTable table;
  table.reference = reference;
  std::vector<double> taus(n_trials);
  for (EulerVariant variant : variants) {
    std::vector<double> log_dt, log_bias;
    for (double dt : dts) {
      const EulerConfig config{dt, problem.horizon, variant, kBoundaryShift};
      parallel_for(n_trials, workers, [&](std::uint64_t i) {
        RngStream stream(master_seed, i);
        taus[i] = euler_hit(problem, config, stream).tau;
      });
      MeanAccumulator acc;
      for (double tau : taus) acc.add(tau);
      const Estimate est = acc.estimate();
      const double bias = est.value - reference.value;
      table.rows.push_back(
          {variant, dt, est.value, bias,
           std::hypot(est.std_error, reference.std_error)});
      log_dt.push_back(std::log(dt));
      log_bias.push_back(std::log(std::abs(bias)));
    }
    table.slopes[variant] = log_dt.size() >= 2
                                ? least_squares_slope(log_dt, log_bias)
                                : std::numeric_limits<double>::quiet_NaN();
  }
  return table;
}

}  // namespace fpt
