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
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "fpt/rng.hpp"
#include "fpt/sample.hpp"
#include "fpt/stats.hpp"
#include "fpt/transforms.hpp"

namespace fpt {

enum class EulerVariant { kPlain, kBridge, kShifted };

std::string_view to_string(EulerVariant variant);
EulerVariant parse_euler_variant(std::string_view name);

// -zeta(1/2)/sqrt(2 pi), the discrete-monitoring correction.
inline constexpr double kBoundaryShift = 0.5826;

struct EulerConfig {
  double dt = 0.01;
  double horizon = 5.0;
  EulerVariant variant = EulerVariant::kPlain;
  double shift = kBoundaryShift;  // used by kShifted only

  void validate() const;
};

/// Stopped explicit Euler scheme for the OU hitting time on [0, K].
///
/// plain:   first grid time with X_k >= phi(t_k).
/// bridge:  additionally, a cell whose end points stay below the boundary is
///          crossed with probability exp(-2 (phi(t_k)-X_k)(phi(t_k+1)-X_k+1)/h);
///          the crossing is stamped at the cell midpoint.
/// shifted: first grid time with X_k >= phi(t_k) - shift sqrt(dt).
/// Without a hit the sample is K, truncated.
HitSample euler_hit(const OuProblem& problem, const EulerConfig& config,
                    RngStream& stream);

struct BiasRow {
  EulerVariant variant;
  double dt;
  double mean_tau;
  double bias;       // mean_tau - reference
  double std_error;  // combined Euler + reference standard error
};

struct BiasTable {
  Estimate reference;
  std::vector<BiasRow> rows;
  std::map<EulerVariant, double> slopes;  // of log|bias| against log dt
};

/// Runs every variant at every dt with n_trials paths (streams indexed by
/// trial under master_seed, shared across variants and dts) and fits the
/// convergence order of each variant.
BiasTable bias_experiment(const OuProblem& problem, std::span<const double> dts,
                          std::uint64_t n_trials, const Estimate& reference,
                          std::uint64_t master_seed, unsigned workers,
                          std::span<const EulerVariant> variants = {});

}  // namespace fpt
