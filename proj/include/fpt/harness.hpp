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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpt/baselines.hpp"
#include "fpt/boundary.hpp"
#include "fpt/config.hpp"
#include "fpt/rng.hpp"
#include "fpt/sample.hpp"
#include "fpt/stats.hpp"

namespace fpt {

struct CdfPoint {
  double t;
  double value;
  double std_error;
};

struct McSummary {
  std::uint64_t n_trials = 0;
  Estimate tau;
  Estimate steps;
  double truncation_rate = 0.0;
  std::vector<CdfPoint> cdf;
};

struct McResult {
  std::vector<HitSample> samples;  // indexed by trial
  McSummary summary;
};

using TrialSampler = std::function<HitSample(RngStream&)>;

/// Builds the per-trial simulator an experiment describes (boundary, algorithm,
/// epsilon, K, slope, dt). Errors in the description surface here.
TrialSampler make_sampler(const ExperimentConfig& config);

/// Runs n trials of `sampler`, trial i on RngStream(master_seed, i).
std::vector<HitSample> run_trials(const TrialSampler& sampler,
                                  std::uint64_t n_trials,
                                  std::uint64_t master_seed, unsigned workers);

/// Aggregates samples in trial order with a CDF on `grid_points` uniform
/// points over [0, upper].
McSummary summarize(std::span<const HitSample> samples, double upper,
                    std::int64_t grid_points);

/// Deterministic in (config minus workers): results are bit-identical for any
/// worker count.
McResult run_monte_carlo(const ExperimentConfig& config);

/// The boundary a config points at (for "ou" specs, the transformed one).
Boundary config_boundary(const ExperimentConfig& config);

/// Throws Error(kHypothesis) when algo1 is asked to run on a boundary that
/// fails H2 or H3; the message names the first witness.
void gate_hypotheses(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Sweeps

struct StepsRow {
  double x;  // exponent n, or horizon K
  double epsilon;
  Estimate steps;
  std::uint64_t n_trials;
};

/// One run per schedule exponent n at epsilon = 0.5^n, all on the same seed.
std::vector<StepsRow> steps_vs_epsilon(const ExperimentConfig& config);

/// One run per horizon at the config's epsilon, all on the same seed.
std::vector<StepsRow> steps_vs_horizon(const ExperimentConfig& config,
                                       std::span<const double> horizons);

// ---------------------------------------------------------------------------
// Sandwich bound check

struct SandwichSetup {
  Boundary boundary;
  Algorithm algorithm = Algorithm::kAlgo1;  // kAlgo1 or kAlgo2
  double eps_coarse = 0x1.0p-6;
  double eps_fine = 0x1.0p-14;
  double horizon = 10.0;           // algo2 only
  std::optional<double> slope;     // algo2 only; default rho_minus + 0.5
  std::vector<double> grid;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct SandwichReport {
  bool pass = true;
  double bound = 0.0;         // 3 sqrt(eps/2pi) or (1+rho_plus) sqrt(2 eps/pi)
  double worst_margin = 0.0;  // +inf when no grid point has t >= eps
  double worst_t = 0.0;
  std::size_t points_checked = 0;
  std::size_t violations = 0;
};

/// Runs the coarse and the fine (proxy for the exact law) epsilon on
/// independent streams and checks, for grid t >= eps_coarse,
///   F_fine(t) <= F_coarse(t)                         (upper)
///   F_coarse(t - eps) - bound <= F_fine(t)            (lower)
/// each up to 3 combined binomial standard errors.
/// Requires eps_fine <= eps_coarse / 16.
SandwichReport sandwich_check(const SandwichSetup& setup);

// ---------------------------------------------------------------------------
// psi(alpha) = E[log(r G / h)], G ~ I(h/r, h^2), alpha = h r

struct PsiRow {
  double alpha;
  Estimate psi;
  std::uint64_t n_draws;
};

/// Alpha i uses split_stream(stream, i); factorization h = alpha, r = 1.
std::vector<PsiRow> psi_curve(std::span<const double> alphas,
                              std::uint64_t n_draws, const RngStream& stream);

// ---------------------------------------------------------------------------
// Check suite

struct CheckResult {
  std::string name;
  bool pass = false;
  double margin = 0.0;
  std::optional<double> witness_t;  // offending (or tightest) t / alpha
  std::optional<double> witness_value;
};

/// Hypothesis reports and sandwich checks for algo1/algo2/ou configs, psi
/// bounds for psi configs.
std::vector<CheckResult> run_checks(const ExperimentConfig& config);

/// Mean of tau ^ K for the OU problem in `config` by the Algorithm 2 pipeline
/// at ref_epsilon (ref_trials paths, seed mixed away from the Euler streams).
Estimate ou_reference_mean(const ExperimentConfig& config);

/// Reference + bias_experiment for the OU problem in `config`.
BiasTable run_bench(const ExperimentConfig& config);

}  // namespace fpt
