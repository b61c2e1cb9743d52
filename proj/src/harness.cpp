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

#include "fpt/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fpt/algo1.hpp"
#include "fpt/algo2.hpp"
#include "fpt/error.hpp"
#include "fpt/parallel.hpp"
#include "fpt/transforms.hpp"

namespace fpt {
namespace {

// Salts separating derived streams from the trial streams of the same seed.
constexpr std::uint64_t kFineSalt = 0x6a09e667f3bcc908ULL;
constexpr std::uint64_t kReferenceSalt = 0xbb67ae8584caa73bULL;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> uniform_grid(double upper, std::int64_t points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (std::int64_t i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        upper * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

std::vector<double> taus_of(std::span<const HitSample> samples) {
  std::vector<double> taus;
  taus.reserve(samples.size());
  for (const auto& s : samples) taus.push_back(s.tau);
  return taus;
}

EulerVariant euler_variant(Algorithm a) {
  switch (a) {
    case Algorithm::kEulerBridge: return EulerVariant::kBridge;
    case Algorithm::kEulerShifted: return EulerVariant::kShifted;
    default: return EulerVariant::kPlain;
  }
}

OuProblem config_ou_problem(const ExperimentConfig& config) {
  return make_ou_problem(parse_boundary_spec(config.boundary), config.horizon);
}

CheckResult hypothesis_check(const HypothesisReport& report, Hypothesis h) {
  CheckResult c;
  c.name = std::string(to_string(h));
  c.pass = report.verdict(h) != Verdict::kFail;
  c.margin = report.margin(h);
  if (const Witness* w = report.first_witness(h)) {
    c.witness_t = w->t;
    c.witness_value = w->quantity;
  }
  return c;
}

CheckResult phi0_check(const Boundary& b) {
  const double phi0 = b.value(0.0);
  return {"phi0_positive", phi0 > 0.0, phi0, 0.0, phi0};
}

CheckResult slope_check(const Boundary& b, double slope) {
  const double rho = b.rho_minus().value_or(kInf);
  return {"slope_dominates_rho_minus", slope >= rho, slope - rho, std::nullopt,
          slope};
}

CheckResult sandwich_result(const SandwichReport& r) {
  CheckResult c{"sandwich", r.pass, r.worst_margin, std::nullopt, r.bound};
  if (std::isfinite(r.worst_margin)) c.witness_t = r.worst_t;
  return c;
}

}  // namespace

Boundary config_boundary(const ExperimentConfig& config) {
  return make_boundary(parse_boundary_spec(config.boundary));
}

TrialSampler make_sampler(const ExperimentConfig& config) {
  config.validate();
  switch (config.algorithm) {
    case Algorithm::kAlgo1: {
      Algo1Options options;
      options.epsilon = config.epsilon;
      if (config.max_steps) options.max_steps = config.max_steps;
      return [boundary = config_boundary(config), options](RngStream& s) {
        return simulate_algo1(boundary, options, s);
      };
    }
    case Algorithm::kAlgo2: {
      const Boundary boundary = config_boundary(config);
      Algo2Config algo;
      algo.epsilon = config.epsilon;
      algo.horizon = config.horizon;
      algo.slope = config.slope.value_or(default_algo2_slope(boundary));
      if (config.max_steps) algo.max_steps = config.max_steps;
      return [boundary, algo](RngStream& s) {
        return simulate_algo2(boundary, algo, s);
      };
    }
    case Algorithm::kOu: {
      const OuProblem problem = config_ou_problem(config);
      OuOptions options;
      if (config.max_steps) options.max_steps = config.max_steps;
      // Surface overflow of u(K) before any trial runs.
      time_change(problem.lambda, problem.horizon);
      return [problem, options, eps = config.epsilon](RngStream& s) {
        return simulate_ou_hitting(problem, eps, s, options);
      };
    }
    case Algorithm::kEulerPlain:
    case Algorithm::kEulerBridge:
    case Algorithm::kEulerShifted: {
      const OuProblem problem = config_ou_problem(config);
      const EulerConfig euler{config.dt, config.horizon,
                              euler_variant(config.algorithm), kBoundaryShift};
      euler.validate();
      return [problem, euler](RngStream& s) {
        return euler_hit(problem, euler, s);
      };
    }
    case Algorithm::kPsi:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "algorithm '" + std::string(to_string(config.algorithm)) +
                  "' does not simulate passage times");
}

std::vector<HitSample> run_trials(const TrialSampler& sampler,
                                  std::uint64_t n_trials,
                                  std::uint64_t master_seed, unsigned workers) {
  std::vector<HitSample> samples(n_trials);
  parallel_for(n_trials, workers, [&](std::uint64_t i) {
    RngStream stream(master_seed, i);
    samples[i] = sampler(stream);
  });
  return samples;
}

McSummary summarize(std::span<const HitSample> samples, double upper,
                    std::int64_t grid_points) {
  McSummary summary;
  summary.n_trials = samples.size();
  MeanAccumulator tau, steps;
  std::uint64_t truncated = 0;
  for (const auto& s : samples) {
    tau.add(s.tau);
    steps.add(static_cast<double>(s.steps));
    truncated += s.truncated ? 1 : 0;
  }
  summary.tau = tau.estimate();
  summary.steps = steps.estimate();
  summary.truncation_rate =
      samples.empty() ? 0.0
                      : static_cast<double>(truncated) /
                            static_cast<double>(samples.size());
  const EmpiricalCdf cdf(taus_of(samples));
  for (double t : uniform_grid(upper, grid_points)) {
    summary.cdf.push_back({t, cdf(t), cdf.std_error(t)});
  }
  return summary;
}

McResult run_monte_carlo(const ExperimentConfig& config) {
  const TrialSampler sampler = make_sampler(config);
  McResult result;
  result.samples = run_trials(sampler, config.trials, config.seed, config.workers);
  double upper = config.grid_upper.value_or(config.horizon);
  if (!config.grid_upper && config.algorithm == Algorithm::kAlgo1) {
    const EmpiricalCdf cdf(taus_of(result.samples));
    upper = cdf.quantile(0.99);
    if (!(upper > 0.0) || !std::isfinite(upper)) upper = config.horizon;
  }
  result.summary = summarize(result.samples, upper, config.grid_points);
  return result;
}

void gate_hypotheses(const ExperimentConfig& config) {
  if (config.algorithm != Algorithm::kAlgo1 || config.force) return;
  const Boundary boundary = config_boundary(config);
  const auto grid = default_hypothesis_grid(config.horizon);
  const HypothesisReport report =
      check_hypotheses(boundary, grid.horizon, grid.points);
  for (Hypothesis h : {Hypothesis::kH2, Hypothesis::kH3}) {
    if (report.verdict(h) == Verdict::kFail) {
      const Witness* w = report.first_witness(h);
      throw Error(ErrorCode::kHypothesis,
                  "algo1 requires " + std::string(to_string(h)) +
                      "; boundary '" + config.boundary + "' violates it at t = " +
                      format_double(w ? w->t : 0.0) + " (value " +
                      format_double(w ? w->quantity : 0.0) +
                      "). Use algo2, or --force to run anyway.");
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<StepsRow> steps_vs_epsilon(const ExperimentConfig& config) {
  if (config.schedule.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "steps_vs_epsilon: empty schedule");
  }
  std::vector<StepsRow> rows;
  for (int n : config.schedule) {
    ExperimentConfig run = config;
    run.epsilon = std::pow(0.5, n);
    const auto samples =
        run_trials(make_sampler(run), run.trials, run.seed, run.workers);
    MeanAccumulator steps;
    for (const auto& s : samples) steps.add(static_cast<double>(s.steps));
    rows.push_back({static_cast<double>(n), run.epsilon, steps.estimate(),
                    run.trials});
  }
  return rows;
}

std::vector<StepsRow> steps_vs_horizon(const ExperimentConfig& config,
                                       std::span<const double> horizons) {
  if (horizons.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "steps_vs_horizon: no horizons");
  }
  std::vector<StepsRow> rows;
  for (double k : horizons) {
    ExperimentConfig run = config;
    run.horizon = k;
    const auto samples =
        run_trials(make_sampler(run), run.trials, run.seed, run.workers);
    MeanAccumulator steps;
    for (const auto& s : samples) steps.add(static_cast<double>(s.steps));
    rows.push_back({k, run.epsilon, steps.estimate(), run.trials});
  }
  return rows;
}

// ---------------------------------------------------------------------------

SandwichReport sandwich_check(const SandwichSetup& setup) {
  if (!(setup.eps_fine > 0.0) || !(setup.eps_fine <= setup.eps_coarse / 16.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sandwich_check: need 0 < eps_fine <= eps_coarse / 16");
  }
  auto sampler_for = [&](double eps) -> TrialSampler {
    switch (setup.algorithm) {
      case Algorithm::kAlgo1: {
        Algo1Options options;
        options.epsilon = eps;
        return [b = setup.boundary, options](RngStream& s) {
          return simulate_algo1(b, options, s);
        };
      }
      case Algorithm::kAlgo2: {
        Algo2Config config;
        config.epsilon = eps;
        config.horizon = setup.horizon;
        config.slope =
            setup.slope.value_or(default_algo2_slope(setup.boundary));
        return [b = setup.boundary, config](RngStream& s) {
          return simulate_algo2(b, config, s);
        };
      }
      default:
        throw Error(ErrorCode::kInvalidArgument,
                    "sandwich_check supports algo1 and algo2 only");
    }
  };

  SandwichReport report;
  const double eps = setup.eps_coarse;
  if (setup.algorithm == Algorithm::kAlgo1) {
    report.bound = 3.0 * std::sqrt(eps / (2.0 * std::numbers::pi));
  } else {
    const double rho = setup.boundary.rho_plus().value_or(kInf);
    report.bound = (1.0 + rho) * std::sqrt(2.0 * eps / std::numbers::pi);
  }

  const auto coarse_samples =
      run_trials(sampler_for(eps), setup.trials, setup.seed, setup.workers);
  const auto fine_samples = run_trials(sampler_for(setup.eps_fine),
                                       setup.trials, mix64(setup.seed ^ kFineSalt),
                                       setup.workers);
  const EmpiricalCdf coarse(taus_of(coarse_samples));
  const EmpiricalCdf fine(taus_of(fine_samples));

  report.worst_margin = kInf;
  for (double t : setup.grid) {
    if (t < eps) continue;
    ++report.points_checked;
    const double se_upper =
        std::hypot(coarse.std_error(t), fine.std_error(t));
    const double upper_margin = coarse(t) - fine(t) + 3.0 * se_upper;
    const double se_lower =
        std::hypot(coarse.std_error(t - eps), fine.std_error(t));
    const double lower_margin =
        fine(t) - (coarse(t - eps) - report.bound) + 3.0 * se_lower;
    const double margin = std::min(upper_margin, lower_margin);
    if (margin < 0.0) ++report.violations;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_t = t;
    }
  }
  report.pass = report.violations == 0;
  return report;
}

// ---------------------------------------------------------------------------

std::vector<PsiRow> psi_curve(std::span<const double> alphas,
                              std::uint64_t n_draws, const RngStream& stream) {
  std::vector<PsiRow> rows;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double alpha = alphas[i];
    if (!(alpha > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "psi_curve: alpha must be > 0");
    }
    const double h = alpha;
    const double r = 1.0;
    const InverseGaussianParams params(h / r, h * h);
    RngStream s = split_stream(stream, i);
    MeanAccumulator acc;
    for (std::uint64_t k = 0; k < n_draws; ++k) {
      acc.add(std::log(r * sample_inverse_gaussian(s, params) / h));
    }
    rows.push_back({alpha, acc.estimate(), n_draws});
  }
  return rows;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> run_checks(const ExperimentConfig& config) {
  config.validate();
  std::vector<CheckResult> checks;

  if (config.algorithm == Algorithm::kPsi) {
    // Upper bound constant valid for alpha <= 1, used as the conservative c.
    constexpr double kPsiConstant = 0.0241;
    const auto rows = psi_curve(config.alphas, config.draws,
                                RngStream(config.seed, 0));
    CheckResult negative{"psi_negative", true, kInf, std::nullopt, std::nullopt};
    CheckResult upper{"psi_upper_bound", true, kInf, std::nullopt, std::nullopt};
    for (const auto& row : rows) {
      const double se3 = 3.0 * row.psi.std_error;
      if (-row.psi.value < negative.margin) {
        negative.margin = -row.psi.value;
        negative.witness_t = row.alpha;
        negative.witness_value = row.psi.value;
      }
      const double cap = -kPsiConstant * std::min(1.0 / row.alpha, 1.0) + se3;
      if (cap - row.psi.value < upper.margin) {
        upper.margin = cap - row.psi.value;
        upper.witness_t = row.alpha;
        upper.witness_value = row.psi.value;
      }
      if (row.alpha == 0.5) {
        const double m = -kPsiConstant + se3 - row.psi.value;
        checks.push_back({"psi_alpha_half", m >= 0.0, m, row.alpha,
                          row.psi.value});
      }
      if (row.alpha >= 50.0) {
        // psi(alpha) ~ -1/(2 alpha); accept within 50% of the asymptote.
        const double lo = -1.5 / (2.0 * row.alpha);
        const double hi = -0.5 / (2.0 * row.alpha);
        const double m = std::min(row.psi.value - lo, hi - row.psi.value);
        checks.push_back({"psi_laplace_window", m >= 0.0, m, row.alpha,
                          row.psi.value});
      }
    }
    negative.pass = negative.margin > 0.0;
    upper.pass = upper.margin >= 0.0;
    checks.insert(checks.begin(), {negative, upper});
    return checks;
  }

  if (config.algorithm == Algorithm::kAlgo1) {
    const Boundary boundary = config_boundary(config);
    const auto grid = default_hypothesis_grid(config.horizon);
    const auto report = check_hypotheses(boundary, grid.horizon, grid.points);
    for (Hypothesis h : {Hypothesis::kH1, Hypothesis::kH2, Hypothesis::kH3}) {
      checks.push_back(hypothesis_check(report, h));
    }
    if (report.h2 == Verdict::kFail || report.h3 == Verdict::kFail ||
        report.h1 == Verdict::kFail) {
      return checks;  // the sandwich bound does not apply
    }
    SandwichSetup setup{boundary, Algorithm::kAlgo1, 0.0, 0.0, 0.0,
                        std::nullopt, {}, 0, 0, 1};
    setup.algorithm = Algorithm::kAlgo1;
    setup.eps_coarse = config.epsilon;
    setup.eps_fine = config.resolved_eps_fine();
    setup.grid = uniform_grid(config.grid_upper.value_or(config.horizon),
                              config.grid_points);
    setup.trials = config.trials;
    setup.seed = config.seed;
    setup.workers = config.workers;
    checks.push_back(sandwich_result(sandwich_check(setup)));
    return checks;
  }

  if (config.algorithm == Algorithm::kAlgo2 ||
      config.algorithm == Algorithm::kOu) {
    Boundary boundary = config_boundary(config);
    double horizon = config.horizon;
    std::optional<double> slope = config.slope;
    if (config.algorithm == Algorithm::kOu) {
      const OuProblem problem = config_ou_problem(config);
      boundary = transformed_boundary(problem);
      horizon = time_change(problem.lambda, problem.horizon);
      slope = default_slope(problem);
    }
    const double r = slope.value_or(default_algo2_slope(boundary));
    const auto grid = default_hypothesis_grid(horizon);
    const auto report = check_hypotheses(boundary, grid.horizon, grid.points);
    checks.push_back(phi0_check(boundary));
    checks.push_back(hypothesis_check(report, Hypothesis::kH4));
    checks.push_back(slope_check(boundary, r));
    if (!checks[0].pass || !checks[1].pass || !checks[2].pass) return checks;
    SandwichSetup setup{boundary, Algorithm::kAlgo1, 0.0, 0.0, 0.0,
                        std::nullopt, {}, 0, 0, 1};
    setup.algorithm = Algorithm::kAlgo2;
    setup.eps_coarse = config.epsilon;
    setup.eps_fine = config.resolved_eps_fine();
    setup.horizon = horizon;
    setup.slope = r;
    setup.grid = uniform_grid(config.grid_upper.value_or(horizon),
                              config.grid_points);
    setup.trials = config.trials;
    setup.seed = config.seed;
    setup.workers = config.workers;
    checks.push_back(sandwich_result(sandwich_check(setup)));
    return checks;
  }

  // Euler configs: only the starting condition is checkable.
  const OuProblem problem = config_ou_problem(config);
  const double gap = problem.alpha + problem.beta - problem.x0;
  checks.push_back({"phi0_above_x0", gap > 0.0, gap, 0.0, gap});
  return checks;
}

Estimate ou_reference_mean(const ExperimentConfig& config) {
  ExperimentConfig ref = config;
  ref.algorithm = Algorithm::kOu;
  ref.epsilon = config.ref_epsilon;
  ref.trials = config.resolved_ref_trials();
  const auto samples = run_trials(make_sampler(ref), ref.trials,
                                  mix64(config.seed ^ kReferenceSalt),
                                  config.workers);
  MeanAccumulator acc;
  for (const auto& s : samples) acc.add(s.tau);
  return acc.estimate();
}

BiasTable run_bench(const ExperimentConfig& config) {
  config.validate();
  const OuProblem problem = config_ou_problem(config);
  const Estimate reference = ou_reference_mean(config);
  return bias_experiment(problem, config.dts, config.trials, reference,
                         config.seed, config.workers);
}

}  // namespace fpt
