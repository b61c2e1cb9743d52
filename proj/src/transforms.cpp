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

#include "fpt/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "fpt/error.hpp"

namespace fpt {

void OuProblem::validate() const {
  for (double v : {lambda, x0, alpha, beta, omega, horizon}) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidProblem,
                  "OU problem: parameters must be finite");
    }
  }
  if (lambda < 0.0) {
    throw Error(ErrorCode::kInvalidProblem, "OU problem: lambda must be >= 0");
  }
  if (!(horizon > 0.0)) {
    throw Error(ErrorCode::kInvalidProblem, "OU problem: K must be > 0");
  }
  if (!(alpha + beta - x0 > 0.0)) {
    throw Error(ErrorCode::kInvalidProblem,
                "OU problem: need phi(0) = alpha + beta > x0 (got psi(0) = " +
                    format_double(alpha + beta - x0) + ")");
  }
}

OuProblem make_ou_problem(const BoundarySpec& spec, double horizon) {
  if (spec.family != "ou") {
    throw Error(ErrorCode::kInvalidProblem,
                "expected an ou: boundary spec, got '" + spec.family + "'");
  }
  OuProblem p;
  p.alpha = spec.get("alpha");
  p.beta = spec.get("beta");
  p.omega = spec.get("omega");
  p.lambda = spec.get("lambda");
  p.x0 = spec.get_or("x0", 0.0);
  p.horizon = horizon;
  p.validate();
  return p;
}

Boundary transformed_boundary(const OuProblem& problem) {
  problem.validate();
  return Boundary::transformed({problem.alpha, problem.beta, problem.omega},
                               problem.lambda, problem.x0);
}

double time_change(double lambda, double t) {
  if (lambda == 0.0) return t;
  if (2.0 * lambda * t > 700.0) {
    throw Error(ErrorCode::kOverflow,
                "time change overflows: 2 lambda t = " +
                    format_double(2.0 * lambda * t) + " > 700");
  }
  return std::expm1(2.0 * lambda * t) / (2.0 * lambda);
}

double time_change_inverse(double lambda, double s) {
  if (lambda == 0.0) return s;
  return std::log1p(2.0 * lambda * s) / (2.0 * lambda);
}

double default_slope(const OuProblem& problem) {
  return 0.5 + problem.lambda * problem.alpha + problem.lambda * problem.beta +
         problem.omega * problem.beta;
}

HitSample simulate_ou_hitting(const OuProblem& problem, double epsilon,
                              RngStream& stream, const OuOptions& options) {
  const Boundary psi = transformed_boundary(problem);
  Algo2Config config;
  config.epsilon = epsilon;
  config.horizon = time_change(problem.lambda, problem.horizon);
  config.slope = default_slope(problem);
  config.max_steps = options.max_steps;
  config.record_trace = options.record_trace;
  HitSample sample = simulate_algo2(psi, config, stream);
  sample.tau = std::min(time_change_inverse(problem.lambda, sample.tau),
                        problem.horizon);
  return sample;
}

}  // namespace fpt
