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

#include "fpt/algo2.hpp"
#include "fpt/boundary.hpp"
#include "fpt/rng.hpp"
#include "fpt/sample.hpp"

namespace fpt {

/// First passage of dX = dB - lambda X dt, X_0 = x0, through
/// alpha + beta cos(omega t), observed up to time K.
struct OuProblem {
  double lambda = 0.5;
  double x0 = 0.0;
  double alpha = 2.0;
  double beta = 1.0;
  double omega = 0.0;
  double horizon = 5.0;

  /// Throws Error(kInvalidProblem) unless lambda >= 0, K > 0, all values are
  /// finite and the boundary starts above x0.
  void validate() const;
};

/// OU problem from an "ou:" boundary spec plus a horizon.
OuProblem make_ou_problem(const BoundarySpec& spec, double horizon);

/// psi(t) = sqrt(1 + 2 lambda t) phi(log(1 + 2 lambda t)/(2 lambda)) - x0 with
/// rho_plus = rho_minus = lambda |alpha| + lambda |beta| + omega |beta|.
Boundary transformed_boundary(const OuProblem& problem);

/// u(t) = (exp(2 lambda t) - 1)/(2 lambda); u(t) = t at lambda = 0.
/// Throws Error(kOverflow) when 2 lambda t > 700.
double time_change(double lambda, double t);

/// u^{-1}(s) = log(1 + 2 lambda s)/(2 lambda).
double time_change_inverse(double lambda, double s);

/// 0.5 + lambda alpha + lambda beta + omega beta.
double default_slope(const OuProblem& problem);

struct OuOptions {
  std::uint64_t max_steps = 10'000'000;
  bool record_trace = false;  // trace stays in Brownian time
};

/// Runs Algorithm 2 on psi up to u(K) with the default slope and maps the
/// result back through u^{-1}, capped at K.
HitSample simulate_ou_hitting(const OuProblem& problem, double epsilon,
                              RngStream& stream, const OuOptions& options = {});

}  // namespace fpt
