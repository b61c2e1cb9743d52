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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fpt {

enum class BoundaryFamily { kConstant, kAffine, kSqrt, kCosine, kTransformed };

std::string_view to_string(BoundaryFamily family);

struct ConstantParams {
  double level;
};

// a + b t
struct AffineParams {
  double intercept;
  double slope;
};

// sqrt(1 + alpha t), alpha >= 0
struct SqrtParams {
  double alpha;
};

// alpha + beta cos(omega t)
struct CosineParams {
  double alpha;
  double beta;
  double omega;
};

// sqrt(1 + 2 lambda t) * phi(log(1 + 2 lambda t) / (2 lambda)) - x0, with phi
// a cosine boundary. This is the Brownian image of an Ornstein-Uhlenbeck
// hitting problem; lambda == 0 degenerates to phi(t) - x0.
struct TransformedParams {
  CosineParams base;
  double lambda;
  double x0;
};

/// Immutable curved boundary t -> phi(t) on t >= 0.
///
/// Every builtin family carries closed-form value and derivative, declared
/// slope bounds rho_plus >= sup phi' and rho_minus >= sup(-phi'), and a
/// monotonicity flag. Instances are cheap to copy and safe to share between
/// threads.
class Boundary {
 public:
  using Params = std::variant<ConstantParams, AffineParams, SqrtParams,
                              CosineParams, TransformedParams>;

  static Boundary constant(double level);
  static Boundary affine(double intercept, double slope);
  static Boundary sqrt_family(double alpha);
  static Boundary cosine(double alpha, double beta, double omega);
  static Boundary transformed(const CosineParams& base, double lambda,
                              double x0);

  BoundaryFamily family() const noexcept;
  const Params& params() const noexcept { return params_; }

  double value(double t) const noexcept;
  double derivative(double t) const noexcept;

  std::optional<double> rho_plus() const noexcept { return rho_plus_; }
  std::optional<double> rho_minus() const noexcept { return rho_minus_; }
  bool monotone_nondecreasing() const noexcept { return monotone_; }

  // Round-trips through parse_boundary_spec.
  std::string spec() const;

 private:
  explicit Boundary(Params params);

  Params params_;
  std::optional<double> rho_plus_;
  std::optional<double> rho_minus_;
  bool monotone_ = false;
};

// ---------------------------------------------------------------------------
// Hypothesis checks

enum class Verdict { kPass, kFail, kHeuristicPass };

std::string_view to_string(Verdict verdict);

enum class Hypothesis { kH1, kH2, kH3, kH4 };

std::string_view to_string(Hypothesis hypothesis);

struct Witness {
  Hypothesis hypothesis;
  double t;
  double quantity;  // the offending value, e.g. 2 phi'(t) sqrt(1+t) for H3
};

struct HypothesisReport {
  Verdict h1 = Verdict::kFail;
  Verdict h2 = Verdict::kFail;
  Verdict h3 = Verdict::kFail;
  Verdict h4 = Verdict::kFail;
  // Smallest slack seen for each hypothesis (negative means violated).
  double h1_margin = 0.0;
  double h2_margin = 0.0;
  double h3_margin = 0.0;
  double h4_margin = 0.0;
  std::vector<Witness> witnesses;

  Verdict verdict(Hypothesis h) const noexcept;
  double margin(Hypothesis h) const noexcept;
  const Witness* first_witness(Hypothesis h) const noexcept;
};

struct HypothesisGrid {
  double horizon;
  std::int64_t points;
};

/// horizon = 10 * max(1, K), 10^4 uniform points.
HypothesisGrid default_hypothesis_grid(double horizon_k);

/// H1 (phi(0) > 0 and the LIL growth condition) is decided analytically for
/// the builtin families; H2-H4 are evaluated on a uniform grid over
/// [0, grid_horizon]. Failures are reported with witnesses, never thrown.
HypothesisReport check_hypotheses(const Boundary& boundary, double grid_horizon,
                                  std::int64_t grid_points);

// ---------------------------------------------------------------------------
// Textual boundary specs, e.g. "sqrt:alpha=1" or
// "ou:alpha=2,beta=1,omega=6.2831853,lambda=0.5,x0=0".

struct BoundarySpec {
  std::string family;  // const, affine, sqrt, cosine, ou
  std::map<std::string, double> params;

  double get(const std::string& key) const;
  double get_or(const std::string& key, double fallback) const;
};

BoundarySpec parse_boundary_spec(std::string_view text);

/// Builds the boundary a spec denotes. An "ou" spec yields the transformed
/// Brownian boundary.
Boundary make_boundary(const BoundarySpec& spec);

// Shortest round-trip decimal representation, '.' separator.
std::string format_double(double value);

}  // namespace fpt
