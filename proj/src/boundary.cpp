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

#include "fpt/boundary.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>

#include "fpt/error.hpp"

namespace fpt {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(std::initializer_list<double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + ": parameters must be finite");
    }
  }
}

double cosine_value(const CosineParams& p, double t) noexcept {
  return p.alpha + p.beta * std::cos(p.omega * t);
}

double cosine_derivative(const CosineParams& p, double t) noexcept {
  return -p.beta * p.omega * std::sin(p.omega * t);
}

// log(1 + 2 lambda t) / (2 lambda), continuous at lambda = 0.
double ou_clock(double lambda, double t) noexcept {
  if (lambda == 0.0) return t;
  return std::log1p(2.0 * lambda * t) / (2.0 * lambda);
}

constexpr double kGridTol = 1e-12;

}  // namespace

std::string_view to_string(BoundaryFamily family) {
  switch (family) {
    case BoundaryFamily::kConstant: return "constant";
    case BoundaryFamily::kAffine: return "affine";
    case BoundaryFamily::kSqrt: return "sqrt_family";
    case BoundaryFamily::kCosine: return "cosine_family";
    case BoundaryFamily::kTransformed: return "transformed";
  }
  return "unknown";
}

Boundary::Boundary(Params params) : params_(std::move(params)) {
  std::visit(
      Overloaded{
          [&](const ConstantParams&) {
            rho_plus_ = 0.0;
            rho_minus_ = 0.0;
            monotone_ = true;
          },
          [&](const AffineParams& p) {
            rho_plus_ = std::max(p.slope, 0.0);
            rho_minus_ = std::max(-p.slope, 0.0);
            monotone_ = p.slope >= 0.0;
          },
          [&](const SqrtParams& p) {
            rho_plus_ = p.alpha / 2.0;
            rho_minus_ = 0.0;
            monotone_ = true;
          },
          [&](const CosineParams& p) {
            const double amp = std::abs(p.beta * p.omega);
            rho_plus_ = amp;
            rho_minus_ = amp;
            monotone_ = amp == 0.0;
          },
          [&](const TransformedParams& p) {
            const double bound = p.lambda * std::abs(p.base.alpha) +
                                 p.lambda * std::abs(p.base.beta) +
                                 std::abs(p.base.omega * p.base.beta);
            rho_plus_ = bound;
            rho_minus_ = bound;
            const bool flat_base = p.base.beta == 0.0 || p.base.omega == 0.0;
            const double base_level =
                p.base.alpha + (p.base.omega == 0.0 ? p.base.beta : 0.0);
            monotone_ = flat_base && (p.lambda == 0.0 || base_level >= 0.0);
          },
      },
      params_);
}

Boundary Boundary::constant(double level) {
  require_finite({level}, "constant boundary");
  return Boundary(ConstantParams{level});
}

Boundary Boundary::affine(double intercept, double slope) {
  require_finite({intercept, slope}, "affine boundary");
  return Boundary(AffineParams{intercept, slope});
}

Boundary Boundary::sqrt_family(double alpha) {
  require_finite({alpha}, "sqrt boundary");
  if (alpha < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "sqrt boundary: alpha must be >= 0 (1 + alpha t must stay "
                "positive)");
  }
  return Boundary(SqrtParams{alpha});
}

Boundary Boundary::cosine(double alpha, double beta, double omega) {
  require_finite({alpha, beta, omega}, "cosine boundary");
  return Boundary(CosineParams{alpha, beta, omega});
}

Boundary Boundary::transformed(const CosineParams& base, double lambda,
                               double x0) {
  require_finite({base.alpha, base.beta, base.omega, lambda, x0},
                 "transformed boundary");
  if (lambda < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "transformed boundary: lambda must be >= 0");
  }
  return Boundary(TransformedParams{base, lambda, x0});
}

BoundaryFamily Boundary::family() const noexcept {
  return static_cast<BoundaryFamily>(params_.index());
}

double Boundary::value(double t) const noexcept {
  return std::visit(
      Overloaded{
          [](const ConstantParams& p) { return p.level; },
          [t](const AffineParams& p) { return p.intercept + p.slope * t; },
          [t](const SqrtParams& p) { return std::sqrt(1.0 + p.alpha * t); },
          [t](const CosineParams& p) { return cosine_value(p, t); },
          [t](const TransformedParams& p) {
            const double stretch = std::sqrt(1.0 + 2.0 * p.lambda * t);
            return stretch * cosine_value(p.base, ou_clock(p.lambda, t)) -
                   p.x0;
          },
      },
      params_);
}

double Boundary::derivative(double t) const noexcept {
  return std::visit(
      Overloaded{
          [](const ConstantParams&) { return 0.0; },
          [](const AffineParams& p) { return p.slope; },
          [t](const SqrtParams& p) {
            return p.alpha / (2.0 * std::sqrt(1.0 + p.alpha * t));
          },
          [t](const CosineParams& p) { return cosine_derivative(p, t); },
          [t](const TransformedParams& p) {
            // d/dt [sqrt(s) phi(L)] with s = 1 + 2 lambda t, L' = 1/s.
            const double stretch = std::sqrt(1.0 + 2.0 * p.lambda * t);
            const double clock = ou_clock(p.lambda, t);
            return (p.lambda * cosine_value(p.base, clock) +
                    cosine_derivative(p.base, clock)) /
                   stretch;
          },
      },
      params_);
}

std::string Boundary::spec() const {
  auto kv = [](const char* k, double v) {
    return std::string(k) + "=" + format_double(v);
  };
  return std::visit(
      Overloaded{
          [&](const ConstantParams& p) { return "const:" + kv("c", p.level); },
          [&](const AffineParams& p) {
            return "affine:" + kv("a", p.intercept) + "," + kv("b", p.slope);
          },
          [&](const SqrtParams& p) { return "sqrt:" + kv("alpha", p.alpha); },
          [&](const CosineParams& p) {
            return "cosine:" + kv("alpha", p.alpha) + "," + kv("beta", p.beta) +
                   "," + kv("omega", p.omega);
          },
          [&](const TransformedParams& p) {
            return "ou:" + kv("alpha", p.base.alpha) + "," +
                   kv("beta", p.base.beta) + "," + kv("omega", p.base.omega) +
                   "," + kv("lambda", p.lambda) + "," + kv("x0", p.x0);
          },
      },
      params_);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kHeuristicPass: return "heuristic-pass";
  }
  return "unknown";
}

std::string_view to_string(Hypothesis hypothesis) {
  switch (hypothesis) {
    case Hypothesis::kH1: return "H1";
    case Hypothesis::kH2: return "H2";
    case Hypothesis::kH3: return "H3";
    case Hypothesis::kH4: return "H4";
  }
  return "unknown";
}

Verdict HypothesisReport::verdict(Hypothesis h) const noexcept {
  switch (h) {
    case Hypothesis::kH1: return h1;
    case Hypothesis::kH2: return h2;
    case Hypothesis::kH3: return h3;
    case Hypothesis::kH4: return h4;
  }
  return Verdict::kFail;
}

double HypothesisReport::margin(Hypothesis h) const noexcept {
  switch (h) {
    case Hypothesis::kH1: return h1_margin;
    case Hypothesis::kH2: return h2_margin;
    case Hypothesis::kH3: return h3_margin;
    case Hypothesis::kH4: return h4_margin;
  }
  return 0.0;
}

const Witness* HypothesisReport::first_witness(Hypothesis h) const noexcept {
  for (const auto& w : witnesses) {
    if (w.hypothesis == h) return &w;
  }
  return nullptr;
}

HypothesisGrid default_hypothesis_grid(double horizon_k) {
  return {10.0 * std::max(1.0, horizon_k), 10'000};
}

HypothesisReport check_hypotheses(const Boundary& boundary, double grid_horizon,
                                  std::int64_t grid_points) {
  if (!(grid_horizon > 0.0) || grid_points < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "check_hypotheses: need grid_horizon > 0 and grid_points >= 2");
  }
  HypothesisReport report;

  // H1. Every builtin family except a rising line grows slower than
  // sqrt(2 t log log t), so the limsup is 0 (or -inf) and only phi(0) > 0
  // remains to be checked.
  const double phi0 = boundary.value(0.0);
  bool grows_too_fast = false;
  if (const auto* line = std::get_if<AffineParams>(&boundary.params())) {
    if (line->slope > 0.0) {
      grows_too_fast = true;
      // Walk out until the LIL ratio crosses 1 to produce a witness.
      double t = 16.0;
      double ratio = 0.0;
      for (int i = 0; i < 2000; ++i, t *= 2.0) {
        ratio = boundary.value(t) / std::sqrt(2.0 * t * std::log(std::log(t)));
        if (ratio >= 1.0) break;
      }
      report.witnesses.push_back({Hypothesis::kH1, t, ratio});
      report.h1_margin = 1.0 - ratio;
    }
  }
  if (!(phi0 > 0.0)) {
    report.witnesses.push_back({Hypothesis::kH1, 0.0, phi0});
    report.h1_margin = std::min(report.h1_margin, phi0);
  } else if (!grows_too_fast) {
    report.h1_margin = phi0;
  }
  report.h1 = (phi0 > 0.0 && !grows_too_fast) ? Verdict::kPass : Verdict::kFail;

  // H2-H4 on the grid.
  double min_slope = std::numeric_limits<double>::infinity();
  double max_h3 = -std::numeric_limits<double>::infinity();
  double h4_slack = std::numeric_limits<double>::infinity();
  bool h2_ok = true, h3_ok = true, h4_ok = true;
  const auto rho_plus = boundary.rho_plus();
  const auto rho_minus = boundary.rho_minus();
  if (!rho_plus || !rho_minus) {
    h4_ok = false;
    report.witnesses.push_back(
        {Hypothesis::kH4, 0.0, std::numeric_limits<double>::quiet_NaN()});
  }
  const double step = grid_horizon / static_cast<double>(grid_points - 1);
  for (std::int64_t i = 0; i < grid_points; ++i) {
    const double t = step * static_cast<double>(i);
    const double d = boundary.derivative(t);
    min_slope = std::min(min_slope, d);
    if (h2_ok && d < -kGridTol) {
      h2_ok = false;
      report.witnesses.push_back({Hypothesis::kH2, t, d});
    }
    const double h3 = 2.0 * d * std::sqrt(1.0 + t);
    max_h3 = std::max(max_h3, h3);
    if (h3_ok && h3 > 1.0 + kGridTol) {
      h3_ok = false;
      report.witnesses.push_back({Hypothesis::kH3, t, h3});
    }
    if (rho_plus && rho_minus) {
      const double slack = std::min(*rho_plus - d, *rho_minus + d);
      h4_slack = std::min(h4_slack, slack);
      if (h4_ok && slack < -kGridTol) {
        h4_ok = false;
        report.witnesses.push_back({Hypothesis::kH4, t, d});
      }
    }
  }
  report.h2 = h2_ok ? Verdict::kPass : Verdict::kFail;
  report.h3 = h3_ok ? Verdict::kPass : Verdict::kFail;
  report.h4 = h4_ok ? Verdict::kPass : Verdict::kFail;
  report.h2_margin = min_slope;
  report.h3_margin = 1.0 - max_h3;
  report.h4_margin = (rho_plus && rho_minus)
                         ? h4_slack
                         : -std::numeric_limits<double>::infinity();
  return report;
}

// ---------------------------------------------------------------------------

double BoundarySpec::get(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) {
    throw Error(ErrorCode::kParse,
                "boundary spec '" + family + "' is missing key '" + key + "'");
  }
  return it->second;
}

double BoundarySpec::get_or(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

BoundarySpec parse_boundary_spec(std::string_view text) {
  static const std::map<std::string, std::set<std::string>> kKeys = {
      {"const", {"c"}},
      {"affine", {"a", "b"}},
      {"sqrt", {"alpha"}},
      {"cosine", {"alpha", "beta", "omega"}},
      {"ou", {"alpha", "beta", "omega", "lambda", "x0"}},
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "boundary spec '" + std::string(text) +
                                       "' must look like family:key=value,...");
  }
  BoundarySpec spec;
  spec.family = std::string(text.substr(0, colon));
  const auto allowed = kKeys.find(spec.family);
  if (allowed == kKeys.end()) {
    throw Error(ErrorCode::kParse,
                "unknown boundary family '" + spec.family + "'");
  }
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "boundary parameter '" + std::string(item) + "' lacks '='");
    }
    std::string key(item.substr(0, eq));
    const std::string_view number = item.substr(eq + 1);
    if (!allowed->second.contains(key)) {
      throw Error(ErrorCode::kParse, "boundary family '" + spec.family +
                                         "' has no parameter '" + key + "'");
    }
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || end != number.data() + number.size()) {
      throw Error(ErrorCode::kParse, "boundary parameter '" + key +
                                         "' is not a number: '" +
                                         std::string(number) + "'");
    }
    if (!spec.params.emplace(key, value).second) {
      throw Error(ErrorCode::kParse,
                  "boundary parameter '" + key + "' given twice");
    }
  }
  return spec;
}

Boundary make_boundary(const BoundarySpec& spec) {
  if (spec.family == "const") return Boundary::constant(spec.get("c"));
  if (spec.family == "affine") {
    return Boundary::affine(spec.get("a"), spec.get("b"));
  }
  if (spec.family == "sqrt") return Boundary::sqrt_family(spec.get("alpha"));
  if (spec.family == "cosine") {
    return Boundary::cosine(spec.get("alpha"), spec.get("beta"),
                            spec.get("omega"));
  }
  if (spec.family == "ou") {
    return Boundary::transformed(
        {spec.get("alpha"), spec.get("beta"), spec.get("omega")},
        spec.get("lambda"), spec.get_or("x0", 0.0));
  }
  throw Error(ErrorCode::kParse,
              "unknown boundary family '" + spec.family + "'");
}

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

}  // namespace fpt
