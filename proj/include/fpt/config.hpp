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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpt {

enum class Algorithm {
  kAlgo1,
  kAlgo2,
  kOu,
  kEulerPlain,
  kEulerBridge,
  kEulerShifted,
  kPsi,
};

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

/// Declarative description of one experiment. Every field has a flat
/// key=value spelling (see set/key_values) shared by the CLI flags, config
/// files and run manifests.
struct ExperimentConfig {
  std::string preset;  // informational
  std::string boundary = "sqrt:alpha=1";
  Algorithm algorithm = Algorithm::kAlgo1;
  double epsilon = 0x1.0p-10;
  std::vector<int> schedule = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};  // eps = 0.5^n
  double horizon = 10.0;              // K
  std::optional<double> slope;        // r; unset means automatic
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;               // never changes results
  std::int64_t grid_points = 512;
  std::optional<double> grid_upper;   // unset: K, or the 99th percentile for algo1
  double dt = 0.01;                   // Euler simulate
  std::vector<double> dts = {0.2, 0.1, 0.05, 0.02, 0.01};  // Euler bench
  double ref_epsilon = 0x1.0p-20;
  std::uint64_t ref_trials = 0;       // 0: same as trials
  std::vector<double> horizons;       // non-empty: sweep over K instead of n
  std::vector<double> alphas = {0.1, 0.2, 0.5, 1, 2, 5, 10, 20, 50, 100};
  std::uint64_t draws = 10'000;       // psi curve, per alpha
  std::optional<double> eps_fine;     // sandwich proxy; unset: epsilon / 256
  std::uint64_t max_steps = 0;        // 0: algorithm default
  bool force = false;                 // bypass the hypothesis gate

  /// Throws Error(kParse) on unknown keys or malformed values.
  void set(std::string_view key, std::string_view value);

  /// Resolved configuration in a stable key order; feeding these pairs back
  /// through set() on a default config reproduces *this.
  std::vector<std::pair<std::string, std::string>> key_values() const;

  /// Throws Error(kInvalidArgument) for inconsistent values.
  void validate() const;

  double resolved_eps_fine() const { return eps_fine.value_or(epsilon / 256); }
  std::uint64_t resolved_ref_trials() const {
    return ref_trials == 0 ? trials : ref_trials;
  }
};

/// sqrt-1, sqrt-0.01, cosine-K20, cosine-K100, ou-text, ou-figure, psi-curve,
/// euler-bias.
std::vector<std::string> preset_names();
void apply_preset(ExperimentConfig& config, std::string_view name);

/// Flat "key = value" lines; '#' starts a comment.
void apply_config_text(ExperimentConfig& config, std::string_view text);
void apply_config_file(ExperimentConfig& config, const std::string& path);

/// Parses a real, also accepting powers written as "2^-10" or "0.5^3".
double parse_real(std::string_view text);

}  // namespace fpt
