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

#include "fpt/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fpt/boundary.hpp"
#include "fpt/error.hpp"

namespace fpt {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return parts;
}

double parse_plain_real(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::kParse,
                "not a number: '" + std::string(text) + "'");
  }
  return value;
}

template <class Int>
Int parse_int(std::string_view text) {
  text = trim(text);
  Int value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::kParse,
                "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "yes" || text == "on") {
    return true;
  }
  if (text == "0" || text == "false" || text == "no" || text == "off") {
    return false;
  }
  throw Error(ErrorCode::kParse, "not a boolean: '" + std::string(text) + "'");
}

std::optional<double> parse_auto_real(std::string_view text) {
  text = trim(text);
  if (text == "auto" || text.empty()) return std::nullopt;
  return parse_real(text);
}

// "1..10" or "1,3,5".
std::vector<int> parse_schedule(std::string_view text) {
  text = trim(text);
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const int lo = parse_int<int>(text.substr(0, dots));
    const int hi = parse_int<int>(text.substr(dots + 2));
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  } else if (!text.empty()) {
    for (auto part : split(text, ',')) out.push_back(parse_int<int>(part));
  }
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  text = trim(text);
  std::vector<double> out;
  if (text.empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

std::string join_reals(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string join_schedule(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    return std::pow(parse_plain_real(trim(text.substr(0, caret))),
                    parse_plain_real(trim(text.substr(caret + 1))));
  }
  return parse_plain_real(text);
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kAlgo1: return "algo1";
    case Algorithm::kAlgo2: return "algo2";
    case Algorithm::kOu: return "ou";
    case Algorithm::kEulerPlain: return "euler-plain";
    case Algorithm::kEulerBridge: return "euler-bridge";
    case Algorithm::kEulerShifted: return "euler-shifted";
    case Algorithm::kPsi: return "psi";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::kAlgo1, Algorithm::kAlgo2, Algorithm::kOu,
                 Algorithm::kEulerPlain, Algorithm::kEulerBridge,
                 Algorithm::kEulerShifted, Algorithm::kPsi}) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorCode::kParse,
              "unknown algorithm '" + std::string(name) +
                  "' (algo1, algo2, ou, euler-plain, euler-bridge, "
                  "euler-shifted, psi)");
}

void ExperimentConfig::set(std::string_view key_in, std::string_view value_in) {
  std::string key(trim(key_in));
  for (auto& c : key) {
    if (c == '-') c = '_';
  }
  const std::string_view value = trim(value_in);
  if (key == "preset") {
    preset = std::string(value);
  } else if (key == "boundary") {
    parse_boundary_spec(value);  // validate early
    boundary = std::string(value);
  } else if (key == "algo" || key == "algorithm") {
    algorithm = parse_algorithm(value);
  } else if (key == "epsilon") {
    epsilon = parse_real(value);
  } else if (key == "schedule") {
    schedule = parse_schedule(value);
  } else if (key == "horizon" || key == "k") {
    horizon = parse_real(value);
  } else if (key == "slope") {
    slope = parse_auto_real(value);
  } else if (key == "trials") {
    trials = parse_int<std::uint64_t>(value);
  } else if (key == "seed") {
    seed = parse_int<std::uint64_t>(value);
  } else if (key == "workers") {
    workers = parse_int<unsigned>(value);
  } else if (key == "grid_points") {
    grid_points = parse_int<std::int64_t>(value);
  } else if (key == "grid_upper") {
    grid_upper = parse_auto_real(value);
  } else if (key == "dt") {
    dt = parse_real(value);
  } else if (key == "dts") {
    dts = parse_real_list(value);
  } else if (key == "ref_epsilon") {
    ref_epsilon = parse_real(value);
  } else if (key == "ref_trials") {
    ref_trials = parse_int<std::uint64_t>(value);
  } else if (key == "horizons") {
    horizons = parse_real_list(value);
  } else if (key == "alphas") {
    alphas = parse_real_list(value);
  } else if (key == "draws") {
    draws = parse_int<std::uint64_t>(value);
  } else if (key == "eps_fine") {
    eps_fine = parse_auto_real(value);
  } else if (key == "max_steps") {
    max_steps = parse_int<std::uint64_t>(value);
  } else if (key == "force") {
    force = parse_bool(value);
  } else {
    throw Error(ErrorCode::kParse, "unknown configuration key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>>
ExperimentConfig::key_values() const {
  auto opt = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string("auto");
  };
  return {
      {"preset", preset},
      {"algo", std::string(to_string(algorithm))},
      {"boundary", boundary},
      {"epsilon", format_double(epsilon)},
      {"schedule", join_schedule(schedule)},
      {"horizon", format_double(horizon)},
      {"slope", opt(slope)},
      {"trials", std::to_string(trials)},
      {"seed", std::to_string(seed)},
      {"workers", std::to_string(workers)},
      {"grid_points", std::to_string(grid_points)},
      {"grid_upper", opt(grid_upper)},
      {"dt", format_double(dt)},
      {"dts", join_reals(dts)},
      {"ref_epsilon", format_double(ref_epsilon)},
      {"ref_trials", std::to_string(ref_trials)},
      {"horizons", join_reals(horizons)},
      {"alphas", join_reals(alphas)},
      {"draws", std::to_string(draws)},
      {"eps_fine", opt(eps_fine)},
      {"max_steps", std::to_string(max_steps)},
      {"force", force ? "true" : "false"},
  };
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "invalid configuration: " + what);
  };
  parse_boundary_spec(boundary);
  if (!(epsilon > 0.0)) fail("epsilon must be > 0");
  if (!(horizon > 0.0)) fail("horizon must be > 0");
  if (slope && !(*slope > 0.0)) fail("slope must be > 0");
  if (trials < 1) fail("trials must be >= 1");
  if (grid_points < 2) fail("grid_points must be >= 2");
  if (grid_upper && !(*grid_upper > 0.0)) fail("grid_upper must be > 0");
  if (!(dt > 0.0)) fail("dt must be > 0");
  if (!(ref_epsilon > 0.0)) fail("ref_epsilon must be > 0");
  for (int n : schedule) {
    if (n < 1) fail("schedule exponents must be positive integers");
  }
  for (double k : horizons) {
    if (!(k > 0.0)) fail("horizons must be > 0");
  }
  for (double a : alphas) {
    if (!(a > 0.0)) fail("alphas must be > 0");
  }
  for (double d : dts) {
    if (!(d > 0.0)) fail("dts must be > 0");
  }
  if (eps_fine && !(*eps_fine > 0.0)) fail("eps_fine must be > 0");
}

std::vector<std::string> preset_names() {
  return {"sqrt-1",    "sqrt-0.01", "cosine-K20", "cosine-K100",
          "ou-text",   "ou-figure", "psi-curve",  "euler-bias"};
}

void apply_preset(ExperimentConfig& c, std::string_view name) {
  const std::string half_pi = format_double(std::numbers::pi / 2);
  const std::string ou_base = "ou:alpha=2,beta=1,lambda=0.5,x0=0,omega=";
  const std::string omega_text = format_double(std::numbers::pi / 5);
  const std::string omega_figure = format_double(2 * std::numbers::pi);
  c.schedule = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  c.epsilon = 0x1.0p-10;
  c.trials = 10'000;
  if (name == "sqrt-1" || name == "sqrt-0.01") {
    c.algorithm = Algorithm::kAlgo1;
    c.boundary = name == "sqrt-1" ? "sqrt:alpha=1" : "sqrt:alpha=0.01";
    c.horizon = 10.0;
  } else if (name == "cosine-K20" || name == "cosine-K100") {
    c.algorithm = Algorithm::kAlgo2;
    c.boundary = "cosine:alpha=3.5,beta=3,omega=" + half_pi;
    c.horizon = name == "cosine-K20" ? 20.0 : 100.0;
    c.slope.reset();
  } else if (name == "ou-text" || name == "ou-figure") {
    c.algorithm = Algorithm::kOu;
    c.boundary = ou_base + (name == "ou-text" ? omega_text : omega_figure);
    c.horizon = 5.0;
  } else if (name == "psi-curve") {
    c.algorithm = Algorithm::kPsi;
    c.alphas = {0.1, 0.2, 0.5, 1, 2, 5, 10, 20, 50, 100};
    c.draws = 10'000;
  } else if (name == "euler-bias") {
    c.algorithm = Algorithm::kEulerPlain;
    c.boundary = ou_base + omega_figure;
    c.horizon = 5.0;
    c.dts = {0.2, 0.1, 0.05, 0.02, 0.01};
    c.trials = 1'000'000;
    c.ref_epsilon = 0x1.0p-20;
    c.ref_trials = 8'000'000;  // the reference noise dominates the fitted slopes otherwise
  } else {
    throw Error(ErrorCode::kParse, "unknown preset '" + std::string(name) + "'");
  }
  c.preset = std::string(name);
}

void apply_config_text(ExperimentConfig& config, std::string_view text) {
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "config line " + std::to_string(line_no) +
                                         ": expected key=value");
    }
    config.set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(config, buf.str());
}

}  // namespace fpt
