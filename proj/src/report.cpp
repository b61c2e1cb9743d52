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

#include "fpt/report.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "fpt/error.hpp"

namespace fpt {
namespace {

using nlohmann::json;

std::string num(double x) { return format_double(x); }
std::string num(std::uint64_t x) { return std::to_string(x); }

// JSON has no infinities; they are written as null.
json real(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json optional_real(const std::optional<double>& x) {
  return x ? real(*x) : json(nullptr);
}

}  // namespace

std::string CsvTable::to_csv() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

CsvTable samples_table(std::span<const HitSample> samples) {
  CsvTable t{{"trial", "tau", "steps", "truncated", "exit_reason"}, {}};
  t.rows.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    t.rows.push_back({num(static_cast<std::uint64_t>(i)), num(s.tau),
                      num(s.steps), s.truncated ? "1" : "0",
                      std::string(to_string(s.exit))});
  }
  return t;
}

CsvTable cdf_table(const McSummary& summary) {
  CsvTable t{{"t", "cdf", "stderr"}, {}};
  for (const auto& p : summary.cdf) {
    t.rows.push_back({num(p.t), num(p.value), num(p.std_error)});
  }
  return t;
}

CsvTable steps_table(std::span<const StepsRow> rows, bool by_horizon) {
  CsvTable t{{by_horizon ? "K" : "n", "epsilon", "mean_steps", "stderr",
              "n_trials"},
             {}};
  for (const auto& r : rows) {
    t.rows.push_back({num(r.x), num(r.epsilon), num(r.steps.value),
                      num(r.steps.std_error), num(r.n_trials)});
  }
  return t;
}

CsvTable psi_table(std::span<const PsiRow> rows) {
  CsvTable t{{"alpha", "psi", "stderr", "n_draws"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({num(r.alpha), num(r.psi.value), num(r.psi.std_error),
                      num(r.n_draws)});
  }
  return t;
}

CsvTable bias_table(const BiasTable& table) {
  CsvTable t{{"variant", "dt", "mean_tau", "bias", "stderr", "slope"}, {}};
  for (const auto& r : table.rows) {
    const auto slope = table.slopes.find(r.variant);
    t.rows.push_back({std::string(to_string(r.variant)), num(r.dt),
                      num(r.mean_tau), num(r.bias), num(r.std_error),
                      slope == table.slopes.end() ? "" : num(slope->second)});
  }
  return t;
}

std::string summary_json(const McSummary& summary,
                         const ExperimentConfig& config) {
  json j;
  j["boundary"] = config.boundary;
  j["algorithm"] = std::string(to_string(config.algorithm));
  j["n_trials"] = summary.n_trials;
  j["mean_tau"] = real(summary.tau.value);
  j["mean_tau_stderr"] = real(summary.tau.std_error);
  j["mean_steps"] = real(summary.steps.value);
  j["mean_steps_stderr"] = real(summary.steps.std_error);
  j["truncation_rate"] = real(summary.truncation_rate);
  return j.dump(2) + "\n";
}

std::string checks_json(std::span<const CheckResult> checks) {
  json list = json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    list.push_back({{"check_name", c.name},
                    {"pass", c.pass},
                    {"margin", real(c.margin)},
                    {"witness",
                     {{"t", optional_real(c.witness_t)},
                      {"value", optional_real(c.witness_value)}}}});
  }
  json j{{"all_pass", all}, {"checks", list}};
  return j.dump(2) + "\n";
}

std::string hypothesis_json(const HypothesisReport& report) {
  json j;
  for (Hypothesis h : {Hypothesis::kH1, Hypothesis::kH2, Hypothesis::kH3,
                       Hypothesis::kH4}) {
    json entry{{"verdict", std::string(to_string(report.verdict(h)))},
               {"margin", real(report.margin(h))}};
    if (const Witness* w = report.first_witness(h)) {
      entry["witness"] = {{"t", real(w->t)}, {"value", real(w->quantity)}};
    } else {
      entry["witness"] = nullptr;
    }
    j[std::string(to_string(h))] = entry;
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

}  // namespace fpt
