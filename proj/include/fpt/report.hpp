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

#include <span>
#include <string>
#include <vector>

#include "fpt/baselines.hpp"
#include "fpt/boundary.hpp"
#include "fpt/config.hpp"
#include "fpt/harness.hpp"
#include "fpt/sample.hpp"

namespace fpt {

/// A rectangular table of preformatted cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

// trial,tau,steps,truncated,exit_reason
CsvTable samples_table(std::span<const HitSample> samples);
// t,cdf,stderr
CsvTable cdf_table(const McSummary& summary);
// n,epsilon,mean_steps,stderr,n_trials  (K,... when by_horizon)
CsvTable steps_table(std::span<const StepsRow> rows, bool by_horizon);
// alpha,psi,stderr,n_draws
CsvTable psi_table(std::span<const PsiRow> rows);
// variant,dt,mean_tau,bias,stderr,slope
CsvTable bias_table(const BiasTable& table);

std::string summary_json(const McSummary& summary, const ExperimentConfig& config);
std::string checks_json(std::span<const CheckResult> checks);
std::string hypothesis_json(const HypothesisReport& report);

/// Writes text to path, throwing Error(kIo) on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fpt
