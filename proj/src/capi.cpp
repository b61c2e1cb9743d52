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

#include "fpt/fpt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fpt/boundary.hpp"
#include "fpt/config.hpp"
#include "fpt/error.hpp"
#include "fpt/harness.hpp"
#include "fpt/report.hpp"

struct fpt_boundary {
  fpt::Boundary value;
};

struct fpt_config {
  fpt::ExperimentConfig value;
};

struct fpt_run {
  fpt::ExperimentConfig config;
  fpt::McResult result;
};

struct fpt_table {
  fpt::CsvTable value;
};

namespace {

thread_local std::string last_error;

fpt_status to_status(fpt::ErrorCode code) {
  switch (code) {
    case fpt::ErrorCode::kInvalidArgument: return FPT_ERR_INVALID_ARGUMENT;
    case fpt::ErrorCode::kParse: return FPT_ERR_PARSE;
    case fpt::ErrorCode::kHypothesis: return FPT_ERR_HYPOTHESIS;
    case fpt::ErrorCode::kMaxStepsExceeded: return FPT_ERR_MAX_STEPS;
    case fpt::ErrorCode::kInvalidSlope: return FPT_ERR_INVALID_SLOPE;
    case fpt::ErrorCode::kInvalidProblem: return FPT_ERR_INVALID_PROBLEM;
    case fpt::ErrorCode::kOverflow: return FPT_ERR_OVERFLOW;
    case fpt::ErrorCode::kIo: return FPT_ERR_IO;
    case fpt::ErrorCode::kInternal: return FPT_ERR_INTERNAL;
  }
  return FPT_ERR_INTERNAL;
}

fpt_status fail(fpt_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
fpt_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return FPT_OK;
  } catch (const fpt::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FPT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FPT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FPT_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) {
    throw fpt::Error(fpt::ErrorCode::kInvalidArgument,
                     std::string(what) + " must not be null");
  }
}

fpt_status emit_table(fpt::CsvTable table, fpt_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fpt_table{std::move(table)};
  });
}

}  // namespace

extern "C" {

const char* fpt_version(void) { return "1.0.0"; }

const char* fpt_last_error(void) { return last_error.c_str(); }

const char* fpt_status_name(fpt_status status) {
  switch (status) {
    case FPT_OK: return "ok";
    case FPT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case FPT_ERR_PARSE: return "parse_error";
    case FPT_ERR_HYPOTHESIS: return "hypothesis_violation";
    case FPT_ERR_MAX_STEPS: return "max_steps_exceeded";
    case FPT_ERR_INVALID_SLOPE: return "invalid_slope";
    case FPT_ERR_INVALID_PROBLEM: return "invalid_problem";
    case FPT_ERR_OVERFLOW: return "overflow";
    case FPT_ERR_IO: return "io_error";
    case FPT_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

void fpt_string_free(char* text) { std::free(text); }

fpt_status fpt_boundary_parse(const char* spec, fpt_boundary** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new fpt_boundary{
        fpt::make_boundary(fpt::parse_boundary_spec(spec))};
  });
}

void fpt_boundary_free(fpt_boundary* boundary) { delete boundary; }

fpt_status fpt_boundary_value(const fpt_boundary* boundary, double t,
                              double* out) {
  return guarded([&] {
    require(boundary, "boundary");
    require(out, "out");
    *out = boundary->value.value(t);
  });
}

fpt_status fpt_boundary_derivative(const fpt_boundary* boundary, double t,
                                   double* out) {
  return guarded([&] {
    require(boundary, "boundary");
    require(out, "out");
    *out = boundary->value.derivative(t);
  });
}

fpt_status fpt_boundary_check_json(const fpt_boundary* boundary,
                                   double grid_horizon, int64_t grid_points,
                                   char** json) {
  return guarded([&] {
    require(boundary, "boundary");
    require(json, "json");
    auto grid = fpt::default_hypothesis_grid(grid_horizon);
    if (grid_points > 0) grid = {grid_horizon, grid_points};
    const auto report =
        fpt::check_hypotheses(boundary->value, grid.horizon, grid.points);
    *json = dup_string(fpt::hypothesis_json(report));
  });
}

fpt_status fpt_config_new(fpt_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fpt_config{};
  });
}

void fpt_config_free(fpt_config* config) { delete config; }

fpt_status fpt_config_apply_preset(fpt_config* config, const char* name) {
  return guarded([&] {
    require(config, "config");
    require(name, "name");
    fpt::apply_preset(config->value, name);
  });
}

fpt_status fpt_config_set(fpt_config* config, const char* key,
                          const char* value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    config->value.set(key, value);
  });
}

fpt_status fpt_config_load_file(fpt_config* config, const char* path) {
  return guarded([&] {
    require(config, "config");
    require(path, "path");
    fpt::apply_config_file(config->value, path);
  });
}

fpt_status fpt_config_dump(const fpt_config* config, char** text) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    std::string out;
    for (const auto& [key, value] : config->value.key_values()) {
      out += key + "=" + value + "\n";
    }
    *text = dup_string(out);
  });
}

fpt_status fpt_config_validate(const fpt_config* config) {
  return guarded([&] {
    require(config, "config");
    config->value.validate();
  });
}

fpt_status fpt_preset_names(char** text) {
  return guarded([&] {
    require(text, "text");
    std::string out;
    for (const auto& name : fpt::preset_names()) out += name + "\n";
    *text = dup_string(out);
  });
}

fpt_status fpt_simulate(const fpt_config* config, fpt_run** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    fpt::gate_hypotheses(config->value);
    auto run = new fpt_run{config->value, fpt::run_monte_carlo(config->value)};
    *out = run;
  });
}

void fpt_run_free(fpt_run* run) { delete run; }

fpt_status fpt_run_size(const fpt_run* run, uint64_t* n) {
  return guarded([&] {
    require(run, "run");
    require(n, "n");
    *n = run->result.samples.size();
  });
}

fpt_status fpt_run_sample(const fpt_run* run, uint64_t index, fpt_sample* out) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    if (index >= run->result.samples.size()) {
      throw fpt::Error(fpt::ErrorCode::kInvalidArgument,
                       "sample index out of range");
    }
    const auto& s = run->result.samples[index];
    *out = {s.tau, s.steps, s.truncated ? 1 : 0,
            static_cast<fpt_exit_reason>(s.exit)};
  });
}

fpt_status fpt_run_summary(const fpt_run* run, fpt_summary* out) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    const auto& s = run->result.summary;
    *out = {s.n_trials,        s.tau.value,       s.tau.std_error,
            s.steps.value,     s.steps.std_error, s.truncation_rate};
  });
}

fpt_status fpt_run_samples_csv(const fpt_run* run, char** csv) {
  return guarded([&] {
    require(run, "run");
    require(csv, "csv");
    *csv = dup_string(fpt::samples_table(run->result.samples).to_csv());
  });
}

fpt_status fpt_run_cdf_csv(const fpt_run* run, char** csv) {
  return guarded([&] {
    require(run, "run");
    require(csv, "csv");
    *csv = dup_string(fpt::cdf_table(run->result.summary).to_csv());
  });
}

fpt_status fpt_run_summary_json(const fpt_run* run, char** json) {
  return guarded([&] {
    require(run, "run");
    require(json, "json");
    *json = dup_string(fpt::summary_json(run->result.summary, run->config));
  });
}

fpt_status fpt_sweep(const fpt_config* config, fpt_table** out) {
  fpt::CsvTable table;
  const fpt_status status = guarded([&] {
    require(config, "config");
    const auto& c = config->value;
    c.validate();
    fpt::gate_hypotheses(c);
    if (c.horizons.empty()) {
      table = fpt::steps_table(fpt::steps_vs_epsilon(c), false);
    } else {
      table = fpt::steps_table(fpt::steps_vs_horizon(c, c.horizons), true);
    }
  });
  return status == FPT_OK ? emit_table(std::move(table), out) : status;
}

fpt_status fpt_psi_curve(const fpt_config* config, fpt_table** out) {
  fpt::CsvTable table;
  const fpt_status status = guarded([&] {
    require(config, "config");
    const auto& c = config->value;
    c.validate();
    table = fpt::psi_table(
        fpt::psi_curve(c.alphas, c.draws, fpt::RngStream(c.seed, 0)));
  });
  return status == FPT_OK ? emit_table(std::move(table), out) : status;
}

fpt_status fpt_bench(const fpt_config* config, fpt_table** out) {
  fpt::CsvTable table;
  const fpt_status status = guarded([&] {
    require(config, "config");
    table = fpt::bias_table(fpt::run_bench(config->value));
  });
  return status == FPT_OK ? emit_table(std::move(table), out) : status;
}

void fpt_table_free(fpt_table* table) { delete table; }

fpt_status fpt_table_shape(const fpt_table* table, size_t* rows, size_t* cols) {
  return guarded([&] {
    require(table, "table");
    if (rows) *rows = table->value.rows.size();
    if (cols) *cols = table->value.header.size();
  });
}

fpt_status fpt_table_cell(const fpt_table* table, int64_t row, size_t col,
                          const char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    const auto& t = table->value;
    if (row < -1 || row >= static_cast<int64_t>(t.rows.size()) ||
        col >= t.header.size()) {
      throw fpt::Error(fpt::ErrorCode::kInvalidArgument,
                       "table cell out of range");
    }
    *out = row < 0 ? t.header[col].c_str()
                   : t.rows[static_cast<size_t>(row)][col].c_str();
  });
}

fpt_status fpt_table_csv(const fpt_table* table, char** csv) {
  return guarded([&] {
    require(table, "table");
    require(csv, "csv");
    *csv = dup_string(table->value.to_csv());
  });
}

fpt_status fpt_check(const fpt_config* config, char** json, int* all_pass) {
  return guarded([&] {
    require(config, "config");
    require(json, "json");
    const auto checks = fpt::run_checks(config->value);
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    *json = dup_string(fpt::checks_json(checks));
    if (all_pass) *all_pass = pass ? 1 : 0;
  });
}

fpt_status fpt_write_file(const char* path, const char* text) {
  return guarded([&] {
    require(path, "path");
    require(text, "text");
    fpt::write_text_file(path, text);
  });
}

}  // extern "C"
