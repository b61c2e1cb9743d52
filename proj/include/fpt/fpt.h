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

/* C interface to the first-passage simulation library.
 *
 * Objects are opaque handles created by *_new / *_parse / producer calls and
 * released with the matching *_free. Every fallible call returns fpt_status;
 * on failure fpt_last_error() describes the problem (per thread). Strings
 * returned through char** are owned by the caller and released with
 * fpt_string_free. */
#ifndef FPT_FPT_H_
#define FPT_FPT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(FPT_BUILDING_LIBRARY)
#define FPT_API __attribute__((visibility("default")))
#else
#define FPT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpt_status {
  FPT_OK = 0,
  FPT_ERR_INVALID_ARGUMENT = 1,
  FPT_ERR_PARSE = 2,
  FPT_ERR_HYPOTHESIS = 3,
  FPT_ERR_MAX_STEPS = 4,
  FPT_ERR_INVALID_SLOPE = 5,
  FPT_ERR_INVALID_PROBLEM = 6,
  FPT_ERR_OVERFLOW = 7,
  FPT_ERR_IO = 8,
  FPT_ERR_INTERNAL = 9
} fpt_status;

typedef enum fpt_exit_reason {
  FPT_EXIT_EPSILON = 0,
  FPT_EXIT_HORIZON = 1,
  FPT_EXIT_GRID_HIT = 2,
  FPT_EXIT_BRIDGE_HIT = 3
} fpt_exit_reason;

typedef struct fpt_boundary fpt_boundary;
typedef struct fpt_config fpt_config;
typedef struct fpt_run fpt_run;
typedef struct fpt_table fpt_table;

typedef struct fpt_sample {
  double tau;
  uint64_t steps;
  int truncated;
  fpt_exit_reason exit_reason;
} fpt_sample;

typedef struct fpt_summary {
  uint64_t n_trials;
  double mean_tau;
  double mean_tau_stderr;
  double mean_steps;
  double mean_steps_stderr;
  double truncation_rate;
} fpt_summary;

FPT_API const char* fpt_version(void);
FPT_API const char* fpt_last_error(void);
FPT_API const char* fpt_status_name(fpt_status status);
FPT_API void fpt_string_free(char* text);

/* Boundaries, e.g. "sqrt:alpha=1" or "cosine:alpha=3.5,beta=3,omega=1.57". */
FPT_API fpt_status fpt_boundary_parse(const char* spec, fpt_boundary** out);
FPT_API void fpt_boundary_free(fpt_boundary* boundary);
FPT_API fpt_status fpt_boundary_value(const fpt_boundary* boundary, double t,
                                      double* out);
FPT_API fpt_status fpt_boundary_derivative(const fpt_boundary* boundary,
                                           double t, double* out);
/* Hypothesis verdicts as JSON; grid_points <= 0 selects the default grid. */
FPT_API fpt_status fpt_boundary_check_json(const fpt_boundary* boundary,
                                           double grid_horizon,
                                           int64_t grid_points, char** json);

/* Experiment configuration (flat key=value). */
FPT_API fpt_status fpt_config_new(fpt_config** out);
FPT_API void fpt_config_free(fpt_config* config);
FPT_API fpt_status fpt_config_apply_preset(fpt_config* config, const char* name);
FPT_API fpt_status fpt_config_set(fpt_config* config, const char* key,
                                  const char* value);
FPT_API fpt_status fpt_config_load_file(fpt_config* config, const char* path);
/* One "key=value" line per setting, in a stable order. */
FPT_API fpt_status fpt_config_dump(const fpt_config* config, char** text);
FPT_API fpt_status fpt_config_validate(const fpt_config* config);
/* Newline-separated preset names. */
FPT_API fpt_status fpt_preset_names(char** text);

/* Monte Carlo runs. algo1 configs are gated on the hypotheses it needs
 * unless force=true. */
FPT_API fpt_status fpt_simulate(const fpt_config* config, fpt_run** out);
FPT_API void fpt_run_free(fpt_run* run);
FPT_API fpt_status fpt_run_size(const fpt_run* run, uint64_t* n);
FPT_API fpt_status fpt_run_sample(const fpt_run* run, uint64_t index,
                                  fpt_sample* out);
FPT_API fpt_status fpt_run_summary(const fpt_run* run, fpt_summary* out);
FPT_API fpt_status fpt_run_samples_csv(const fpt_run* run, char** csv);
FPT_API fpt_status fpt_run_cdf_csv(const fpt_run* run, char** csv);
FPT_API fpt_status fpt_run_summary_json(const fpt_run* run, char** json);

/* Tabular experiments. fpt_sweep sweeps over the horizons when the config
 * lists any, otherwise over the epsilon schedule. */
FPT_API fpt_status fpt_sweep(const fpt_config* config, fpt_table** out);
FPT_API fpt_status fpt_psi_curve(const fpt_config* config, fpt_table** out);
FPT_API fpt_status fpt_bench(const fpt_config* config, fpt_table** out);
FPT_API void fpt_table_free(fpt_table* table);
FPT_API fpt_status fpt_table_shape(const fpt_table* table, size_t* rows,
                                   size_t* cols);
/* Pointers stay valid until the table is freed; row -1 is the header. */
FPT_API fpt_status fpt_table_cell(const fpt_table* table, int64_t row,
                                  size_t col, const char** out);
FPT_API fpt_status fpt_table_csv(const fpt_table* table, char** csv);

/* Check suite for a config; JSON {"all_pass": ..., "checks": [...]}. */
FPT_API fpt_status fpt_check(const fpt_config* config, char** json,
                             int* all_pass);

FPT_API fpt_status fpt_write_file(const char* path, const char* text);

#ifdef __cplusplus
}
#endif

#endif /* FPT_FPT_H_ */
