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

// fptsim: command-line front end to the first-passage simulation library.
//
//   fptsim simulate --algo algo1 --boundary sqrt:alpha=1 --trials 10000 --out s.csv
//   fptsim sweep    --preset sqrt-1 --out steps.csv
//   fptsim check    --preset ou-figure
//   fptsim bench    --preset euler-bias --out bias.csv
//   fptsim replay   s.csv.manifest.json --out-dir rerun/
//
// Settings resolve as defaults < FPT_SEED < --preset < --config < flags.
// Every file written is accompanied by <file>.manifest.json, from which
// `replay` regenerates it byte for byte.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpt/fpt.h"

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kRuntime = 1, kConfig = 2, kHypothesis = 3 };

class Failure : public std::exception {
 public:
  Failure(fpt_status status, std::string message)
      : status_(status), message_(std::move(message)) {}
  fpt_status status() const noexcept { return status_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  fpt_status status_;
  std::string message_;
};

void ok(fpt_status status) {
  if (status != FPT_OK) throw Failure(status, fpt_last_error());
}

int exit_code_for(fpt_status status) {
  switch (status) {
    case FPT_OK: return kOk;
    case FPT_ERR_INVALID_ARGUMENT:
    case FPT_ERR_PARSE:
    case FPT_ERR_INVALID_SLOPE:
    case FPT_ERR_INVALID_PROBLEM: return kConfig;
    case FPT_ERR_HYPOTHESIS: return kHypothesis;
    default: return kRuntime;
  }
}

struct CString {
  char* p = nullptr;
  ~CString() { fpt_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct ConfigHandle {
  fpt_config* p = nullptr;
  ConfigHandle() { ok(fpt_config_new(&p)); }
  ~ConfigHandle() { fpt_config_free(p); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;

  void set(const std::string& key, const std::string& value) {
    ok(fpt_config_set(p, key.c_str(), value.c_str()));
  }
  std::vector<std::pair<std::string, std::string>> items() const {
    CString text;
    ok(fpt_config_dump(p, &text.p));
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text.str());
    for (std::string line; std::getline(in, line);) {
      const auto eq = line.find('=');
      if (eq != std::string::npos) out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return out;
  }
  std::string get(const std::string& key) const {
    for (const auto& [k, v] : items()) {
      if (k == key) return v;
    }
    return {};
  }
};

std::string now_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  ok(fpt_write_file(path.c_str(), text.c_str()));
}

// Settings collected from the command line, applied on top of presets and
// config files.
struct CommonOptions {
  std::string preset;
  std::string config_file;
  std::vector<std::pair<std::string, CLI::Option*>> flags;
  std::map<std::string, std::string> values;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--preset", o.preset, "Named experiment preset");
  cmd->add_option("--config", o.config_file, "key=value configuration file");
  const std::vector<std::pair<std::string, std::string>> keys = {
      {"algo", "algo1|algo2|ou|euler-plain|euler-bridge|euler-shifted|psi"},
      {"boundary", "Boundary spec, e.g. sqrt:alpha=1"},
      {"epsilon", "Stopping tolerance (accepts 2^-10)"},
      {"schedule", "Exponents n for epsilon = 0.5^n, e.g. 1..10"},
      {"horizon", "Truncation horizon K"},
      {"slope", "Algorithm 2 slope r, or auto"},
      {"trials", "Number of simulated paths"},
      {"seed", "Master seed"},
      {"workers", "Worker threads (results do not depend on it)"},
      {"grid-points", "CDF grid size"},
      {"grid-upper", "CDF grid upper end, or auto"},
      {"dt", "Euler step"},
      {"dts", "Euler steps for bench, comma separated"},
      {"ref-epsilon", "Reference epsilon for bench"},
      {"ref-trials", "Reference paths for bench (0: trials)"},
      {"horizons", "Horizons K for a horizon sweep"},
      {"alphas", "Alpha grid for the psi curve"},
      {"draws", "Draws per alpha for the psi curve"},
      {"eps-fine", "Fine epsilon for sandwich checks, or auto"},
      {"max-steps", "Per-path step cap (0: default)"},
  };
  for (const auto& [key, help] : keys) {
    const std::string name = key == "horizon" ? "-K,--horizon" : "--" + key;
    auto* opt = cmd->add_option(name, o.values[key], help);
    o.flags.emplace_back(key, opt);
  }
  cmd->add_flag("--force", o.force, "Run algo1 outside its hypotheses");
}

void resolve(ConfigHandle& config, const CommonOptions& o) {
  if (const char* env = std::getenv("FPT_SEED")) config.set("seed", env);
  if (!o.preset.empty()) ok(fpt_config_apply_preset(config.p, o.preset.c_str()));
  if (!o.config_file.empty()) {
    ok(fpt_config_load_file(config.p, o.config_file.c_str()));
  }
  for (const auto& [key, opt] : o.flags) {
    if (opt->count() > 0) config.set(key, o.values.at(key));
  }
  if (o.force) {
    config.set("force", "true");
  }
  ok(fpt_config_validate(config.p));
}

void warn_if_forced(const ConfigHandle& config) {
  if (config.get("force") == "true" && config.get("algo") == "algo1") {
    std::cerr << "WARNING: --force given; hypothesis gating is disabled and "
                 "results may be meaningless for this boundary\n";
  }
}

struct Outputs {
  std::vector<std::pair<std::string, std::string>> files;  // role, path
};

void write_manifest(const std::string& command, const ConfigHandle& config,
                    const std::string& started, const Outputs& outputs) {
  json cfg = json::object();
  for (const auto& [k, v] : config.items()) cfg[k] = v;
  json files = json::object();
  for (const auto& [role, path] : outputs.files) files[role] = path;
  json manifest{{"tool", "fptsim"},
                {"version", fpt_version()},
                {"command", command},
                {"config", cfg},
                {"master_seed", config.get("seed")},
                {"start_time", started},
                {"end_time", now_utc()},
                {"outputs", files}};
  for (const auto& [role, path] : outputs.files) {
    write_file(path + ".manifest.json", manifest.dump(2) + "\n");
  }
}

// Writes text to path, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text, const std::string& role,
          Outputs& outputs) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  write_file(path, text);
  outputs.files.emplace_back(role, path);
}

struct Paths {
  std::string out;
  std::string cdf_out;
  std::string summary_out;
};

// ---------------------------------------------------------------------------
// Commands. Each returns the process exit code.

int do_simulate(ConfigHandle& config, const Paths& paths) {
  const std::string started = now_utc();
  warn_if_forced(config);
  fpt_run* raw = nullptr;
  ok(fpt_simulate(config.p, &raw));
  std::unique_ptr<fpt_run, decltype(&fpt_run_free)> run(raw, fpt_run_free);

  Outputs outputs;
  CString samples, cdf, summary;
  ok(fpt_run_samples_csv(run.get(), &samples.p));
  ok(fpt_run_summary_json(run.get(), &summary.p));
  emit(paths.out, samples.str(), "samples", outputs);
  if (!paths.cdf_out.empty()) {
    ok(fpt_run_cdf_csv(run.get(), &cdf.p));
    emit(paths.cdf_out, cdf.str(), "cdf", outputs);
  }
  if (!paths.summary_out.empty()) {
    emit(paths.summary_out, summary.str(), "summary", outputs);
  }
  (paths.out.empty() ? std::cerr : std::cout) << summary.str();
  write_manifest("simulate", config, started, outputs);
  return kOk;
}

int emit_table(const std::string& command, fpt_table* raw, ConfigHandle& config,
               const std::string& started, const Paths& paths) {
  std::unique_ptr<fpt_table, decltype(&fpt_table_free)> table(raw, fpt_table_free);
  CString csv;
  ok(fpt_table_csv(table.get(), &csv.p));
  Outputs outputs;
  emit(paths.out, csv.str(), command, outputs);
  write_manifest(command, config, started, outputs);
  return kOk;
}

int do_sweep(ConfigHandle& config, const Paths& paths) {
  const std::string started = now_utc();
  warn_if_forced(config);
  fpt_table* table = nullptr;
  if (config.get("algo") == "psi") {
    ok(fpt_psi_curve(config.p, &table));
  } else {
    ok(fpt_sweep(config.p, &table));
  }
  return emit_table("sweep", table, config, started, paths);
}

int do_bench(ConfigHandle& config, const Paths& paths) {
  const std::string started = now_utc();
  fpt_table* table = nullptr;
  ok(fpt_bench(config.p, &table));
  return emit_table("bench", table, config, started, paths);
}

int do_check(ConfigHandle& config, const Paths& paths) {
  const std::string started = now_utc();
  CString report;
  int all_pass = 0;
  ok(fpt_check(config.p, &report.p, &all_pass));
  Outputs outputs;
  emit(paths.out, report.str(), "report", outputs);
  write_manifest("check", config, started, outputs);
  return all_pass ? kOk : kRuntime;
}

int dispatch(const std::string& command, ConfigHandle& config, const Paths& paths) {
  if (command == "simulate") return do_simulate(config, paths);
  if (command == "sweep") return do_sweep(config, paths);
  if (command == "bench") return do_bench(config, paths);
  if (command == "check") return do_check(config, paths);
  throw Failure(FPT_ERR_PARSE, "unknown command '" + command + "' in manifest");
}

int do_replay(const std::string& manifest_path, const std::string& out_dir,
              const std::string& workers) {
  std::ifstream in(manifest_path);
  if (!in) throw Failure(FPT_ERR_IO, "cannot read manifest '" + manifest_path + "'");
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& e) {
    throw Failure(FPT_ERR_PARSE, "malformed manifest: " + std::string(e.what()));
  }
  if (!manifest.contains("command") || !manifest.contains("config")) {
    throw Failure(FPT_ERR_PARSE, "manifest lacks command or config");
  }
  ConfigHandle config;
  for (const auto& item : manifest["config"].items()) {
    config.set(item.key(), item.value().get<std::string>());
  }
  if (!workers.empty()) config.set("workers", workers);
  ok(fpt_config_validate(config.p));

  auto relocate = [&](const std::string& path) {
    if (out_dir.empty()) return path;
    return (std::filesystem::path(out_dir) / std::filesystem::path(path).filename())
        .string();
  };
  Paths paths;
  const json recorded = manifest.value("outputs", json::object());
  for (const auto& item : recorded.items()) {
    const std::string& role = item.key();
    const std::string p = relocate(item.value().get<std::string>());
    if (role == "cdf") {
      paths.cdf_out = p;
    } else if (role == "summary") {
      paths.summary_out = p;
    } else {
      paths.out = p;
    }
  }
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  return dispatch(manifest["command"].get<std::string>(), config, paths);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate first-passage times of Brownian motion and "
               "Ornstein-Uhlenbeck processes through curved boundaries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fpt_version()));

  CommonOptions opts;
  Paths paths;

  auto* simulate = app.add_subcommand("simulate", "Sample hitting times");
  auto* sweep = app.add_subcommand("sweep", "Mean steps against epsilon or K; psi curve for --algo psi");
  auto* check = app.add_subcommand("check", "Hypothesis, sandwich and psi checks (JSON)");
  auto* bench = app.add_subcommand("bench", "Euler bias against the exact reference");
  for (auto* cmd : {simulate, sweep, check, bench}) {
    add_common(cmd, opts);
    cmd->add_option("-o,--out", paths.out, "Output file (default: stdout)");
  }
  simulate->add_option("--cdf-out", paths.cdf_out, "Empirical CDF CSV");
  simulate->add_option("--summary-out", paths.summary_out, "Summary JSON");

  std::string manifest_path, out_dir, replay_workers;
  auto* replay = app.add_subcommand("replay", "Re-run a command from its manifest");
  replay->add_option("manifest", manifest_path, "Path to a .manifest.json")->required();
  replay->add_option("--out-dir", out_dir, "Write outputs here instead of the recorded paths");
  replay->add_option("--workers", replay_workers, "Override the worker count");

  auto* presets = app.add_subcommand("presets", "List preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (presets->parsed()) {
      CString names;
      ok(fpt_preset_names(&names.p));
      std::cout << names.str();
      return kOk;
    }
    if (replay->parsed()) return do_replay(manifest_path, out_dir, replay_workers);

    ConfigHandle config;
    resolve(config, opts);
    for (auto* cmd : {simulate, sweep, check, bench}) {
      if (cmd->parsed()) return dispatch(cmd->get_name(), config, paths);
    }
  } catch (const Failure& e) {
    std::cerr << "fptsim: " << fpt_status_name(e.status()) << ": " << e.what() << "\n";
    return exit_code_for(e.status());
  } catch (const std::exception& e) {
    std::cerr << "fptsim: " << e.what() << "\n";
    return kRuntime;
  }
  return kRuntime;
}
