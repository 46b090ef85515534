// Copyright 2026 The lyapent Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lyapent/experiments.hpp"

namespace lyapent::cli {

namespace {

void print_summary(const RunReport& r) {
  std::cout << r.name << ": t=" << r.last.t << " V=" << r.last.V
            << " concurrence=" << r.last.concurrence;
  if (r.peak.t_first) std::cout << " t_first=" << *r.peak.t_first;
  if (r.convergence) std::cout << " rate=" << r.convergence->rate;
  if (r.stalled) std::cout << " (stalled)";
  std::cout << '\n';
}

int run_command(const std::string& path, std::optional<std::uint64_t> seed) {
  ScenarioConfig cfg = load_scenario(path);
  if (seed) cfg.seed = *seed;
  if (cfg.model.weak_field_warning()) {
    std::cerr << "warning: local field is not small against the coupling\n";
  }
  try {
    const ScenarioResult result = run_scenario(cfg);
    write_outputs(cfg, result);
    print_summary(result.report);
  } catch (const IntegratorError& e) {
    if (cfg.outputs.report_json) {
      std::ofstream(*cfg.outputs.report_json) << failure_json(cfg.name, e.what());
    }
    std::cerr << "integrator aborted: " << e.what() << '\n';
    return kExitIntegrator;
  }
  return kExitOk;
}

int sweep_command(const std::string& path, std::optional<std::uint64_t> seed) {
  SweepConfig cfg = load_sweep(path);
  if (seed) cfg.base.seed = *seed;
  const auto rows = run_sweep(cfg);
  if (cfg.table_csv) {
    if (cfg.table_csv->has_parent_path()) {
      std::filesystem::create_directories(cfg.table_csv->parent_path());
    }
    std::ofstream out(*cfg.table_csv, std::ios::binary);
    write_sweep_csv(cfg.axis, rows, out);
  } else {
    write_sweep_csv(cfg.axis, rows, std::cout);
  }
  for (const auto& row : rows) {
    if (!row.ok) std::cerr << "row " << row.value << " failed: " << row.error << '\n';
  }
  return kExitOk;
}

int preset_command(const std::string& name, const std::string& out,
                   std::optional<std::uint64_t> seed) {
  try {
    for (const auto& result : run_preset(name, out, seed.value_or(0))) {
      print_summary(result.report);
    }
  } catch (const IntegratorError& e) {
    std::cerr << "integrator aborted: " << e.what() << '\n';
    return kExitIntegrator;
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Lyapunov and geometric entanglement control of two atoms"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Seed recorded in report metadata");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Integrate one scenario");
  run->add_option("config", config_path, "Scenario config file")->required();
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("config", config_path, "Sweep config file")->required();
  auto* validate = app.add_subcommand("validate", "Check a config file");
  validate->add_option("config", config_path, "Scenario or sweep config file")
      ->required();
  std::string preset_name;
  std::string out_dir = ".";
  auto* preset_cmd = app.add_subcommand("preset", "Reproduce a figure");
  preset_cmd->add_option("name", preset_name, "Preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  preset_cmd->add_option("--out", out_dir, "Output directory");
  for (auto* sub : {run, sweep, validate, preset_cmd}) {
    sub->add_option("--seed", seed, "Seed recorded in report metadata");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*run) return run_command(config_path, seed);
    if (*sweep) return sweep_command(config_path, seed);
    if (*preset_cmd) return preset_command(preset_name, out_dir, seed);
    if (*validate) {
      KeyValues kv = KeyValues::load(config_path);
      if (kv.contains("sweep.axis")) {
        load_sweep(config_path);
      } else {
        load_scenario(config_path);
      }
      std::cout << config_path << ": ok\n";
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lyapent::cli
