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

// Scenario runner: configuration, named figure reproductions, parameter
// sweeps, CSV trajectories and JSON reports.

#pragma once

#include "lyapent/config.hpp"
#include "lyapent/control.hpp"
#include "lyapent/dynamics.hpp"
#include "lyapent/metrics.hpp"
#include "lyapent/model.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lyapent {

/// A configured pure state, resolved to Z-product amplitudes.
struct StateSpec {
  std::string literal;
  CVector amplitudes_z;
};

/// Named literals: |00> |01> |10> |11> |++> |+-> |-+> |-->, PhiPlus,
/// PhiMinus, PsiPlus, PsiMinus. Explicit form:
///   basis:X; amps = (re,im),(re,im),(re,im),(re,im)
/// Amplitudes must have unit norm within 1e-9; they are then renormalized.
StateSpec parse_state(std::string_view text, const std::string& field);

struct OutputSpec {
  std::optional<std::filesystem::path> trajectory_csv;
  std::optional<std::filesystem::path> report_json;
};

struct ScenarioConfig {
  std::string name = "scenario";
  ModelParams model;
  Paradigm paradigm = Paradigm::LocalControl;
  ControlLaw law = LyapunovLaw{};
  StateSpec initial_state;
  StateSpec target_state;
  BasisTag basis = BasisTag::Bell;
  bool reduce = false;  // integrate on span{|++>, |-->}
  IntegratorConfig integrator;
  double peak_threshold = 0.99;
  double peak_window = 10.0;
  OutputSpec outputs;
  std::uint64_t seed = 0;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

ScenarioConfig parse_scenario(KeyValues& kv);
ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

struct SweepConfig {
  ScenarioConfig base;
  std::string axis;
  std::vector<double> values;
  unsigned parallel = 1;
  std::optional<std::filesystem::path> table_csv;
};

/// Scenario keys plus sweep.axis, sweep.values ("a, b, c" or
/// "linspace(lo, hi, n)"), sweep.parallel, sweep.output.
SweepConfig parse_sweep(std::string_view text);
SweepConfig load_sweep(const std::filesystem::path& path);

/// Numeric fields reachable by a sweep axis.
const std::vector<std::string>& sweep_axes();
/// Throws ConfigError for unknown axes or axes that do not apply to the law.
void set_axis(ScenarioConfig& cfg, std::string_view axis, double value);

struct RunReport {
  std::string name;
  std::string law;
  Sample last;  // state at the end of the run
  std::optional<ConvergenceReport> convergence;
  PeakReport peak;
  bool stalled = false;
  double max_field_ratio = 0.0;
  InvariantReport invariants;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  std::uint64_t seed = 0;
};

struct ScenarioResult {
  Trajectory trajectory;
  RunReport report;
};

/// Hamiltonians and initial states exactly as run_scenario builds them.
struct ScenarioSetup {
  HamiltonianPair hamiltonians;
  DensityMatrix rho0;
  DensityMatrix rho_d0;
};
ScenarioSetup build_setup(const ScenarioConfig& cfg);

/// Throws ConfigError (invalid config) or IntegratorError (aborted run).
ScenarioResult run_scenario(const ScenarioConfig& cfg);

RunReport make_report(const ScenarioConfig& cfg, const Trajectory& traj);

inline constexpr std::string_view kCsvHeader =
    "t,V,f,concurrence,fidelity,p_S,purity";

/// Trajectory rows with 17 significant digits.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
std::string report_json(const RunReport& report);
std::string reports_json(const std::vector<RunReport>& reports);
std::string failure_json(const std::string& name, const std::string& error);

/// Writes whichever outputs the config names.
void write_outputs(const ScenarioConfig& cfg, const ScenarioResult& result);

struct SweepRow {
  double value = 0.0;
  bool ok = false;
  double final_concurrence = 0.0;
  double final_V = 0.0;
  std::optional<double> t_first;
  std::optional<double> rate;
  std::string error;
};

/// Rows in input order; failed rows carry the error and the sweep continues.
/// Results do not depend on `parallel`.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);
void write_sweep_csv(const std::string& axis, const std::vector<SweepRow>& rows,
                     std::ostream& out);

const std::vector<std::string>& preset_names();
/// Scenario configs of a named figure reproduction (figure1..figure4).
std::vector<ScenarioConfig> preset(std::string_view name);

/// Runs every scenario of the preset, writing <name>.csv per run and
/// <preset>_report.json into `out_dir`.
std::vector<ScenarioResult> run_preset(std::string_view name,
                                       const std::filesystem::path& out_dir,
                                       std::uint64_t seed = 0);

}  // namespace lyapent
