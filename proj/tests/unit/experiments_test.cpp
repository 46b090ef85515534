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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "lyapent/experiments.hpp"
#include "test_util.hpp"

namespace lyapent {
namespace {

using testing::max_abs;

const char* kShortLocal =
    "name = short\n"
    "paradigm = local\n"
    "law = lyapunov\n"
    "law.kappa = 1\n"
    "initial_state = |++>\n"
    "target_state = PhiPlus\n"
    "basis = bell\n"
    "integrator.t_max = 5\n"
    "integrator.sample_every = 0.5\n";

std::string field_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<none>";
}

TEST(ParseState, NamedLiterals) {
  const auto pp = parse_state("|++>", "s");
  EXPECT_LT(max_abs(pp.amplitudes_z - CVector::Constant(4, 0.5)), 1e-15);
  const auto phi = parse_state("PhiPlus", "s");
  EXPECT_NEAR(std::abs(phi.amplitudes_z(0)), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(std::abs(phi.amplitudes_z(3)), std::sqrt(0.5), 1e-15);
  EXPECT_NO_THROW(parse_state("PsiMinus", "s"));
  EXPECT_NO_THROW(parse_state("|01>", "s"));
}

TEST(ParseState, ExplicitAmplitudes) {
  const auto x = parse_state("basis:X; amps = (1,0),(0,0),(0,0),(0,0)", "s");
  EXPECT_LT(max_abs(x.amplitudes_z - parse_state("|++>", "s").amplitudes_z), 1e-15);
  const auto b = parse_state("basis:Bell; amps = (0,0),(1,0),(0,0),(0,0)", "s");
  EXPECT_LT(max_abs(b.amplitudes_z - parse_state("PhiPlus", "s").amplitudes_z), 1e-15);
  const auto z = parse_state(
      "basis:Z; amps = (0.70710678118654757,0),(0,0),(0,0),(0,0.70710678118654757)", "s");
  EXPECT_NEAR(z.amplitudes_z.norm(), 1.0, 1e-15);
}

TEST(ParseState, Errors) {
  try {
    parse_state("basis:Z; amps = (1,0),(1,0),(0,0),(0,0)", "initial_state");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "initial_state");
    EXPECT_NE(std::string(e.what()).find("normalized"), std::string::npos);
  }
  EXPECT_THROW(parse_state("basis:Z; amps = (1,0),(0,0)", "s"), ConfigError);
  EXPECT_THROW(parse_state("basis:Q; amps = (1,0),(0,0),(0,0),(0,0)", "s"), ConfigError);
  EXPECT_THROW(parse_state("|0+>", "s"), ConfigError);
  EXPECT_THROW(parse_state("Omega", "s"), ConfigError);
  EXPECT_THROW(parse_state("", "s"), ConfigError);
}

TEST(ParseScenario, FieldsAndDefaults) {
  const auto cfg = parse_scenario(kShortLocal);
  EXPECT_EQ(cfg.name, "short");
  EXPECT_EQ(cfg.paradigm, Paradigm::LocalControl);
  EXPECT_EQ(cfg.basis, BasisTag::Bell);
  EXPECT_DOUBLE_EQ(cfg.integrator.t_max, 5.0);
  EXPECT_DOUBLE_EQ(cfg.model.eta, 0.1);
  ASSERT_TRUE(std::holds_alternative<LyapunovLaw>(cfg.law));
  EXPECT_DOUBLE_EQ(std::get<LyapunovLaw>(cfg.law).kappa, 1.0);
  EXPECT_FALSE(cfg.reduce);
}

TEST(ParseScenario, ErrorsNameTheField) {
  const std::string base = kShortLocal;
  EXPECT_EQ(field_of(base + "bogus = 1\n"), "bogus");
  EXPECT_EQ(field_of(base + "model.eta = -1\n"), "model");
  EXPECT_EQ(field_of("law = lyapunov\n"), "initial_state");
  EXPECT_EQ(field_of("initial_state = |++>\nlaw = geometric\n"), "law.t0");
  EXPECT_EQ(field_of("initial_state = |++>\nlaw = teleport\n"), "law");
  EXPECT_EQ(field_of("initial_state = |++>\nlaw = none\nlaw.kappa = 2\n"), "law.kappa");
  EXPECT_EQ(field_of("initial_state = |++>\nbasis = q\n"), "basis");
  EXPECT_EQ(field_of("initial_state = |++>\nparadigm = q\n"), "paradigm");
  EXPECT_EQ(field_of("initial_state = |++>\nintegrator.dt = 0\n"), "integrator");
  EXPECT_EQ(field_of("initial_state = |++>\nreport.peak_threshold = 2\n"),
            "report.peak_threshold");
}

TEST(RunScenario, ProducesReportAndCsv) {
  const auto cfg = parse_scenario(kShortLocal);
  const auto result = run_scenario(cfg);
  EXPECT_EQ(result.trajectory.samples.size(), 11u);
  EXPECT_LT(result.report.last.V, 0.5);
  EXPECT_EQ(result.report.name, "short");

  std::ostringstream csv;
  write_trajectory_csv(result.trajectory, csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "t,V,f,concurrence,fidelity,p_S,purity");
  std::getline(lines, line);
  EXPECT_EQ(line.substr(0, 2), "0,");
  std::getline(lines, line);
  // 17 significant digits round-trip exactly.
  const double t1 = std::stod(line.substr(0, line.find(',')));
  EXPECT_EQ(t1, result.trajectory.samples[1].t);
  const auto v_str = line.substr(line.find(',') + 1);
  EXPECT_EQ(std::stod(v_str), result.trajectory.samples[1].V);

  const auto j = nlohmann::json::parse(report_json(result.report));
  EXPECT_EQ(j["status"], "ok");
  EXPECT_DOUBLE_EQ(j["final"]["V"].get<double>(), result.report.last.V);
  EXPECT_TRUE(j.contains("max_field_ratio"));
  EXPECT_TRUE(j["peak"].contains("t_first"));
  EXPECT_TRUE(j.contains("stalled"));
}

TEST(RunScenario, ReducedModeAgreesWithFullSpace) {
  auto cfg = parse_scenario(kShortLocal);
  const auto full = run_scenario(cfg);
  cfg.reduce = true;
  const auto reduced = run_scenario(cfg);
  ASSERT_EQ(full.trajectory.samples.size(), reduced.trajectory.samples.size());
  for (std::size_t i = 0; i < full.trajectory.samples.size(); ++i) {
    EXPECT_NEAR(full.trajectory.samples[i].V, reduced.trajectory.samples[i].V, 1e-8);
    EXPECT_NEAR(full.trajectory.samples[i].concurrence,
                reduced.trajectory.samples[i].concurrence, 1e-8);
  }
}

TEST(RunScenario, ReducedModeRejectsStatesOutsideSubspace) {
  auto cfg = parse_scenario(std::string(kShortLocal) + "reduce = true\n");
  cfg.initial_state = parse_state("|+->", "initial_state");
  EXPECT_THROW(run_scenario(cfg), ConfigError);
}

TEST(RunScenario, GeometricLawUsesExactPropagation) {
  const auto cfg = parse_scenario(
      "law = geometric\nlaw.t0 = 10\nmodel.eta = 0.4\ninitial_state = |00>\n"
      "basis = z\nintegrator.sample_every = 1\n");
  const auto result = run_scenario(cfg);
  EXPECT_DOUBLE_EQ(result.trajectory.back().t, 10.0);
  EXPECT_EQ(result.trajectory.samples.size(), 11u);
  EXPECT_FALSE(result.report.convergence.has_value() &&
               result.report.convergence->rate > 0.0 &&
               result.report.last.V < 1e-6);
}

TEST(Sweep, ParsesValueLists) {
  const std::string base = kShortLocal;
  auto s = parse_sweep(base + "sweep.axis = law.kappa\nsweep.values = 0.5, 1, 2\n");
  EXPECT_EQ(s.values, (std::vector<double>{0.5, 1.0, 2.0}));
  s = parse_sweep(base + "sweep.axis = model.eta\nsweep.values = linspace(0, 1, 5)\n"
                         "sweep.parallel = 3\n");
  EXPECT_EQ(s.values, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(s.parallel, 3u);
  EXPECT_THROW(parse_sweep(base + "sweep.axis = law.t0\nsweep.values = 1\n"), ConfigError);
  EXPECT_THROW(parse_sweep(base + "sweep.axis = model.q\nsweep.values = 1\n"), ConfigError);
  EXPECT_THROW(parse_sweep(base + "sweep.values = 1\n"), ConfigError);
  EXPECT_THROW(parse_sweep(base + "sweep.axis = model.k\nsweep.values = linspace(0,1)\n"),
               ConfigError);
}

TEST(Sweep, ResultsIndependentOfWorkerCount) {
  const std::string base = kShortLocal;
  auto serial = parse_sweep(base + "sweep.axis = law.kappa\nsweep.values = 0.5, 1, 2, 4\n");
  auto parallel = serial;
  parallel.parallel = 3;
  const auto a = run_sweep(serial);
  const auto b = run_sweep(parallel);
  ASSERT_EQ(a.size(), 4u);
  std::ostringstream sa, sb;
  write_sweep_csv(serial.axis, a, sa);
  write_sweep_csv(parallel.axis, b, sb);
  EXPECT_EQ(sa.str(), sb.str());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].value, serial.values[i]);
  // Larger gain descends faster over the same horizon.
  EXPECT_GT(a[0].final_V, a[3].final_V);
}

TEST(Sweep, RowFailuresDoNotStopTheSweep) {
  const std::string base = kShortLocal;
  const auto s = parse_sweep(base + "sweep.axis = law.kappa\nsweep.values = 1, -1, 2\n");
  const auto rows = run_sweep(s);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].ok);
  EXPECT_FALSE(rows[1].ok);
  EXPECT_FALSE(rows[1].error.empty());
  EXPECT_TRUE(rows[2].ok);
}

TEST(Presets, Definitions) {
  EXPECT_EQ(preset_names().size(), 4u);
  const auto f1 = preset("figure1");
  ASSERT_EQ(f1.size(), 3u);
  EXPECT_EQ(f1[0].name, "figure1_B0.1");
  EXPECT_TRUE(std::holds_alternative<GeometricLaw>(f1[2].law));
  const auto f2 = preset("figure2");
  ASSERT_EQ(f2.size(), 3u);
  EXPECT_EQ(f2[0].name, "figure2_k0.5");
  EXPECT_EQ(f2[1].name, "figure2_k1");
  EXPECT_EQ(f2[2].name, "figure2_k2");
  EXPECT_DOUBLE_EQ(f2[0].integrator.t_max, 300.0);
  EXPECT_EQ(preset("figure3")[0].paradigm, Paradigm::InteractionControl);
  EXPECT_EQ(preset("figure4").size(), 6u);
  EXPECT_THROW(preset("figure9"), ConfigError);
}

}  // namespace
}  // namespace lyapent
