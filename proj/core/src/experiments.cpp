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

#include "lyapent/experiments.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace lyapent {

namespace {

constexpr double kConfigNormTol = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string format_number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

CVector normalized_or_throw(CVector amps, const std::string& field) {
  const double err = std::abs(amps.norm() - 1.0);
  if (err > kConfigNormTol) {
    std::ostringstream msg;
    msg << "state is not normalized (| ||psi|| - 1 | = " << err << ")";
    throw ConfigError(field, msg.str());
  }
  amps /= amps.norm();
  return amps;
}

Complex parse_complex(std::string_view text, const std::string& field) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw ConfigError(field, "expected amplitude '(re,im)', got '" + t + "'");
  }
  const auto parts = split(std::string_view(t).substr(1, t.size() - 2), ',');
  if (parts.size() != 2) {
    throw ConfigError(field, "expected amplitude '(re,im)', got '" + t + "'");
  }
  return {parse_double(parts[0], field), parse_double(parts[1], field)};
}

std::optional<BellState> bell_from_name(std::string_view name) {
  const std::string n = lower(name);
  if (n == "phiplus" || n == "phi+") return BellState::PhiPlus;
  if (n == "phiminus" || n == "phi-") return BellState::PhiMinus;
  if (n == "psiplus" || n == "psi+") return BellState::PsiPlus;
  if (n == "psiminus" || n == "psi-") return BellState::PsiMinus;
  return std::nullopt;
}

ControlLaw parse_law(KeyValues& kv) {
  const std::string kind = lower(kv.take("law").value_or("lyapunov"));
  const auto kappa = kv.take_double("law.kappa");
  const auto sign = kv.take_int("law.sign");
  const auto t0 = kv.take_double("law.t0");
  if (kind == "lyapunov") {
    if (t0) throw ConfigError("law.t0", "only applies to law = geometric");
    return LyapunovLaw{kappa.value_or(1.0), static_cast<int>(sign.value_or(1))};
  }
  if (kappa || sign) {
    throw ConfigError(kappa ? "law.kappa" : "law.sign",
                      "only applies to law = lyapunov");
  }
  if (kind == "geometric") {
    if (!t0) throw ConfigError("law.t0", "required for law = geometric");
    return GeometricLaw{*t0};
  }
  if (kind == "none") {
    if (t0) throw ConfigError("law.t0", "only applies to law = geometric");
    return FreeEvolution{};
  }
  throw ConfigError("law", "expected lyapunov, geometric or none, got '" +
                               kind + "'");
}

std::vector<double> parse_values(const std::string& text) {
  const std::string t = trim(text);
  if (t.rfind("linspace(", 0) == 0 && t.back() == ')') {
    const auto parts =
        split(std::string_view(t).substr(9, t.size() - 10), ',');
    if (parts.size() != 3) {
      throw ConfigError("sweep.values", "linspace expects (lo, hi, n)");
    }
    const double lo = parse_double(parts[0], "sweep.values");
    const double hi = parse_double(parts[1], "sweep.values");
    const double n = parse_double(parts[2], "sweep.values");
    if (n < 1.0 || n != std::floor(n)) {
      throw ConfigError("sweep.values", "linspace count must be a positive integer");
    }
    std::vector<double> out;
    const auto count = static_cast<int>(n);
    for (int i = 0; i < count; ++i) {
      out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(t, ',')) {
    out.push_back(parse_double(part, "sweep.values"));
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["status"] = "ok";
  j["law"] = r.law;
  j["seed"] = r.seed;
  j["final"] = {{"t", r.last.t},
                {"V", r.last.V},
                {"f", r.last.f},
                {"concurrence", r.last.concurrence},
                {"fidelity", r.last.fidelity},
                {"p_S", r.last.p_S},
                {"purity", r.last.purity}};
  if (r.convergence) {
    j["convergence"] = {{"rate", r.convergence->rate},
                        {"fit_quality", r.convergence->fit_quality},
                        {"v_final", r.convergence->v_final},
                        {"stalled", r.convergence->stalled}};
  } else {
    j["convergence"] = nullptr;
  }
  j["peak"] = {{"t_first", optional_number(r.peak.t_first)},
               {"c_max", r.peak.c_max},
               {"t_max", r.peak.t_max},
               {"fluctuation_amplitude", r.peak.fluctuation_amplitude}};
  j["stalled"] = r.stalled;
  j["max_field_ratio"] = r.max_field_ratio;
  j["invariants"] = {{"max_trace_error", r.invariants.max_trace_error},
                     {"max_hermiticity_error", r.invariants.max_hermiticity_error},
                     {"max_purity_drift", r.invariants.max_purity_drift},
                     {"min_eigenvalue", r.invariants.min_eigenvalue},
                     {"min_p_S", r.invariants.min_p_S},
                     {"max_p_S", r.invariants.max_p_S}};
  j["steps"] = {{"accepted", r.accepted_steps}, {"rejected", r.rejected_steps}};
  return j;
}

}  // namespace

StateSpec parse_state(std::string_view text, const std::string& field) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError(field, "missing state");
  if (t.size() >= 3 && t.front() == '|' && t.back() == '>') {
    try {
      return {t, product_state(t.substr(1, t.size() - 2), BasisTag::ZProduct)
                     .amplitudes()};
    } catch (const std::invalid_argument& e) {
      throw ConfigError(field, e.what());
    }
  }
  if (const auto bell = bell_from_name(t)) {
    return {t, bell_state(*bell, BasisTag::ZProduct).amplitudes()};
  }
  if (lower(t).rfind("basis:", 0) == 0) {
    const auto parts = split(t, ';');
    if (parts.size() != 2) {
      throw ConfigError(field, "expected 'basis:<Z|X|Bell>; amps = (re,im),...'");
    }
    BasisTag basis;
    try {
      basis = parse_basis_tag(trim(std::string_view(parts[0]).substr(6)));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(field, e.what());
    }
    const auto eq = parts[1].find('=');
    if (eq == std::string::npos || trim(parts[1].substr(0, eq)) != "amps") {
      throw ConfigError(field, "expected 'amps = (re,im),...'");
    }
    // Split "(a,b),(c,d)" on the commas between parentheses.
    std::vector<Complex> amps;
    const std::string list = trim(parts[1].substr(eq + 1));
    std::size_t pos = 0;
    while (pos < list.size()) {
      const auto open = list.find('(', pos);
      if (open == std::string::npos) break;
      const auto close = list.find(')', open);
      if (close == std::string::npos) {
        throw ConfigError(field, "unbalanced parentheses in amplitudes");
      }
      amps.push_back(parse_complex(list.substr(open, close - open + 1), field));
      pos = close + 1;
    }
    if (amps.size() != 4) {
      throw ConfigError(field, "expected 4 amplitudes, got " +
                                   std::to_string(amps.size()));
    }
    CVector v(4);
    for (Eigen::Index i = 0; i < 4; ++i) v(i) = amps[static_cast<std::size_t>(i)];
    v = normalized_or_throw(std::move(v), field);
    return {t, Basis::get(basis).transform().adjoint() * v};
  }
  throw ConfigError(field, "unknown state '" + t + "'");
}

void ScenarioConfig::validate() const {
  try {
    model.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("model", e.what());
  }
  try {
    lyapent::validate(law);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("law", e.what());
  }
  try {
    integrator.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("integrator", e.what());
  }
  if (initial_state.amplitudes_z.size() != 4) {
    throw ConfigError("initial_state", "missing state");
  }
  if (target_state.amplitudes_z.size() != 4) {
    throw ConfigError("target_state", "missing state");
  }
  if (std::abs(initial_state.amplitudes_z.norm() - 1.0) > kConfigNormTol) {
    throw ConfigError("initial_state", "state is not normalized");
  }
  if (std::abs(target_state.amplitudes_z.norm() - 1.0) > kConfigNormTol) {
    throw ConfigError("target_state", "state is not normalized");
  }
  if (!(peak_threshold > 0.0 && peak_threshold <= 1.0)) {
    throw ConfigError("report.peak_threshold", "must lie in (0, 1]");
  }
  if (!(peak_window > 0.0)) {
    throw ConfigError("report.peak_window", "must be > 0");
  }
}

ScenarioConfig parse_scenario(KeyValues& kv) {
  ScenarioConfig cfg;
  if (auto v = kv.take("name")) cfg.name = *v;
  if (auto v = kv.take_int("seed")) cfg.seed = static_cast<std::uint64_t>(*v);
  if (auto v = kv.take_double("model.J")) cfg.model.J = *v;
  if (auto v = kv.take_double("model.eta")) cfg.model.eta = *v;
  if (auto v = kv.take_double("model.k")) cfg.model.k = *v;
  if (auto v = kv.take("paradigm")) {
    try {
      cfg.paradigm = parse_paradigm(*v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("paradigm", e.what());
    }
  }
  cfg.law = parse_law(kv);
  const auto initial = kv.take("initial_state");
  if (!initial) throw ConfigError("initial_state", "required");
  cfg.initial_state = parse_state(*initial, "initial_state");
  cfg.target_state =
      parse_state(kv.take("target_state").value_or("PhiPlus"), "target_state");
  if (auto v = kv.take("basis")) {
    try {
      cfg.basis = parse_basis_tag(*v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("basis", e.what());
    }
  }
  if (auto v = kv.take_bool("reduce")) cfg.reduce = *v;
  if (auto v = kv.take_double("integrator.dt")) cfg.integrator.dt = *v;
  if (auto v = kv.take_double("integrator.t_max")) cfg.integrator.t_max = *v;
  if (auto v = kv.take_double("integrator.rel_tol")) cfg.integrator.rel_tol = *v;
  if (auto v = kv.take_double("integrator.abs_tol")) cfg.integrator.abs_tol = *v;
  if (auto v = kv.take_double("integrator.sample_every")) {
    cfg.integrator.sample_every = *v;
  }
  if (auto v = kv.take_double("integrator.v_stop")) cfg.integrator.v_stop = *v;
  if (auto v = kv.take_double("integrator.min_step")) cfg.integrator.min_step = *v;
  if (auto v = kv.take_double("report.peak_threshold")) cfg.peak_threshold = *v;
  if (auto v = kv.take_double("report.peak_window")) cfg.peak_window = *v;
  if (auto v = kv.take("output.trajectory_csv")) cfg.outputs.trajectory_csv = *v;
  if (auto v = kv.take("output.report_json")) cfg.outputs.report_json = *v;
  cfg.validate();
  return cfg;
}

ScenarioConfig parse_scenario(std::string_view text) {
  KeyValues kv = KeyValues::parse(text);
  ScenarioConfig cfg = parse_scenario(kv);
  if (const auto extra = kv.unused(); !extra.empty()) {
    throw ConfigError(extra.front(), "unknown key");
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  KeyValues kv = KeyValues::load(path);
  ScenarioConfig cfg = parse_scenario(kv);
  if (const auto extra = kv.unused(); !extra.empty()) {
    throw ConfigError(extra.front(), "unknown key");
  }
  return cfg;
}

namespace {

SweepConfig parse_sweep(KeyValues& kv) {
  SweepConfig cfg;
  cfg.base = parse_scenario(kv);
  const auto axis = kv.take("sweep.axis");
  if (!axis) throw ConfigError("sweep.axis", "required");
  cfg.axis = *axis;
  const auto values = kv.take("sweep.values");
  if (!values) throw ConfigError("sweep.values", "required");
  cfg.values = parse_values(*values);
  if (auto p = kv.take_int("sweep.parallel")) {
    if (*p < 1) throw ConfigError("sweep.parallel", "must be >= 1");
    cfg.parallel = static_cast<unsigned>(*p);
  }
  if (auto out = kv.take("sweep.output")) cfg.table_csv = *out;
  if (const auto extra = kv.unused(); !extra.empty()) {
    throw ConfigError(extra.front(), "unknown key");
  }
  // Reject bad axes up front rather than failing every row.
  ScenarioConfig probe = cfg.base;
  set_axis(probe, cfg.axis, cfg.values.empty() ? 0.0 : cfg.values.front());
  return cfg;
}

}  // namespace

SweepConfig parse_sweep(std::string_view text) {
  KeyValues kv = KeyValues::parse(text);
  return parse_sweep(kv);
}

SweepConfig load_sweep(const std::filesystem::path& path) {
  KeyValues kv = KeyValues::load(path);
  return parse_sweep(kv);
}

const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes{
      "law.t0",        "law.kappa",           "model.J",
      "model.eta",     "model.k",             "integrator.t_max",
      "integrator.dt", "integrator.rel_tol",  "integrator.abs_tol",
      "integrator.sample_every"};
  return axes;
}

void set_axis(ScenarioConfig& cfg, std::string_view axis, double value) {
  const std::string a(axis);
  if (a == "law.t0") {
    auto* g = std::get_if<GeometricLaw>(&cfg.law);
    if (g == nullptr) throw ConfigError(a, "requires law = geometric");
    g->t0 = value;
  } else if (a == "law.kappa") {
    auto* l = std::get_if<LyapunovLaw>(&cfg.law);
    if (l == nullptr) throw ConfigError(a, "requires law = lyapunov");
    l->kappa = value;
  } else if (a == "model.J") {
    cfg.model.J = value;
  } else if (a == "model.eta") {
    cfg.model.eta = value;
  } else if (a == "model.k") {
    cfg.model.k = value;
  } else if (a == "integrator.t_max") {
    cfg.integrator.t_max = value;
  } else if (a == "integrator.dt") {
    cfg.integrator.dt = value;
  } else if (a == "integrator.rel_tol") {
    cfg.integrator.rel_tol = value;
  } else if (a == "integrator.abs_tol") {
    cfg.integrator.abs_tol = value;
  } else if (a == "integrator.sample_every") {
    cfg.integrator.sample_every = value;
  } else {
    throw ConfigError("sweep.axis", "unknown axis '" + a + "'");
  }
}

ScenarioSetup build_setup(const ScenarioConfig& cfg) {
  cfg.validate();
  HamiltonianPair h = hamiltonians(cfg.model, cfg.paradigm, cfg.basis);
  const Basis& basis = Basis::get(cfg.basis);
  CVector psi0 = basis.from_zproduct(cfg.initial_state.amplitudes_z);
  CVector psi_d = basis.from_zproduct(cfg.target_state.amplitudes_z);
  if (cfg.reduce) {
    try {
      h = subspace_reduce(h);
    } catch (const InvariantError& e) {
      throw ConfigError("reduce", e.what());
    }
    const CMatrix p = subspace_isometry(cfg.basis);
    auto restrict_state = [&](const CVector& v, const char* field) {
      CVector r = p.adjoint() * v;
      if (std::abs(r.norm() - 1.0) > kConfigNormTol) {
        throw ConfigError(field, "state is not supported on span{|++>, |-->}");
      }
      return CVector(r / r.norm());
    };
    psi0 = restrict_state(psi0, "initial_state");
    psi_d = restrict_state(psi_d, "target_state");
  }
  return {std::move(h), outer(StateVector(psi0, {1e-12, 1e-12, -1e-10, 1e-11})),
          outer(StateVector(psi_d, {1e-12, 1e-12, -1e-10, 1e-11}))};
}

RunReport make_report(const ScenarioConfig& cfg, const Trajectory& traj) {
  RunReport r;
  r.name = cfg.name;
  r.law = describe(cfg.law);
  r.last = traj.back();
  r.convergence = convergence_report(traj);
  r.peak = peak_report(traj, cfg.peak_threshold, cfg.peak_window);
  r.stalled = traj.meta.stalled;
  r.max_field_ratio = traj.meta.max_field_ratio;
  r.invariants = traj.meta.invariants;
  r.accepted_steps = traj.meta.accepted_steps;
  r.rejected_steps = traj.meta.rejected_steps;
  r.seed = cfg.seed;
  return r;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  const ScenarioSetup setup = build_setup(cfg);
  const RunLabels labels{cfg.model, cfg.paradigm};
  Trajectory traj =
      std::visit(Overloaded{
                     [&](const GeometricLaw& g) {
                       return geometric_trajectory(
                           setup.hamiltonians, g, setup.rho0, setup.rho_d0,
                           cfg.integrator.sample_every, labels);
                     },
                     [&](const auto&) {
                       return integrate(setup.hamiltonians, cfg.law, setup.rho0,
                                        setup.rho_d0, cfg.integrator, labels);
                     },
                 },
                 cfg.law);
  RunReport report = make_report(cfg, traj);
  return {std::move(traj), std::move(report)};
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << kCsvHeader << '\n';
  char buf[512];
  for (const Sample& s : traj.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  s.t, s.V, s.f, s.concurrence, s.fidelity, s.p_S, s.purity);
    out << buf;
  }
}

std::string report_json(const RunReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::string reports_json(const std::vector<RunReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string failure_json(const std::string& name, const std::string& error) {
  nlohmann::json j;
  j["name"] = name;
  j["status"] = "error";
  j["error"] = error;
  return j.dump(2) + "\n";
}

void write_outputs(const ScenarioConfig& cfg, const ScenarioResult& result) {
  if (cfg.outputs.trajectory_csv) {
    std::ostringstream csv;
    write_trajectory_csv(result.trajectory, csv);
    write_file(*cfg.outputs.trajectory_csv, csv.str());
  }
  if (cfg.outputs.report_json) {
    write_file(*cfg.outputs.report_json, report_json(result.report));
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  std::vector<SweepRow> rows(cfg.values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      SweepRow& row = rows[i];
      row.value = cfg.values[i];
      try {
        ScenarioConfig scenario = cfg.base;
        set_axis(scenario, cfg.axis, row.value);
        const ScenarioResult result = run_scenario(scenario);
        row.ok = true;
        row.final_concurrence = result.report.last.concurrence;
        row.final_V = result.report.last.V;
        row.t_first = result.report.peak.t_first;
        if (result.report.convergence) row.rate = result.report.convergence->rate;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    }
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(cfg.parallel,
                                      static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

void write_sweep_csv(const std::string& axis, const std::vector<SweepRow>& rows,
                     std::ostream& out) {
  out << "value,status,final_concurrence,final_V,t_first,rate,axis,error\n";
  char buf[256];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%s,", r.value, r.ok ? "ok" : "error");
    out << buf;
    if (r.ok) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,", r.final_concurrence,
                    r.final_V);
      out << buf;
    } else {
      out << ",,";
    }
    if (r.t_first) {
      std::snprintf(buf, sizeof buf, "%.17g", *r.t_first);
      out << buf;
    }
    out << ',';
    if (r.rate) {
      std::snprintf(buf, sizeof buf, "%.17g", *r.rate);
      out << buf;
    }
    std::string err = r.error;
    std::replace(err.begin(), err.end(), '"', '\'');
    out << ',' << axis << ",\"" << err << "\"\n";
  }
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"figure1", "figure2", "figure3",
                                              "figure4"};
  return names;
}

std::vector<ScenarioConfig> preset(std::string_view name) {
  const StateSpec plus_plus = parse_state("|++>", "initial_state");
  const StateSpec phi_plus = parse_state("PhiPlus", "target_state");
  auto lyapunov = [&](Paradigm paradigm, double kappa, const std::string& label) {
    ScenarioConfig c;
    c.name = label + "_k" + format_number(kappa);
    c.model = {1.0, 0.1, 1.0};
    c.paradigm = paradigm;
    c.law = LyapunovLaw{kappa, +1};
    c.initial_state = plus_plus;
    c.target_state = phi_plus;
    c.basis = paradigm == Paradigm::LocalControl ? BasisTag::Bell
                                                 : BasisTag::XProduct;
    c.integrator.t_max = 300.0;
    return c;
  };
  std::vector<ScenarioConfig> out;
  if (name == "figure1") {
    for (const double b : {0.1, 0.2, 0.4}) {
      ScenarioConfig c;
      c.name = "figure1_B" + format_number(b);
      c.model = {1.0, b, 1.0};
      c.paradigm = Paradigm::LocalControl;
      c.law = GeometricLaw{200.0};
      c.initial_state = parse_state("|00>", "initial_state");
      c.target_state = phi_plus;
      c.basis = BasisTag::ZProduct;
      out.push_back(c);
    }
  } else if (name == "figure2") {
    for (const double k : {0.5, 1.0, 2.0}) {
      out.push_back(lyapunov(Paradigm::LocalControl, k, "figure2"));
    }
  } else if (name == "figure3") {
    for (const double k : {0.5, 1.0, 2.0}) {
      out.push_back(lyapunov(Paradigm::InteractionControl, k, "figure3"));
    }
  } else if (name == "figure4") {
    for (const double k : {0.5, 1.0, 2.0}) {
      out.push_back(lyapunov(Paradigm::LocalControl, k, "figure4_local"));
    }
    for (const double k : {0.5, 1.0, 2.0}) {
      out.push_back(
          lyapunov(Paradigm::InteractionControl, k, "figure4_interaction"));
    }
  } else {
    throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
  }
  return out;
}

std::vector<ScenarioResult> run_preset(std::string_view name,
                                       const std::filesystem::path& out_dir,
                                       std::uint64_t seed) {
  std::vector<ScenarioConfig> configs = preset(name);
  std::vector<ScenarioResult> results;
  std::vector<RunReport> reports;
  for (ScenarioConfig& c : configs) {
    c.seed = seed;
    c.outputs.trajectory_csv = out_dir / (c.name + ".csv");
    results.push_back(run_scenario(c));
    write_outputs(c, results.back());
    reports.push_back(results.back().report);
  }
  write_file(out_dir / (std::string(name) + "_report.json"),
             reports_json(reports));
  return results;
}

}  // namespace lyapent
