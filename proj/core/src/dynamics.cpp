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

#include "lyapent/dynamics.hpp"

#include "lyapent/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace lyapent {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kMaxGrowth = 5.0;
constexpr double kMaxShrink = 0.2;
constexpr double kStallTol = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct State {
  CMatrix rho;
  CMatrix rho_d;
};

// Field applied over a step that starts at t_start.
double field_value(const ControlLaw& law, const HamiltonianPair& h,
                   double t_start, const CMatrix& rho, const CMatrix& rho_d) {
  return std::visit(
      Overloaded{
          [](const FreeEvolution&) { return 0.0; },
          [&](const LyapunovLaw& l) {
            return control_field(rho, rho_d, h.h1, l);
          },
          [&](const GeometricLaw& g) { return geometric_field(t_start, g); },
      },
      law);
}

State derivative(const HamiltonianPair& h, const ControlLaw& law, double t_start,
                 const State& y) {
  const double f = field_value(law, h, t_start, y.rho, y.rho_d);
  Derivative d = rhs(h, f, y.rho, y.rho_d);
  return {std::move(d.drho), std::move(d.drho_d)};
}

double scaled_error(const CMatrix& err, const CMatrix& y0, const CMatrix& y1,
                    double abs_tol, double rel_tol) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale =
        abs_tol + rel_tol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    worst = std::max(worst, std::abs(err(i)) / scale);
  }
  return worst;
}

class InvariantMonitor {
 public:
  InvariantMonitor(const InvariantLimits& limits, double purity0,
                   double purity_d0)
      : limits_(limits), purity0_(purity0), purity_d0_(purity_d0) {}

  void check(const Sample& s, InvariantReport& report) const {
    for (int which = 0; which < 2; ++which) {
      const CMatrix& m = which == 0 ? s.rho : s.rho_d;
      const double p0 = which == 0 ? purity0_ : purity_d0_;
      const char* name = which == 0 ? "rho" : "rho_d";
      const double tr = trace_error(m);
      const double herm = hermiticity_error(m);
      const double drift = std::abs(purity(m) - p0);
      const double lmin = min_eigenvalue(m);
      report.max_trace_error = std::max(report.max_trace_error, tr);
      report.max_hermiticity_error = std::max(report.max_hermiticity_error, herm);
      report.max_purity_drift = std::max(report.max_purity_drift, drift);
      report.min_eigenvalue = std::min(report.min_eigenvalue, lmin);
      abort_if(tr > 10.0 * limits_.trace, name, "trace error", tr, s.t);
      abort_if(herm > 10.0 * limits_.hermiticity, name, "hermiticity error",
               herm, s.t);
      abort_if(drift > 10.0 * limits_.purity_drift, name, "purity drift", drift,
               s.t);
      abort_if(lmin < 10.0 * limits_.min_eigenvalue, name, "negative eigenvalue",
               lmin, s.t);
    }
    report.min_p_S = std::min(report.min_p_S, s.p_S);
    report.max_p_S = std::max(report.max_p_S, s.p_S);
  }

 private:
  static void abort_if(bool bad, const char* name, const char* what,
                       double value, double t) {
    if (!bad) return;
    std::ostringstream msg;
    msg << "invariant violated at t=" << t << ": " << name << " " << what
        << " = " << value;
    throw IntegratorError(msg.str(), t);
  }

  InvariantLimits limits_;
  double purity0_;
  double purity_d0_;
};

void finish_metadata(Trajectory& traj, const HamiltonianPair& h) {
  const double h0 = h.h0.norm();
  const double h1 = h.h1.norm();
  double ratio = 0.0;
  for (const Sample& s : traj.samples) {
    ratio = std::max(ratio, h0 > 0.0 ? std::abs(s.f) * h1 / h0 : 0.0);
  }
  traj.meta.max_field_ratio = ratio;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("integrator.dt must be > 0");
  if (!(t_max > 0.0)) throw std::invalid_argument("integrator.t_max must be > 0");
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("integrator.rel_tol must be > 0");
  }
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("integrator.abs_tol must be > 0");
  }
  if (!(sample_every > 0.0)) {
    throw std::invalid_argument("integrator.sample_every must be > 0");
  }
  if (!(min_step > 0.0)) {
    throw std::invalid_argument("integrator.min_step must be > 0");
  }
}

Derivative rhs(const HamiltonianPair& h, double f, const CMatrix& rho,
               const CMatrix& rho_d) {
  if (rho.rows() != h.dim() || rho_d.rows() != h.dim()) {
    throw DimensionError("rhs: state and Hamiltonian dimensions differ");
  }
  const CMatrix htot = h.h0 + f * h.h1;
  return {-kI * (htot * rho - rho * htot), -kI * (h.h0 * rho_d - rho_d * h.h0)};
}

Sample make_sample(const HamiltonianPair& h, double t, const CMatrix& rho,
                   const CMatrix& rho_d, double f) {
  Sample s;
  s.t = t;
  s.rho = rho;
  s.rho_d = rho_d;
  s.f = f;
  s.V = lyapunov_value(rho, rho_d);
  s.fidelity = (rho * rho_d).trace().real();
  s.purity = purity(rho);
  const CMatrix rho_z = h.embed(rho);
  s.concurrence = concurrence(rho_z);
  s.p_S = subspace_populations(rho_z, BasisTag::ZProduct).first;
  return s;
}

std::vector<double> sample_times(double t_end, double sample_every) {
  std::vector<double> times;
  const double eps = 1e-9 * sample_every;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * sample_every;
    if (t >= t_end - eps) break;
    times.push_back(t);
  }
  times.push_back(t_end);
  return times;
}

Trajectory integrate(const HamiltonianPair& h, const ControlLaw& law,
                     const DensityMatrix& rho0, const DensityMatrix& rho_d0,
                     const IntegratorConfig& cfg, const RunLabels& labels,
                     const InvariantLimits& limits) {
  cfg.validate();
  validate(law);
  if (rho0.dim() != h.dim() || rho_d0.dim() != h.dim()) {
    throw DimensionError("integrate: state and Hamiltonian dimensions differ");
  }

  Trajectory traj;
  traj.meta.model = labels.model;
  traj.meta.paradigm = labels.paradigm;
  traj.meta.law = law;
  traj.meta.integrator = cfg;
  traj.meta.basis = h.basis;
  traj.meta.reduced = h.reduced();

  std::optional<double> breakpoint;
  if (const auto* g = std::get_if<GeometricLaw>(&law);
      g != nullptr && g->t0 > 0.0 && g->t0 < cfg.t_max) {
    breakpoint = g->t0;
  }
  const bool fsal = !std::holds_alternative<GeometricLaw>(law);

  const InvariantMonitor monitor(limits, rho0.purity(), rho_d0.purity());
  const std::vector<double> times = sample_times(cfg.t_max, cfg.sample_every);

  State y{rho0.mat(), rho_d0.mat()};
  double t = 0.0;
  auto record = [&](double f) {
    Sample s = make_sample(h, t, y.rho, y.rho_d, f);
    monitor.check(s, traj.meta.invariants);
    traj.samples.push_back(std::move(s));
  };
  record(field_value(law, h, t, y.rho, y.rho_d));

  double h_step = std::min(cfg.dt, cfg.t_max);
  State k1 = derivative(h, law, t, y);
  std::size_t next = 1;

  while (next < times.size()) {
    double target = times[next];
    const bool to_breakpoint = breakpoint && t < *breakpoint && *breakpoint < target;
    if (to_breakpoint) target = *breakpoint;

    const double remaining = target - t;
    const bool clipped = remaining <= h_step;
    const double dt = clipped ? remaining : h_step;

    if (!fsal) k1 = derivative(h, law, t, y);
    auto stage = [&](auto&&... terms) {
      State s{y.rho, y.rho_d};
      ((s.rho += dt * terms.first * terms.second->rho,
        s.rho_d += dt * terms.first * terms.second->rho_d),
       ...);
      return derivative(h, law, t, s);
    };
    using Term = std::pair<double, const State*>;
    const State k2 = stage(Term{a21, &k1});
    const State k3 = stage(Term{a31, &k1}, Term{a32, &k2});
    const State k4 = stage(Term{a41, &k1}, Term{a42, &k2}, Term{a43, &k3});
    const State k5 = stage(Term{a51, &k1}, Term{a52, &k2}, Term{a53, &k3},
                           Term{a54, &k4});
    const State k6 = stage(Term{a61, &k1}, Term{a62, &k2}, Term{a63, &k3},
                           Term{a64, &k4}, Term{a65, &k5});
    State y_new{
        y.rho + dt * (b1 * k1.rho + b3 * k3.rho + b4 * k4.rho + b5 * k5.rho +
                      b6 * k6.rho),
        y.rho_d + dt * (b1 * k1.rho_d + b3 * k3.rho_d + b4 * k4.rho_d +
                        b5 * k5.rho_d + b6 * k6.rho_d)};
    State k7 = derivative(h, law, t, y_new);

    const CMatrix err_rho =
        dt * (e1 * k1.rho + e3 * k3.rho + e4 * k4.rho + e5 * k5.rho +
              e6 * k6.rho + e7 * k7.rho);
    const CMatrix err_rho_d =
        dt * (e1 * k1.rho_d + e3 * k3.rho_d + e4 * k4.rho_d + e5 * k5.rho_d +
              e6 * k6.rho_d + e7 * k7.rho_d);
    const double err = std::max(
        scaled_error(err_rho, y.rho, y_new.rho, cfg.abs_tol, cfg.rel_tol),
        scaled_error(err_rho_d, y.rho_d, y_new.rho_d, cfg.abs_tol, cfg.rel_tol));

    const double factor =
        err == 0.0 ? kMaxGrowth
                   : std::clamp(kSafety * std::pow(err, -0.2), kMaxShrink,
                                kMaxGrowth);
    if (err > 1.0) {
      ++traj.meta.rejected_steps;
      h_step = dt * std::min(factor, 1.0);
      if (h_step < cfg.min_step) {
        std::ostringstream msg;
        msg << "step size underflow at t=" << t << " (h=" << h_step << ")";
        throw IntegratorError(msg.str(), t);
      }
      continue;
    }

    ++traj.meta.accepted_steps;
    t = clipped ? target : t + dt;
    y = std::move(y_new);
    k1 = std::move(k7);
    if (!clipped) h_step = dt * factor;

    if (clipped && !to_breakpoint) {
      record(field_value(law, h, t, y.rho, y.rho_d));
      ++next;
      if (cfg.v_stop && traj.samples.back().V < *cfg.v_stop) {
        traj.meta.early_stopped = true;
        break;
      }
    }
  }

  if (std::holds_alternative<LyapunovLaw>(law)) {
    const double v0 = traj.front().V;
    traj.meta.stalled = v0 > kStallTol && v0 - traj.back().V <= kStallTol;
  }
  finish_metadata(traj, h);
  return traj;
}

DensityMatrix geometric_evolve(const CMatrix& h_tot, const DensityMatrix& rho0,
                               double t) {
  if (hermiticity_error(h_tot) > 1e-12) {
    throw InvariantError("geometric_evolve: Hamiltonian is not Hermitian");
  }
  const CMatrix u = expm(-kI * t * h_tot);
  CMatrix rho = conjugate(u, rho0.mat());
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho), StateTolerances{1e-12, 1e-10, -1e-10});
}

Trajectory geometric_trajectory(const HamiltonianPair& h,
                                const GeometricLaw& law,
                                const DensityMatrix& rho0,
                                const DensityMatrix& rho_d0,
                                double sample_every, const RunLabels& labels) {
  validate(ControlLaw{law});
  if (!(sample_every > 0.0)) {
    throw std::invalid_argument("sample_every must be > 0");
  }
  Trajectory traj;
  traj.meta.model = labels.model;
  traj.meta.paradigm = labels.paradigm;
  traj.meta.law = law;
  traj.meta.integrator.t_max = law.t0;
  traj.meta.integrator.sample_every = sample_every;
  traj.meta.basis = h.basis;
  traj.meta.reduced = h.reduced();

  const EigenDecomposition on = eigh(total_hamiltonian(h));
  const EigenDecomposition drift = eigh(h.h0);
  auto propagate = [](const EigenDecomposition& e, const CMatrix& rho, double t) {
    const CVector phases =
        (-kI * t * e.values.cast<Complex>()).array().exp().matrix();
    const CMatrix u = e.vectors * phases.asDiagonal() * e.vectors.adjoint();
    return conjugate(u, rho);
  };

  const std::vector<double> times =
      law.t0 > 0.0 ? sample_times(law.t0, sample_every) : std::vector<double>{0.0};
  const InvariantMonitor monitor({}, rho0.purity(), rho_d0.purity());
  for (const double t : times) {
    const CMatrix rho = propagate(on, rho0.mat(), t);
    const CMatrix rho_d = propagate(drift, rho_d0.mat(), t);
    Sample s = make_sample(h, t, rho, rho_d, geometric_field(t, law));
    monitor.check(s, traj.meta.invariants);
    traj.samples.push_back(std::move(s));
  }
  finish_metadata(traj, h);
  return traj;
}

}  // namespace lyapent
