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

// Coupled Liouville dynamics for the controlled state and its freely drifting
// target, integrated as one autonomous closed-loop ODE.

#pragma once

#include "lyapent/control.hpp"
#include "lyapent/model.hpp"
#include "lyapent/quantum_core.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lyapent {

/// Times are in units of 1/J.
struct IntegratorConfig {
  double dt = 0.01;  // initial step
  double t_max = 300.0;
  double rel_tol = 1e-9;
  double abs_tol = 1e-11;
  double sample_every = 0.1;
  std::optional<double> v_stop;  // stop once V < v_stop
  double min_step = 1e-12;

  void validate() const;
};

/// Per-sample invariant limits. Exceeding ten times any of them aborts.
struct InvariantLimits {
  double trace = 1e-9;
  double hermiticity = 1e-9;
  double purity_drift = 1e-6;
  double min_eigenvalue = -1e-8;
};

struct Derivative {
  CMatrix drho;
  CMatrix drho_d;
};

/// drho = -i[H0 + f H1, rho],  drho_d = -i[H0, rho_d].
Derivative rhs(const HamiltonianPair& h, double f, const CMatrix& rho,
               const CMatrix& rho_d);

struct Sample {
  double t = 0.0;
  CMatrix rho;
  CMatrix rho_d;
  double f = 0.0;
  double V = 0.0;
  double concurrence = 0.0;
  double fidelity = 0.0;
  double p_S = 0.0;
  double purity = 0.0;
};

/// Worst values seen over all samples of a run.
struct InvariantReport {
  double max_trace_error = 0.0;
  double max_hermiticity_error = 0.0;
  double max_purity_drift = 0.0;
  double min_eigenvalue = 1.0;
  double min_p_S = 1.0;
  double max_p_S = 0.0;
};

/// Labels carried into the trajectory metadata; they do not affect dynamics.
struct RunLabels {
  ModelParams model;
  Paradigm paradigm = Paradigm::LocalControl;
};

struct TrajectoryMetadata {
  ModelParams model;
  Paradigm paradigm = Paradigm::LocalControl;
  ControlLaw law;
  IntegratorConfig integrator;
  BasisTag basis = BasisTag::ZProduct;
  bool reduced = false;
  /// Lyapunov run that made no progress: f stayed zero while rho != rho_d.
  bool stalled = false;
  bool early_stopped = false;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  /// max over samples of |f| ||H1|| / ||H0||.
  double max_field_ratio = 0.0;
  InvariantReport invariants;
};

struct Trajectory {
  std::vector<Sample> samples;  // strictly increasing t
  TrajectoryMetadata meta;

  const Sample& front() const { return samples.front(); }
  const Sample& back() const { return samples.back(); }
};

/// Step-size underflow or an invariant violated by more than ten times its
/// limit. `diagnostic()` carries the time and the offending quantity.
class IntegratorError : public std::runtime_error {
 public:
  IntegratorError(const std::string& what, double t)
      : std::runtime_error(what), t_(t) {}
  double time() const noexcept { return t_; }

 private:
  double t_;
};

/// Evaluate all per-sample diagnostics for a state pair.
Sample make_sample(const HamiltonianPair& h, double t, const CMatrix& rho,
                   const CMatrix& rho_d, double f);

/// Adaptive Dormand-Prince 5(4) integration of the closed loop.
///
/// The Lyapunov field is evaluated from the stage values of (rho, rho_d)
/// inside every Runge-Kutta stage. A geometric law is piecewise constant with
/// a breakpoint at t0. States are never renormalized; invariants are checked
/// at each sample against `limits`.
Trajectory integrate(const HamiltonianPair& h, const ControlLaw& law,
                     const DensityMatrix& rho0, const DensityMatrix& rho_d0,
                     const IntegratorConfig& cfg, const RunLabels& labels = {},
                     const InvariantLimits& limits = {});

/// rho(t) = U rho0 U^dagger with U = exp(-i h_tot t).
DensityMatrix geometric_evolve(const CMatrix& h_tot, const DensityMatrix& rho0,
                               double t);

/// Exact open-loop run: H0 + H1 switched on over [0, t0], sampled every
/// `sample_every` plus at t0. The target drifts under H0.
Trajectory geometric_trajectory(const HamiltonianPair& h,
                                const GeometricLaw& law,
                                const DensityMatrix& rho0,
                                const DensityMatrix& rho_d0,
                                double sample_every,
                                const RunLabels& labels = {});

/// Output grid 0, dt, 2 dt, ... below t_end, then t_end itself.
std::vector<double> sample_times(double t_end, double sample_every);

}  // namespace lyapent
