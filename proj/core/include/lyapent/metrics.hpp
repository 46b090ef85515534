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

// Entanglement and convergence diagnostics.

#pragma once

#include "lyapent/dynamics.hpp"
#include "lyapent/quantum_core.hpp"

#include <optional>
#include <span>
#include <utility>

namespace lyapent {

/// Wootters concurrence of a two-qubit state given in Z-product coordinates.
/// Throws DimensionError unless rho is 4x4.
double concurrence(const CMatrix& rho_z);

/// Tr(rho target) for a pure target. Throws InvariantError if the target is
/// not rank one (purity below 1 - 1e-9).
double fidelity_to(const CMatrix& rho, const CMatrix& target);

/// Distance to the family of maximally entangled states
///   M(alpha) = 1/2 (|++><++| + |--><--| + e^{-i alpha}|++><--| + e^{i alpha}|--><++|)
/// in X-product coordinates.
struct LaSalleDistance {
  double dist = 0.0;
  std::optional<double> alpha;  // empty when rho(4,1) == 0
};

LaSalleDistance lasalle_distance(const CMatrix& rho_x);

/// Member M(alpha) of the family above.
CMatrix lasalle_member(double alpha);

/// Least-squares line through (t, ln y).
struct ExponentialFit {
  double rate = 0.0;  // -slope
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Fits only points with t in [t_lo, t_hi] and y > floor. Throws
/// std::invalid_argument with fewer than `min_points` usable points.
ExponentialFit fit_exponential(std::span<const double> t,
                               std::span<const double> y, double t_lo,
                               double t_hi, double floor = 1e-12,
                               std::size_t min_points = 10);

/// Window over which a decaying series drops from `upper` * y(0) to
/// max(floor, `lower` * y(0)), i.e. the stretch between the initial transient
/// and the noise floor. Returns nullopt if the series never reaches the upper
/// level.
std::optional<std::pair<double, double>> decay_window(
    std::span<const double> t, std::span<const double> y, double upper = 1e-1,
    double lower = 1e-8, double floor = 1e-10);

struct ConvergenceReport {
  double rate = 0.0;  // V ~ V0 exp(-rate t)
  double fit_quality = 0.0;
  double v_final = 0.0;
  bool stalled = false;
};

/// Fit ln V over [t_lo, t_hi], skipping samples with V <= 1e-12.
ConvergenceReport convergence_report(const Trajectory& traj, double t_lo,
                                     double t_hi);

/// Same, over decay_window() of V.
std::optional<ConvergenceReport> convergence_report(const Trajectory& traj);

struct PeakReport {
  std::optional<double> t_first;  // first crossing of the threshold
  double c_max = 0.0;
  double t_max = 0.0;  // time of c_max
  double fluctuation_amplitude = 0.0;
};

/// `window` is the full width centered on the global maximum of C.
/// The amplitude is max - min over the interior local extrema of C inside the
/// window; with fewer than two extrema (monotone stretch) it falls back to
/// the window's max - min.
PeakReport peak_report(const Trajectory& traj, double threshold = 0.99,
                       double window = 10.0);

/// Same analysis over a bare (t, C) series.
PeakReport peak_report(std::span<const double> t, std::span<const double> c,
                       double threshold = 0.99, double window = 10.0);

}  // namespace lyapent
