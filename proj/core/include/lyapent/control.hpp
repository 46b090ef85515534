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

// Feedback laws: the Hilbert-Schmidt Lyapunov function, the descent-enforcing
// control field, its a-priori bound, and the open-loop switching field.

#pragma once

#include "lyapent/model.hpp"
#include "lyapent/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

namespace lyapent {

/// f = sign * kappa * Tr(rho_d [-i H1, rho]).
struct LyapunovLaw {
  double kappa = 1.0;
  int sign = +1;
};

/// Constant field: f = 1 on [0, t0), 0 afterwards.
struct GeometricLaw {
  double t0 = 0.0;
};

/// f = 0.
struct FreeEvolution {};

using ControlLaw = std::variant<FreeEvolution, LyapunovLaw, GeometricLaw>;

/// Throws std::invalid_argument unless kappa > 0, sign is +-1 and t0 >= 0.
void validate(const ControlLaw& law);
std::string describe(const ControlLaw& law);

/// V = 1/2 Tr[(rho - rho_d)^2].
double lyapunov_value(const CMatrix& rho, const CMatrix& rho_d);

/// Tr(rho_d [-i H1, rho]). Real for Hermitian arguments; an imaginary part
/// above 1e-10 (relative to ||H1||) raises InvariantError instead of being
/// dropped silently.
double feedback_trace(const CMatrix& rho, const CMatrix& rho_d,
                      const CMatrix& h1);

double control_field(const CMatrix& rho, const CMatrix& rho_d,
                     const CMatrix& h1, double kappa, int sign = +1);

inline double control_field(const CMatrix& rho, const CMatrix& rho_d,
                            const CMatrix& h1, const LyapunovLaw& law) {
  return control_field(rho, rho_d, h1, law.kappa, law.sign);
}

/// dV/dt along the closed loop, three ways.
///
///   descent   = -f Tr(rho_d [-i H1, rho])   (exact time derivative)
///   analytic  = -kappa f^2                  (coincides with descent only for kappa = 1)
///   numeric   = central finite difference of V along the closed-loop flow
struct VdotCheck {
  double analytic = 0.0;
  double descent = 0.0;
  double numeric = 0.0;

  static double tolerance(double reference) {
    return std::max(1e-6, 1e-3 * std::abs(reference));
  }
  bool analytic_agrees() const {
    return std::abs(analytic - numeric) <= tolerance(analytic);
  }
  bool descent_agrees() const {
    return std::abs(descent - numeric) <= tolerance(descent);
  }
};

/// `step` is the half-width of the central difference; each half is
/// integrated with four classical RK4 substeps.
VdotCheck vdot_identity_check(const CMatrix& rho, const CMatrix& rho_d,
                              const HamiltonianPair& h, const LyapunovLaw& law,
                              double step = 1e-3);

/// kappa ||i[rho, rho_d]||_HS ||H1||_HS >= |f|.
double f_bound(const CMatrix& rho, const CMatrix& rho_d, const CMatrix& h1,
               double kappa);

/// 1 for t < t0, 0 for t >= t0.
double geometric_field(double t, const GeometricLaw& law);

}  // namespace lyapent
