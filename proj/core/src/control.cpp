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

#include "lyapent/control.hpp"

#include "lyapent/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace lyapent {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kImagTol = 1e-10;

struct PairState {
  CMatrix rho;
  CMatrix rho_d;
};

PairState closed_loop(const HamiltonianPair& h, const LyapunovLaw& law,
                      const PairState& y) {
  const double f = control_field(y.rho, y.rho_d, h.h1, law);
  Derivative d = rhs(h, f, y.rho, y.rho_d);
  return {std::move(d.drho), std::move(d.drho_d)};
}

PairState rk4_flow(const HamiltonianPair& h, const LyapunovLaw& law,
                   PairState y, double duration, int substeps) {
  const double dt = duration / substeps;
  for (int i = 0; i < substeps; ++i) {
    const PairState k1 = closed_loop(h, law, y);
    const PairState k2 = closed_loop(
        h, law, {y.rho + 0.5 * dt * k1.rho, y.rho_d + 0.5 * dt * k1.rho_d});
    const PairState k3 = closed_loop(
        h, law, {y.rho + 0.5 * dt * k2.rho, y.rho_d + 0.5 * dt * k2.rho_d});
    const PairState k4 =
        closed_loop(h, law, {y.rho + dt * k3.rho, y.rho_d + dt * k3.rho_d});
    y.rho += dt / 6.0 * (k1.rho + 2.0 * k2.rho + 2.0 * k3.rho + k4.rho);
    y.rho_d +=
        dt / 6.0 * (k1.rho_d + 2.0 * k2.rho_d + 2.0 * k3.rho_d + k4.rho_d);
  }
  return y;
}

}  // namespace

void validate(const ControlLaw& law) {
  std::visit(Overloaded{
                 [](const FreeEvolution&) {},
                 [](const LyapunovLaw& l) {
                   if (!(l.kappa > 0.0) || !std::isfinite(l.kappa)) {
                     throw std::invalid_argument("law.kappa must be positive");
                   }
                   if (l.sign != 1 && l.sign != -1) {
                     throw std::invalid_argument("law.sign must be +1 or -1");
                   }
                 },
                 [](const GeometricLaw& g) {
                   if (!(g.t0 >= 0.0) || !std::isfinite(g.t0)) {
                     throw std::invalid_argument("law.t0 must be >= 0");
                   }
                 },
             },
             law);
}

std::string describe(const ControlLaw& law) {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const FreeEvolution&) { out << "none"; },
                 [&](const LyapunovLaw& l) {
                   out << "lyapunov(kappa=" << l.kappa << ", sign=" << l.sign
                       << ")";
                 },
                 [&](const GeometricLaw& g) {
                   out << "geometric(t0=" << g.t0 << ")";
                 },
             },
             law);
  return out.str();
}

double lyapunov_value(const CMatrix& rho, const CMatrix& rho_d) {
  if (rho.rows() != rho_d.rows()) {
    throw DimensionError("lyapunov_value: dimension mismatch");
  }
  const CMatrix diff = rho - rho_d;
  return 0.5 * (diff * diff).trace().real();
}

double feedback_trace(const CMatrix& rho, const CMatrix& rho_d,
                      const CMatrix& h1) {
  const CMatrix c = -kI * commutator(h1, rho);
  const Complex tr = (rho_d * c).trace();
  if (std::abs(tr.imag()) > kImagTol * std::max(1.0, h1.norm())) {
    std::ostringstream msg;
    msg << "feedback_trace: Tr(rho_d [-iH1, rho]) has imaginary part "
        << tr.imag() << "; check that H1, rho and rho_d are Hermitian";
    throw InvariantError(msg.str());
  }
  return tr.real();
}

double control_field(const CMatrix& rho, const CMatrix& rho_d,
                     const CMatrix& h1, double kappa, int sign) {
  return static_cast<double>(sign) * kappa * feedback_trace(rho, rho_d, h1);
}

VdotCheck vdot_identity_check(const CMatrix& rho, const CMatrix& rho_d,
                              const HamiltonianPair& h, const LyapunovLaw& law,
                              double step) {
  const double tr = feedback_trace(rho, rho_d, h.h1);
  const double f = static_cast<double>(law.sign) * law.kappa * tr;

  const PairState fwd = rk4_flow(h, law, {rho, rho_d}, step, 4);
  const PairState bwd = rk4_flow(h, law, {rho, rho_d}, -step, 4);
  const double numeric =
      (lyapunov_value(fwd.rho, fwd.rho_d) - lyapunov_value(bwd.rho, bwd.rho_d)) /
      (2.0 * step);

  return {-law.kappa * f * f, -f * tr, numeric};
}

double f_bound(const CMatrix& rho, const CMatrix& rho_d, const CMatrix& h1,
               double kappa) {
  return kappa * (kI * commutator(rho, rho_d)).norm() * h1.norm();
}

double geometric_field(double t, const GeometricLaw& law) {
  return t < law.t0 ? 1.0 : 0.0;
}

}  // namespace lyapent
