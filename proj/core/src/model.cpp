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

#include "lyapent/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

namespace lyapent {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLeakageTol = 1e-12;

CMatrix hadamard_pair() {
  CMatrix h(2, 2);
  h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return kron(h, h);
}

// Columns: Psi+, Phi+, Phi-, Psi- in X-product coordinates.
CMatrix bell_columns_in_x() {
  CMatrix w = CMatrix::Zero(4, 4);
  w(1, 0) = kInvSqrt2;
  w(2, 0) = kInvSqrt2;
  w(0, 1) = kInvSqrt2;
  w(3, 1) = kInvSqrt2;
  w(0, 2) = kInvSqrt2;
  w(3, 2) = -kInvSqrt2;
  w(1, 3) = kInvSqrt2;
  w(2, 3) = -kInvSqrt2;
  return w;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

void ModelParams::validate() const {
  if (!(J > 0.0) || !std::isfinite(J)) {
    throw std::invalid_argument("model.J must be a positive number");
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("model.eta must be a positive number");
  }
  if (!std::isfinite(k)) {
    throw std::invalid_argument("model.k must be finite");
  }
}

std::string_view to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::ZProduct:
      return "zproduct";
    case BasisTag::XProduct:
      return "xproduct";
    case BasisTag::Bell:
      return "bell";
  }
  return "?";
}

BasisTag parse_basis_tag(std::string_view text) {
  const std::string t = lower(text);
  if (t == "z" || t == "zproduct") return BasisTag::ZProduct;
  if (t == "x" || t == "xproduct") return BasisTag::XProduct;
  if (t == "bell") return BasisTag::Bell;
  throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

Basis::Basis(BasisTag tag, CMatrix transform)
    : tag_(tag), transform_(std::move(transform)) {}

const Basis& Basis::get(BasisTag tag) {
  static const Basis z(BasisTag::ZProduct, CMatrix::Identity(4, 4));
  static const Basis x(BasisTag::XProduct, hadamard_pair());
  static const Basis bell(BasisTag::Bell,
                          bell_columns_in_x().adjoint() * hadamard_pair());
  switch (tag) {
    case BasisTag::ZProduct:
      return z;
    case BasisTag::XProduct:
      return x;
    case BasisTag::Bell:
      return bell;
  }
  return z;
}

CMatrix Basis::from_zproduct(const CMatrix& op) const {
  return transform_ * op * transform_.adjoint();
}

CMatrix Basis::to_zproduct(const CMatrix& op) const {
  return transform_.adjoint() * op * transform_;
}

CVector Basis::from_zproduct(const CVector& v) const { return transform_ * v; }

CMatrix change_basis(const CMatrix& op, BasisTag from, BasisTag to) {
  if (from == to) return op;
  return Basis::get(to).from_zproduct(Basis::get(from).to_zproduct(op));
}

std::string_view to_string(Paradigm p) {
  return p == Paradigm::LocalControl ? "local" : "interaction";
}

Paradigm parse_paradigm(std::string_view text) {
  const std::string t = lower(text);
  if (t == "local" || t == "localcontrol") return Paradigm::LocalControl;
  if (t == "interaction" || t == "interactioncontrol") {
    return Paradigm::InteractionControl;
  }
  throw std::invalid_argument("unknown paradigm '" + std::string(text) + "'");
}

CMatrix HamiltonianPair::embed(const CMatrix& rho) const {
  return to_zproduct * rho * to_zproduct.adjoint();
}

CMatrix h_local(const ModelParams& p) {
  const CMatrix x = pauli(Pauli::X);
  const CMatrix id = pauli(Pauli::I);
  return p.eta * p.J * (kron(x, id) + p.k * kron(id, x));
}

CMatrix h_eff(const ModelParams& p) {
  const CMatrix z = pauli(Pauli::Z);
  return 2.0 * p.J * kron(z, z);
}

HamiltonianPair hamiltonians(const ModelParams& p, Paradigm paradigm,
                             BasisTag basis) {
  CMatrix h0;
  CMatrix h1;
  if (paradigm == Paradigm::LocalControl) {
    h0 = h_eff(p);
    h1 = h_local(p);
  } else {
    ModelParams symmetric = p;
    symmetric.k = 1.0;
    h0 = h_local(symmetric);
    h1 = h_eff(p);
  }
  const Basis& b = Basis::get(basis);
  return {b.from_zproduct(h0), b.from_zproduct(h1), basis,
          b.transform().adjoint()};
}

CMatrix total_hamiltonian(const HamiltonianPair& h) { return h.h0 + h.h1; }

std::string_view to_string(BellState s) {
  switch (s) {
    case BellState::PsiPlus:
      return "PsiPlus";
    case BellState::PhiPlus:
      return "PhiPlus";
    case BellState::PhiMinus:
      return "PhiMinus";
    case BellState::PsiMinus:
      return "PsiMinus";
  }
  return "?";
}

StateVector bell_state(BellState which, BasisTag basis) {
  const CVector in_x = bell_columns_in_x().col(static_cast<Eigen::Index>(which));
  const CVector in_z = Basis::get(BasisTag::XProduct).transform().adjoint() * in_x;
  return StateVector(Basis::get(basis).from_zproduct(in_z));
}

StateVector product_state(std::string_view label, BasisTag basis) {
  static constexpr std::array<std::string_view, 4> kZLabels{"00", "01", "10",
                                                            "11"};
  static constexpr std::array<std::string_view, 4> kXLabels{"++", "+-", "-+",
                                                            "--"};
  for (Eigen::Index i = 0; i < 4; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (label == kZLabels[idx] || label == kXLabels[idx]) {
      CVector e = CVector::Zero(4);
      e(i) = 1.0;
      const BasisTag native =
          label == kZLabels[idx] ? BasisTag::ZProduct : BasisTag::XProduct;
      const CVector in_z = Basis::get(native).transform().adjoint() * e;
      return StateVector(Basis::get(basis).from_zproduct(in_z));
    }
  }
  throw std::invalid_argument("unknown product state '|" + std::string(label) +
                              ">'");
}

CMatrix subspace_isometry(BasisTag basis) {
  CMatrix p = CMatrix::Zero(4, 2);
  switch (basis) {
    case BasisTag::Bell:
      p(1, 0) = 1.0;
      p(2, 1) = 1.0;
      return p;
    case BasisTag::XProduct:
      p(0, 0) = 1.0;
      p(3, 1) = 1.0;
      return p;
    case BasisTag::ZProduct:
      return Basis::get(BasisTag::XProduct).transform().adjoint() *
             subspace_isometry(BasisTag::XProduct);
  }
  return p;
}

CMatrix subspace_projector(BasisTag basis) {
  const CMatrix p = subspace_isometry(basis);
  return p * p.adjoint();
}

double subspace_leakage(const HamiltonianPair& h) {
  if (h.dim() != 4) {
    throw DimensionError("subspace_leakage: expected a 4x4 Hamiltonian pair");
  }
  const CMatrix p = subspace_isometry(h.basis);
  const CMatrix complement = CMatrix::Identity(4, 4) - p * p.adjoint();
  return std::max((complement * h.h0 * p).norm(), (complement * h.h1 * p).norm());
}

HamiltonianPair subspace_reduce(const HamiltonianPair& h) {
  const double leak = subspace_leakage(h);
  if (leak > kLeakageTol) {
    std::ostringstream msg;
    msg << "subspace_reduce: span{|++>, |-->} is not invariant (off-block norm "
        << leak << ")";
    throw InvariantError(msg.str());
  }
  const CMatrix p = subspace_isometry(h.basis);
  return {p.adjoint() * h.h0 * p, p.adjoint() * h.h1 * p, h.basis,
          h.to_zproduct * p};
}

CMatrix restrict_to_subspace(const CMatrix& rho, BasisTag basis) {
  const CMatrix p = subspace_isometry(basis);
  return p.adjoint() * rho * p;
}

std::pair<double, double> subspace_populations(const CMatrix& rho,
                                               BasisTag basis) {
  const double in_s = (subspace_projector(basis) * rho).trace().real();
  return {in_s, rho.trace().real() - in_s};
}

}  // namespace lyapent
