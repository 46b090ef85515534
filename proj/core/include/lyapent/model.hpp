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

// Two-atom Hamiltonians and their representations in the computational
// (Z-product), X-product and Bell bases.

#pragma once

#include "lyapent/quantum_core.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace lyapent {

/// Physical constants with hbar = 1. The local field is B = eta * J; k scales
/// the local coupling on the second atom.
struct ModelParams {
  double J = 1.0;
  double eta = 0.1;
  double k = 1.0;

  /// Throws std::invalid_argument unless J > 0 and eta > 0.
  void validate() const;
  /// The effective coupling is only physical for eta well below one.
  bool weak_field_warning() const noexcept { return eta >= 1.0; }
  double local_field() const noexcept { return eta * J; }
};

enum class BasisTag { ZProduct, XProduct, Bell };

std::string_view to_string(BasisTag tag);
/// Accepts "Z"/"zproduct", "X"/"xproduct", "Bell". Throws std::invalid_argument.
BasisTag parse_basis_tag(std::string_view text);

/// Orderings:
///   ZProduct  {|00>, |01>, |10>, |11>}
///   XProduct  {|++>, |+->, |-+>, |-->},  |+-> = (|0> +- |1>)/sqrt2
///   Bell      {Psi+, Phi+, Phi-, Psi-}   (Bell states defined over the X basis)
class Basis {
 public:
  static const Basis& get(BasisTag tag);

  BasisTag tag() const noexcept { return tag_; }
  /// Unitary T with v_this = T v_zproduct.
  const CMatrix& transform() const noexcept { return transform_; }

  /// Operator / density matrix given in Z-product coordinates -> this basis.
  CMatrix from_zproduct(const CMatrix& op) const;
  CMatrix to_zproduct(const CMatrix& op) const;
  CVector from_zproduct(const CVector& v) const;

 private:
  Basis(BasisTag tag, CMatrix transform);
  BasisTag tag_;
  CMatrix transform_;
};

/// Change coordinates of an operator between two bases.
CMatrix change_basis(const CMatrix& op, BasisTag from, BasisTag to);

enum class Paradigm { LocalControl, InteractionControl };

std::string_view to_string(Paradigm p);
Paradigm parse_paradigm(std::string_view text);

/// Drift h0 and control h1 in the coordinates of `basis`.
///
/// `to_zproduct` is the isometry mapping these coordinates into Z-product
/// coordinates of the full two-qubit space: the basis transform's adjoint for
/// 4x4 pairs, and that composed with the subspace embedding for reduced 2x2
/// pairs.
struct HamiltonianPair {
  CMatrix h0;
  CMatrix h1;
  BasisTag basis = BasisTag::ZProduct;
  CMatrix to_zproduct;

  Eigen::Index dim() const noexcept { return h0.rows(); }
  bool reduced() const noexcept { return h0.rows() == 2; }
  /// Map a state in these coordinates to the 4x4 Z-product density matrix.
  CMatrix embed(const CMatrix& rho) const;
};

/// eta J (X (x) I + k I (x) X), Z-product coordinates.
CMatrix h_local(const ModelParams& p);
/// 2 J Z (x) Z, Z-product coordinates.
CMatrix h_eff(const ModelParams& p);

/// LocalControl: (h0, h1) = (H_eff, H_local).
/// InteractionControl: (h0, h1) = (H_local with k = 1, H_eff).
HamiltonianPair hamiltonians(const ModelParams& p, Paradigm paradigm,
                             BasisTag basis);

/// The sum h0 + h1 that the open-loop (constant field) scheme switches on.
CMatrix total_hamiltonian(const HamiltonianPair& h);

enum class BellState { PsiPlus, PhiPlus, PhiMinus, PsiMinus };

std::string_view to_string(BellState s);
StateVector bell_state(BellState which, BasisTag basis);

/// Product state of two single-qubit X or Z eigenstates, e.g. "++", "01", "-+".
/// Throws std::invalid_argument for other labels.
StateVector product_state(std::string_view label, BasisTag basis);

/// 4x2 isometry whose columns span S = span{|++>, |-->} in `basis`
/// coordinates. Bell coordinates use (Phi+, Phi-); the others (|++>, |-->).
CMatrix subspace_isometry(BasisTag basis);

/// Projector onto S in `basis` coordinates.
CMatrix subspace_projector(BasisTag basis);

/// Largest HS norm of the blocks of h0, h1 coupling S to its complement.
double subspace_leakage(const HamiltonianPair& h);

/// Restriction of a 4x4 pair to S. Throws InvariantError when S is not
/// invariant under both h0 and h1 (leakage above 1e-12).
HamiltonianPair subspace_reduce(const HamiltonianPair& h);

/// Restrict a 4x4 state supported on S to the reduced coordinates.
CMatrix restrict_to_subspace(const CMatrix& rho, BasisTag basis);

/// (p_S, p_S_perp) for rho given in `basis` coordinates.
std::pair<double, double> subspace_populations(const CMatrix& rho,
                                               BasisTag basis);

}  // namespace lyapent
