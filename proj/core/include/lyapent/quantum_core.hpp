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

// Dense complex linear algebra and quantum-state primitives.
//
// Operators are small (2x2 and 4x4 on the hot path) dense complex matrices
// backed by Eigen. Density matrices and state vectors are validated value
// types; everything else works on plain CMatrix.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace lyapent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Raised when two operands have incompatible shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value violates a physical invariant (Hermiticity, trace,
/// positivity, normalization).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Pauli { I, X, Y, Z };

/// Pauli matrix in the Z eigenbasis {|0>, |1>}.
CMatrix pauli(Pauli which);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// ab - ba. Throws DimensionError on mismatched shapes.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

CMatrix dagger(const CMatrix& a);

/// Hilbert-Schmidt (Frobenius) norm sqrt(Tr(a^dagger a)).
double hs_norm(const CMatrix& a);

/// ||a - a^dagger||_HS.
double hermiticity_error(const CMatrix& a);

/// Matrix exponential.
///
/// Anti-Hermitian inputs (the -iHt propagators used throughout) go through
/// the spectral decomposition of the Hermitian generator, which keeps the
/// result unitary to roundoff for large t. General inputs use Pade
/// scaling-and-squaring.
CMatrix expm(const CMatrix& a);

struct EigenDecomposition {
  RVector values;   // ascending
  CMatrix vectors;  // columns are eigenvectors; unitary
};

/// Spectral decomposition of a Hermitian matrix. Throws InvariantError when
/// ||a - a^dagger|| exceeds 1e-10.
EigenDecomposition eigh(const CMatrix& a);

/// Tolerances used to validate states.
struct StateTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double min_eigenvalue = -1e-10;
  double norm = 1e-12;
};

/// Unit-norm pure state.
class StateVector {
 public:
  /// Throws InvariantError if | ||amps|| - 1 | > tol.norm.
  explicit StateVector(CVector amplitudes, const StateTolerances& tol = {});

  const CVector& amplitudes() const noexcept { return amps_; }
  Eigen::Index dim() const noexcept { return amps_.size(); }

 private:
  CVector amps_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Throws InvariantError naming the violated invariant.
  explicit DensityMatrix(CMatrix mat, const StateTolerances& tol = {});

  const CMatrix& mat() const noexcept { return mat_; }
  Eigen::Index dim() const noexcept { return mat_.rows(); }
  double purity() const;

 private:
  CMatrix mat_;
};

/// Rank-one projector |v><v|.
DensityMatrix outer(const StateVector& v);

/// Maximally mixed state I/dim.
DensityMatrix maximally_mixed(Eigen::Index dim);

// Quantities used by invariant monitoring.
double trace_error(const CMatrix& rho);
double purity(const CMatrix& rho);
double min_eigenvalue(const CMatrix& rho);

/// U rho U^dagger.
CMatrix conjugate(const CMatrix& u, const CMatrix& rho);

}  // namespace lyapent
