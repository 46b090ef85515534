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

#include "lyapent/quantum_core.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

namespace lyapent {

namespace {

constexpr double kEighHermiticityTol = 1e-10;

void require_square(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << a.rows()
        << "x" << a.cols();
    throw DimensionError(msg.str());
  }
}

}  // namespace

CMatrix pauli(Pauli which) {
  CMatrix m(2, 2);
  switch (which) {
    case Pauli::I:
      m << 1.0, 0.0, 0.0, 1.0;
      break;
    case Pauli::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Pauli::Y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case Pauli::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_square(a, "commutator");
  require_square(b, "commutator");
  if (a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << "commutator: dimension mismatch (" << a.rows() << " vs " << b.rows()
        << ")";
    throw DimensionError(msg.str());
  }
  return a * b - b * a;
}

CMatrix dagger(const CMatrix& a) { return a.adjoint(); }

double hs_norm(const CMatrix& a) { return a.norm(); }

double hermiticity_error(const CMatrix& a) { return (a - a.adjoint()).norm(); }

CMatrix expm(const CMatrix& a) {
  require_square(a, "expm");
  // a = -iH with H Hermitian  <=>  a + a^dagger = 0.
  const double scale = std::max(1.0, a.norm());
  if ((a + a.adjoint()).norm() <= 1e-14 * scale) {
    const CMatrix generator = kI * a;
    const CMatrix hermitian = 0.5 * (generator + generator.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
    const CVector phases =
        (-kI * solver.eigenvalues().cast<Complex>()).array().exp().matrix();
    return solver.eigenvectors() * phases.asDiagonal() *
           solver.eigenvectors().adjoint();
  }
  return a.exp();
}

EigenDecomposition eigh(const CMatrix& a) {
  require_square(a, "eigh");
  const double herm = hermiticity_error(a);
  if (herm > kEighHermiticityTol) {
    std::ostringstream msg;
    msg << "eigh: input is not Hermitian (||a - a^dagger|| = " << herm << ")";
    throw InvariantError(msg.str());
  }
  const CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigendecomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

StateVector::StateVector(CVector amplitudes, const StateTolerances& tol)
    : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) {
    throw DimensionError("StateVector: empty amplitude vector");
  }
  const double err = std::abs(amps_.norm() - 1.0);
  if (err > tol.norm) {
    std::ostringstream msg;
    msg << "StateVector: amplitudes not normalized (| ||psi|| - 1 | = " << err
        << ")";
    throw InvariantError(msg.str());
  }
}

DensityMatrix::DensityMatrix(CMatrix mat, const StateTolerances& tol)
    : mat_(std::move(mat)) {
  require_square(mat_, "DensityMatrix");
  std::ostringstream msg;
  if (const double h = hermiticity_error(mat_); h > tol.hermiticity) {
    msg << "DensityMatrix: not Hermitian (||rho - rho^dagger|| = " << h << ")";
    throw InvariantError(msg.str());
  }
  if (const double t = trace_error(mat_); t > tol.trace) {
    msg << "DensityMatrix: trace is not one (|Tr rho - 1| = " << t << ")";
    throw InvariantError(msg.str());
  }
  if (const double lmin = min_eigenvalue(mat_); lmin < tol.min_eigenvalue) {
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue " << lmin
        << ")";
    throw InvariantError(msg.str());
  }
}

double DensityMatrix::purity() const { return lyapent::purity(mat_); }

DensityMatrix outer(const StateVector& v) {
  const CVector& a = v.amplitudes();
  // Exact Hermitian symmetrization keeps the projector within tolerance.
  CMatrix p = a * a.adjoint();
  p = 0.5 * (p + p.adjoint()).eval();
  return DensityMatrix(std::move(p));
}

DensityMatrix maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double trace_error(const CMatrix& rho) { return std::abs(rho.trace() - 1.0); }

double purity(const CMatrix& rho) { return (rho * rho).trace().real(); }

double min_eigenvalue(const CMatrix& rho) {
  const CMatrix sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

CMatrix conjugate(const CMatrix& u, const CMatrix& rho) {
  return u * rho * u.adjoint();
}

}  // namespace lyapent
