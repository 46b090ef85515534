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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lyapent/metrics.hpp"
#include "lyapent/model.hpp"
#include "test_util.hpp"

namespace lyapent {
namespace {

using testing::max_abs;

// Textbook Wootters: square roots of the eigenvalues of rho * rho_tilde.
double wootters_oracle(const CMatrix& rho) {
  const CMatrix yy = kron(pauli(Pauli::Y), pauli(Pauli::Y));
  const CMatrix tilde = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<CMatrix> es(rho * tilde);
  std::vector<double> l;
  for (Eigen::Index i = 0; i < 4; ++i) {
    l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
  }
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

CMatrix pure_z(const CVector& v) { return v * v.adjoint(); }

TEST(Concurrence, Examples) {
  EXPECT_NEAR(concurrence(outer(product_state("++", BasisTag::ZProduct)).mat()), 0.0, 1e-7);
  EXPECT_NEAR(concurrence(outer(product_state("00", BasisTag::ZProduct)).mat()), 0.0, 1e-7);
  for (const BellState b : {BellState::PhiPlus, BellState::PhiMinus,
                            BellState::PsiPlus, BellState::PsiMinus}) {
    EXPECT_NEAR(concurrence(outer(bell_state(b, BasisTag::ZProduct)).mat()), 1.0, 1e-12);
  }
  const CVector psi = std::sqrt(0.9) * product_state("++", BasisTag::ZProduct).amplitudes() +
                      std::sqrt(0.1) * product_state("--", BasisTag::ZProduct).amplitudes();
  EXPECT_NEAR(concurrence(pure_z(psi)), 0.6, 1e-12);
  EXPECT_NEAR(concurrence(maximally_mixed(4).mat()), 0.0, 1e-12);
}

TEST(Concurrence, RejectsWrongDimension) {
  EXPECT_THROW(concurrence(CMatrix::Identity(2, 2) / 2.0), DimensionError);
}

TEST(Concurrence, MatchesPureStateFormula) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const CVector v = testing::random_pure(rng, 4);
    const double expected = 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
    EXPECT_NEAR(concurrence(pure_z(v)), expected, 1e-7);
  }
}

TEST(Concurrence, MatchesTextbookFormulaOnMixedStates) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    // Mix toward a Bell state so entangled mixed states are common.
    const CMatrix bell = outer(bell_state(BellState::PhiPlus, BasisTag::ZProduct)).mat();
    const double w = std::uniform_real_distribution<>(0.0, 1.0)(rng);
    const CMatrix rho = w * bell + (1 - w) * testing::random_density(rng, 4);
    EXPECT_NEAR(concurrence(rho), wootters_oracle(rho), 1e-8);
  }
}

TEST(Concurrence, LocalUnitaryInvariance) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix rho = trial % 2 ? testing::random_density(rng, 4)
                                  : testing::random_pure_density(rng, 4);
    const CMatrix u = kron(testing::random_unitary(rng, 2), testing::random_unitary(rng, 2));
    EXPECT_NEAR(concurrence(u * rho * u.adjoint()), concurrence(rho), 1e-7);
  }
}

TEST(Concurrence, BoundedInUnitInterval) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const double c = concurrence(testing::random_density(rng, 4));
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
  }
}

TEST(Fidelity, Examples) {
  const CMatrix phi = outer(bell_state(BellState::PhiPlus, BasisTag::ZProduct)).mat();
  const CMatrix psi = outer(bell_state(BellState::PsiMinus, BasisTag::ZProduct)).mat();
  const CMatrix pp = outer(product_state("++", BasisTag::ZProduct)).mat();
  EXPECT_NEAR(fidelity_to(phi, phi), 1.0, 1e-15);
  EXPECT_NEAR(fidelity_to(psi, phi), 0.0, 1e-15);
  EXPECT_NEAR(fidelity_to(pp, phi), 0.5, 1e-15);
  EXPECT_THROW(fidelity_to(phi, maximally_mixed(4).mat()), std::invalid_argument);
}

TEST(LaSalle, SetMembers) {
  const auto zero = lasalle_distance(lasalle_member(0.0));
  EXPECT_NEAR(zero.dist, 0.0, 1e-15);
  ASSERT_TRUE(zero.alpha);
  EXPECT_NEAR(*zero.alpha, 0.0, 1e-15);

  const CMatrix phi_minus = outer(bell_state(BellState::PhiMinus, BasisTag::XProduct)).mat();
  EXPECT_LT(max_abs(lasalle_member(std::numbers::pi) - phi_minus), 1e-15);
  const auto pi = lasalle_distance(phi_minus);
  EXPECT_NEAR(pi.dist, 0.0, 1e-15);
  ASSERT_TRUE(pi.alpha);
  EXPECT_NEAR(std::abs(*pi.alpha), std::numbers::pi, 1e-15);

  const CMatrix phi_plus = outer(bell_state(BellState::PhiPlus, BasisTag::XProduct)).mat();
  EXPECT_LT(max_abs(lasalle_member(0.0) - phi_plus), 1e-15);
}

TEST(LaSalle, ProductStateDistance) {
  // diag(1,0,0,0) against any member: four entries of modulus 1/2.
  const auto d = lasalle_distance(outer(product_state("++", BasisTag::XProduct)).mat());
  EXPECT_NEAR(d.dist, 1.0, 1e-12);
  EXPECT_FALSE(d.alpha);
}

TEST(LaSalle, ClosedFormIsTheMinimumOverTheFamily) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const CMatrix rho = testing::random_density(rng, 4);
    const auto d = lasalle_distance(rho);
    double best = 1e300;
    for (int i = 0; i < 3600; ++i) {
      best = std::min(best, (rho - lasalle_member(2 * std::numbers::pi * i / 3600)).norm());
    }
    EXPECT_LE(d.dist, best + 1e-12);
    EXPECT_GE(d.dist, best - 1e-5);
  }
}

TEST(ExponentialFit, ExactExponential) {
  std::vector<double> t, y;
  for (int i = 0; i <= 100; ++i) {
    t.push_back(0.1 * i);
    y.push_back(std::exp(-0.3 * t.back()));
  }
  const auto fit = fit_exponential(t, y, 0.0, 10.0);
  EXPECT_NEAR(fit.rate, 0.3, 1e-6);
  EXPECT_GE(fit.r_squared, 0.9999);
  EXPECT_EQ(fit.points, 101u);
}

TEST(ExponentialFit, ConstantSeries) {
  std::vector<double> t, y;
  for (int i = 0; i < 20; ++i) {
    t.push_back(i);
    y.push_back(0.4);
  }
  const auto fit = fit_exponential(t, y, 0.0, 19.0);
  EXPECT_NEAR(fit.rate, 0.0, 1e-15);
  EXPECT_EQ(fit.r_squared, 1.0);
}

TEST(ExponentialFit, TooFewPoints) {
  std::vector<double> t{0, 1, 2}, y{1, 0.5, 0.25};
  EXPECT_THROW(fit_exponential(t, y, 0.0, 2.0), std::invalid_argument);
}

TEST(DecayWindow, SpansTheRequestedDecades) {
  std::vector<double> t, y;
  for (int i = 0; i <= 1000; ++i) {
    t.push_back(0.1 * i);
    y.push_back(std::exp(-0.5 * t.back()));
  }
  const auto w = decay_window(t, y);
  ASSERT_TRUE(w);
  EXPECT_NEAR(w->first, std::log(10.0) / 0.5, 0.1);
  EXPECT_NEAR(w->second, std::log(1e8) / 0.5, 0.1);
  const std::vector<double> flat(t.size(), 1.0);
  EXPECT_FALSE(decay_window(t, flat));
}

TEST(PeakReport, MonotoneSeriesUsesWindowRange) {
  std::vector<double> t, c;
  for (int i = 0; i <= 100; ++i) {
    t.push_back(i);
    c.push_back(1.0 - std::exp(-0.1 * i));
  }
  const auto r = peak_report(t, c, 0.99, 10.0);
  ASSERT_TRUE(r.t_first);
  EXPECT_NEAR(*r.t_first, std::log(100.0) / 0.1, 0.1);
  EXPECT_DOUBLE_EQ(r.t_max, 100.0);
  EXPECT_NEAR(r.fluctuation_amplitude, c[100] - c[95], 1e-15);
}

TEST(PeakReport, OscillationAmplitudeNearPeak) {
  std::vector<double> t, c;
  for (int i = 0; i <= 4000; ++i) {
    t.push_back(0.05 * i);
    // Slow envelope with a 1% fast ripple.
    c.push_back(std::sin(std::numbers::pi * t.back() / 200.0) *
                (0.995 + 0.005 * std::cos(8.0 * t.back())));
  }
  const auto r = peak_report(t, c, 0.9, 10.0);
  EXPECT_NEAR(r.t_max, 100.0, 1.0);
  EXPECT_NEAR(r.fluctuation_amplitude, 0.01, 5e-3);
  EXPECT_FALSE(peak_report(t, c, 1.5, 10.0).t_first);
}

}  // namespace
}  // namespace lyapent
