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

#include "lyapent/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lyapent {

namespace {

const CMatrix& spin_flip() {
  static const CMatrix yy = kron(pauli(Pauli::Y), pauli(Pauli::Y));
  return yy;
}

// Eigenvalues below this fraction of the largest are dropped. Removing a
// weight-eps component moves the concurrence by at most O(eps), whereas
// keeping it costs O(sqrt(eps)) through the square roots.
constexpr double kRankCutoff = 1e-13;

}  // namespace

double concurrence(const CMatrix& rho_z) {
  if (rho_z.rows() != 4 || rho_z.cols() != 4) {
    throw DimensionError("concurrence: expected a 4x4 density matrix");
  }
  // With rho = F F^dagger, the square roots of the eigenvalues of rho rho~
  // are the singular values of F^T (Y x Y) F.
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (rho_z + rho_z.adjoint()));
  const RVector& w = solver.eigenvalues();
  const double cutoff = kRankCutoff * std::max(w.maxCoeff(), 0.0);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (w(i) > cutoff) kept.push_back(i);
  }
  if (kept.empty()) return 0.0;
  CMatrix factor(4, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    factor.col(static_cast<Eigen::Index>(j)) =
        std::sqrt(w(kept[j])) * solver.eigenvectors().col(kept[j]);
  }
  const CMatrix tau = factor.transpose() * spin_flip() * factor;
  Eigen::JacobiSVD<CMatrix> svd(tau);
  RVector lambda = RVector::Zero(4);
  lambda.head(svd.singularValues().size()) = svd.singularValues();
  std::sort(lambda.data(), lambda.data() + lambda.size(), std::greater<>());
  return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

double fidelity_to(const CMatrix& rho, const CMatrix& target) {
  if (rho.rows() != target.rows()) {
    throw DimensionError("fidelity_to: dimension mismatch");
  }
  if (purity(target) < 1.0 - 1e-9) {
    throw InvariantError("fidelity_to: target is not a pure state");
  }
  return (rho * target).trace().real();
}

CMatrix lasalle_member(double alpha) {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  m(0, 3) = 0.5 * std::polar(1.0, -alpha);
  m(3, 0) = 0.5 * std::polar(1.0, alpha);
  return m;
}

LaSalleDistance lasalle_distance(const CMatrix& rho_x) {
  if (rho_x.rows() != 4 || rho_x.cols() != 4) {
    throw DimensionError("lasalle_distance: expected a 4x4 density matrix");
  }
  const Complex corner = rho_x(3, 0);
  if (corner != Complex{0.0, 0.0}) {
    const double alpha = std::arg(corner);
    return {(rho_x - lasalle_member(alpha)).norm(), alpha};
  }
  constexpr int kGrid = 360;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double alpha = 2.0 * std::numbers::pi * i / kGrid;
    best = std::min(best, (rho_x - lasalle_member(alpha)).norm());
  }
  return {best, std::nullopt};
}

ExponentialFit fit_exponential(std::span<const double> t,
                               std::span<const double> y, double t_lo,
                               double t_hi, double floor,
                               std::size_t min_points) {
  if (t.size() != y.size()) {
    throw std::invalid_argument("fit_exponential: size mismatch");
  }
  std::vector<double> xs;
  std::vector<double> ls;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= t_lo && t[i] <= t_hi && y[i] > floor) {
      xs.push_back(t[i]);
      ls.push_back(std::log(y[i]));
    }
  }
  const std::size_t n = xs.size();
  if (n < min_points) {
    throw std::invalid_argument("fit_exponential: fewer than " +
                                std::to_string(min_points) +
                                " samples in the fit window");
  }
  double mx = 0.0, ml = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    ml += ls[i];
  }
  mx /= static_cast<double>(n);
  ml /= static_cast<double>(n);
  double sxx = 0.0, sxl = 0.0, sll = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxl += (xs[i] - mx) * (ls[i] - ml);
    sll += (ls[i] - ml) * (ls[i] - ml);
  }
  const double slope = sxx > 0.0 ? sxl / sxx : 0.0;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ls[i] - (ml + slope * (xs[i] - mx));
    ss_res += r * r;
  }
  // A constant series (up to rounding in the mean) is fitted exactly.
  const double flat = 1e-24 * static_cast<double>(n) * std::max(1.0, ml * ml);
  const double r2 = sll > flat ? 1.0 - ss_res / sll : 1.0;
  return {-slope, r2, n};
}

std::optional<std::pair<double, double>> decay_window(
    std::span<const double> t, std::span<const double> y, double upper,
    double lower, double floor) {
  if (t.empty() || t.size() != y.size()) return std::nullopt;
  const double hi_level = upper * y[0];
  const double lo_level = std::max(floor, lower * y[0]);
  std::optional<double> start;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!start && y[i] <= hi_level) start = t[i];
    if (start && y[i] <= lo_level) return std::make_pair(*start, t[i]);
  }
  if (!start) return std::nullopt;
  return std::make_pair(*start, t.back());
}

ConvergenceReport convergence_report(const Trajectory& traj, double t_lo,
                                     double t_hi) {
  if (traj.samples.empty() || t_lo > t_hi || t_lo < traj.front().t ||
      t_hi > traj.back().t) {
    throw std::invalid_argument("convergence_report: window outside trajectory");
  }
  std::vector<double> t, v;
  for (const Sample& s : traj.samples) {
    t.push_back(s.t);
    v.push_back(s.V);
  }
  const ExponentialFit fit = fit_exponential(t, v, t_lo, t_hi);
  return {fit.rate, fit.r_squared, traj.back().V, traj.meta.stalled};
}

std::optional<ConvergenceReport> convergence_report(const Trajectory& traj) {
  std::vector<double> t, v;
  for (const Sample& s : traj.samples) {
    t.push_back(s.t);
    v.push_back(s.V);
  }
  const auto window = decay_window(t, v);
  if (!window) return std::nullopt;
  try {
    return convergence_report(traj, window->first, window->second);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

PeakReport peak_report(std::span<const double> t, std::span<const double> c,
                       double threshold, double window) {
  if (t.empty() || t.size() != c.size()) {
    throw std::invalid_argument("peak_report: empty or mismatched series");
  }
  PeakReport out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= threshold) {
      if (i == 0) {
        out.t_first = t[0];
      } else {
        const double frac = (threshold - c[i - 1]) / (c[i] - c[i - 1]);
        out.t_first = t[i - 1] + frac * (t[i] - t[i - 1]);
      }
      break;
    }
  }
  const auto peak = static_cast<std::size_t>(
      std::max_element(c.begin(), c.end()) - c.begin());
  out.c_max = c[peak];
  out.t_max = t[peak];

  const double half = 0.5 * window;
  std::size_t lo = peak, hi = peak;
  while (lo > 0 && t[lo - 1] >= t[peak] - half - 1e-12) --lo;
  while (hi + 1 < t.size() && t[hi + 1] <= t[peak] + half + 1e-12) ++hi;

  double ext_min = std::numeric_limits<double>::infinity();
  double ext_max = -std::numeric_limits<double>::infinity();
  int extrema = 0;
  for (std::size_t i = std::max<std::size_t>(lo, 1); i <= hi && i + 1 < c.size();
       ++i) {
    const double left = c[i] - c[i - 1];
    const double right = c[i + 1] - c[i];
    if ((left > 0.0 && right <= 0.0) || (left < 0.0 && right >= 0.0)) {
      ext_min = std::min(ext_min, c[i]);
      ext_max = std::max(ext_max, c[i]);
      ++extrema;
    }
  }
  if (extrema >= 2) {
    out.fluctuation_amplitude = ext_max - ext_min;
  } else {
    const auto [mn, mx] =
        std::minmax_element(c.begin() + static_cast<std::ptrdiff_t>(lo),
                            c.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    out.fluctuation_amplitude = *mx - *mn;
  }
  return out;
}

PeakReport peak_report(const Trajectory& traj, double threshold,
                       double window) {
  std::vector<double> t, c;
  for (const Sample& s : traj.samples) {
    t.push_back(s.t);
    c.push_back(s.concurrence);
  }
  return peak_report(t, c, threshold, window);
}

}  // namespace lyapent
