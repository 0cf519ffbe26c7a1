// Copyright 2026 The kpath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kpath/stable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "kpath/error.hpp"
#include "kpath/quadrature.hpp"

namespace kpath {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxForcedPanels = 20000;

// Upper bound on Gamma(a, x) = int_x^inf s^{a-1} e^{-s} ds. For a <= 1 the
// factor s^{a-1} is decreasing; for a > 1 and x > a - 1 the ratio of
// consecutive terms of the asymptotic series gives the geometric bound.
double upper_gamma_bound(double a, double x) {
  const double lead = std::exp((a - 1.0) * std::log(x) - x);
  if (a <= 1.0) return lead;
  const double ratio = (a - 1.0) / x;
  return ratio < 1.0 ? lead / (1.0 - ratio) : std::numeric_limits<double>::infinity();
}

// Smallest (up to bisection) Z with (1/pi) int_Z^inf exp(-(gamma z)^alpha) dz <= target.
double truncation_point(const StableParams& p, double target) {
  const double a = 1.0 / p.alpha;
  // int_Z^inf exp(-(gamma z)^alpha) dz = Gamma(a, (gamma Z)^alpha) / (alpha gamma)
  auto remainder = [&](double x) { return upper_gamma_bound(a, x) / (p.alpha * p.gamma * kPi); };
  double hi = 1.0;
  while (remainder(hi) > target) hi *= 2.0;
  double lo = hi / 2.0;
  for (int i = 0; i < 60 && hi - lo > 1e-3 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (remainder(mid) > target ? lo : hi) = mid;
  }
  return std::pow(hi, 1.0 / p.alpha) / p.gamma;
}

}  // namespace

void StableParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw ValidationError("stable: alpha must lie in (0, 2]");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ValidationError("stable: gamma must be > 0");
}

double stable_density(double xi, const StableParams& p, double tol) {
  p.validate();
  if (!(tol > 0.0)) throw ValidationError("stable: tolerance must be > 0");
  if (!std::isfinite(xi)) throw ValidationError("stable: xi must be finite");
  xi = std::abs(xi);

  const double z_max = truncation_point(p, 0.1 * tol);
  const double zero = 0.0;
  std::vector<double> pts = graded_breakpoints(0.0, z_max, std::span(&zero, 1), 40);
  if (xi > 0.0) {
    const double h = 4.0 * kPi / xi;
    if (z_max / h <= static_cast<double>(kMaxForcedPanels)) {
      for (double z = h; z < z_max; z += h) pts.push_back(z);
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }
  }
  auto integrand = [&](double z) { return std::cos(xi * z) * std::exp(-std::pow(p.gamma * z, p.alpha)); };
  const int budget = std::max(20000, static_cast<int>(4 * pts.size()) + 1000);
  return integrate_adaptive(integrand, pts, 0.9 * kPi * tol, budget).value / kPi;
}

double stable_peak(const StableParams& p) {
  p.validate();
  return std::tgamma(1.0 + 1.0 / p.alpha) / (kPi * p.gamma);
}

double stable_tail_asymptote(double xi, const StableParams& p) {
  p.validate();
  if (!(p.alpha < 2.0)) throw ValidationError("stable: the power-law tail needs alpha < 2");
  if (!(xi > 0.0)) throw ValidationError("stable: tail asymptote needs xi > 0");
  return std::tgamma(p.alpha + 1.0) * std::sin(0.5 * kPi * p.alpha) * std::pow(p.gamma, p.alpha) *
         std::pow(xi, -(p.alpha + 1.0)) / kPi;
}

double stable_half_width(const StableParams& p, double tol) {
  p.validate();
  if (!(tol > 0.0)) throw ValidationError("stable: tolerance must be > 0");
  const double half = 0.5 * stable_peak(p);
  const double density_tol = std::min(1e-12, tol) * half;
  double lo = 0.0;
  double hi = p.gamma;
  while (stable_density(hi, p, density_tol) > half) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (stable_density(mid, p, density_tol) > half ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace kpath
