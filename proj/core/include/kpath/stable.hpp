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

#ifndef KPATH_STABLE_HPP
#define KPATH_STABLE_HPP

namespace kpath {

/// Symmetric alpha-stable law S(alpha, 0, gamma, 0) with characteristic
/// function exp(-|gamma z|^alpha); 0 < alpha <= 2, gamma > 0.
struct StableParams {
  double alpha = 2.0;
  double gamma = 1.0;

  /// Throws ValidationError outside the ranges above.
  void validate() const;
};

/// (1/pi) int_0^inf cos(xi z) exp(-(gamma z)^alpha) dz to absolute error tol.
/// The integral is cut where the remainder of the envelope is provably below
/// tol / 10 and the rest is integrated adaptively.
double stable_density(double xi, const StableParams& p, double tol = 1e-10);

/// f(0) = Gamma(1 + 1/alpha) / (pi gamma), the maximum of the density.
double stable_peak(const StableParams& p);

/// Leading large-xi term (1/pi) Gamma(alpha + 1) sin(pi alpha / 2) gamma^alpha
/// xi^{-(alpha + 1)}. Requires alpha < 2 and xi > 0.
double stable_tail_asymptote(double xi, const StableParams& p);

/// The xi0 > 0 with f(xi0) = f(0) / 2, by bisection. Relies on the density
/// being decreasing on [0, inf), which holds for every symmetric stable law.
double stable_half_width(const StableParams& p, double tol = 1e-10);

}  // namespace kpath

#endif  // KPATH_STABLE_HPP
