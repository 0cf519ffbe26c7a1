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

#ifndef KPATH_MULTIPLIER_HPP
#define KPATH_MULTIPLIER_HPP

#include <cstdint>
#include <vector>

#include "kpath/transform.hpp"

namespace kpath {

// Fourier symbols on the infinite chain. Every symbol is even, vanishes at
// q = 0 and is evaluated through |q|, so l(q) == l(-q) holds bit for bit.

/// 2 (1 - cos(k q))
double ell_k(int k, double q);

/// (e^lambda + 1)(1 - cos q) / ((e^lambda - 1)(cosh lambda - cos q)), lambda > 0.
double ell_laplace(double lambda, double q);

/// 2 [e^z - e^{z cos q} cos(z sin q)], z >= 0.
double ell_factorial(double z, double q);

/// 2 zeta(s) - Li_s(e^{iq}) - Li_s(e^{-iq}) for s > 1, evaluated through its
/// expansion around q = 0 (convergent for |q| < 2 pi). Odd integers s >= 3 are
/// rejected, together with s within 1e-6 of them.
double ell_mellin(double s, double q);

/// c (2 (1 - cos q))^a with c > 0 and 0 < a <= 1.
double ell_fractional(double c, double a, double q);

/// Entry n of the transformed operator applied to e_0 on the chain:
/// the diagonal 2 sum c_k for n = 0 and the hop weight -c_{|n|} otherwise.
/// Defined for Laplace, Factorial and Mellin.
double transformed_action_on_e0(const TransformSpec& spec, std::int64_t n);

/// Symbol of a TransformSpec as an evaluatable, immutable function object.
///
/// Construction precomputes whatever the family needs (Mellin series
/// coefficients), after which evaluation is pure and thread-safe.
class Multiplier {
 public:
  enum class Smoothness { kAnalytic, kCuspAtZero };

  explicit Multiplier(const TransformSpec& spec);

  double operator()(double q) const;

  const TransformSpec& spec() const noexcept { return spec_; }
  Smoothness smoothness() const noexcept { return smoothness_; }
  /// Exponent of the non-analytic |q|^p term when smoothness() is a cusp.
  double cusp_exponent() const noexcept { return cusp_exponent_; }

  /// l(q) ~ coefficient * |q|^exponent as q -> 0.
  double small_q_coefficient() const noexcept { return small_q_coefficient_; }
  double small_q_exponent() const noexcept { return small_q_exponent_; }

  /// Points of [0, pi] where the symbol vanishes (always including 0).
  const std::vector<double>& zeros() const noexcept { return zeros_; }

 private:
  TransformSpec spec_;
  Smoothness smoothness_ = Smoothness::kAnalytic;
  double cusp_exponent_ = 0.0;
  double small_q_coefficient_ = 0.0;
  double small_q_exponent_ = 2.0;
  std::vector<double> zeros_;
  // Mellin only: cusp coefficient and series coefficients of q^{2l}, l >= 1.
  double mellin_cusp_ = 0.0;
  std::vector<double> mellin_series_;
};

}  // namespace kpath

#endif  // KPATH_MULTIPLIER_HPP
