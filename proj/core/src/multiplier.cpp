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

#include "kpath/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kpath/error.hpp"
#include "kpath/special_functions.hpp"

namespace kpath {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMellinMaxTerms = 80;

double sin_half_squared(double q) {
  const double h = std::sin(0.5 * std::abs(q));
  return h * h;
}

void check_laplace(double lambda) {
  if (!(lambda > 0.0)) throw ValidationError("laplace: lambda must be > 0");
}
void check_factorial(double z) {
  if (!(z >= 0.0)) throw ValidationError("factorial: z must be >= 0");
}
// a = 1 is admitted here (it reproduces ell_k(1, q)); TransformSpec keeps a < 1.
void check_fractional(double c, double a) {
  if (!(c > 0.0)) throw ValidationError("fractional: c must be > 0");
  if (!(a > 0.0 && a <= 1.0)) throw ValidationError("fractional: a must lie in (0, 1]");
}

void check_mellin(double s) {
  if (!(s > 1.0)) throw ValidationError("mellin: s must be > 1");
  const double nearest_odd = 2.0 * std::round((s - 1.0) / 2.0) + 1.0;
  if (nearest_odd >= 3.0 && std::abs(s - nearest_odd) < 1e-6) {
    throw ValidationError(
        "mellin: s = " + std::to_string(s) +
        " is (too close to) an odd integer >= 3, where the expansion of the symbol picks up a "
        "logarithmic term; these values are not supported");
  }
}

// Coefficients b_l of q^{2l} in the Mellin symbol, truncated once the term at
// q = pi drops below 1e-17 of the running value there.
std::vector<double> mellin_series(double s, double cusp) {
  std::vector<double> b;
  double at_pi = cusp * std::pow(kPi, s - 1.0);
  double log_pi2 = 2.0 * std::log(kPi);
  for (int l = 1; l <= kMellinMaxTerms; ++l) {
    const double sign = (l % 2 == 0) ? -1.0 : 1.0;  // -(-1)^l
    const double coeff = sign * 2.0 * zeta_real(s - 2.0 * l) / std::tgamma(2.0 * l + 1.0);
    b.push_back(coeff);
    const double term_at_pi = coeff * std::exp(l * log_pi2);
    at_pi += term_at_pi;
    if (l > 1 && std::abs(term_at_pi) < 1e-17 * std::abs(at_pi)) break;
  }
  return b;
}

double eval_mellin(double cusp, const std::vector<double>& series, double s, double q) {
  const double aq = std::abs(q);
  const double x = aq * aq;
  double poly = 0.0;
  for (auto it = series.rbegin(); it != series.rend(); ++it) poly = poly * x + *it;
  return cusp * std::pow(aq, s - 1.0) + poly * x;
}

}  // namespace

double ell_k(int k, double q) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  const double h = std::sin(0.5 * k * std::abs(q));
  return 4.0 * h * h;
}

double ell_laplace(double lambda, double q) {
  check_laplace(lambda);
  const double sq = sin_half_squared(q);
  const double sh = std::sinh(0.5 * lambda);
  return sq / (std::tanh(0.5 * lambda) * (sh * sh + sq));
}

double ell_factorial(double z, double q) {
  check_factorial(z);
  if (z == 0.0) return 0.0;
  const double a = 2.0 * z * sin_half_squared(q);  // z (1 - cos q)
  const double b = z * std::sin(std::abs(q));
  const double hb = std::sin(0.5 * b);
  // e^z - e^{z cos q} cos(z sin q) = e^z [(1 - e^{-a}) + e^{-a} (1 - cos b)]
  return 2.0 * std::exp(z) * (-std::expm1(-a) + std::exp(-a) * 2.0 * hb * hb);
}

double ell_mellin(double s, double q) {
  check_mellin(s);
  const double cusp = mellin_cusp_coefficient(s);
  return eval_mellin(cusp, mellin_series(s, cusp), s, q);
}

double ell_fractional(double c, double a, double q) {
  check_fractional(c, a);
  return c * std::pow(4.0 * sin_half_squared(q), a);
}

double transformed_action_on_e0(const TransformSpec& spec, std::int64_t n) {
  const auto m = n < 0 ? -n : n;
  if (spec.is<Laplace>()) {
    const double lambda = spec.as<Laplace>().lambda;
    return m == 0 ? 2.0 / std::expm1(lambda) : -std::exp(-lambda * static_cast<double>(m));
  }
  if (spec.is<Factorial>()) {
    if (m == 0) return 2.0 * std::expm1(spec.as<Factorial>().z);
    if (m > 100000) return 0.0;
    return -spec.coefficient(static_cast<int>(m));
  }
  if (spec.is<Mellin>()) {
    const double s = spec.as<Mellin>().s;
    return m == 0 ? 2.0 * zeta_real(s) : -std::pow(static_cast<double>(m), -s);
  }
  throw ValidationError("no closed-form action on e_0 for " + spec.describe());
}

Multiplier::Multiplier(const TransformSpec& spec) : spec_(spec), zeros_{0.0} {
  if (spec.is<PureK>()) {
    const int k = spec.as<PureK>().k;
    small_q_coefficient_ = static_cast<double>(k) * k;
    for (int j = 1; 2 * j <= k; ++j) zeros_.push_back(2.0 * kPi * j / k);
  } else if (spec.is<Laplace>()) {
    const double e = std::exp(spec.as<Laplace>().lambda);
    small_q_coefficient_ = e * (e + 1.0) / std::pow(e - 1.0, 3);
  } else if (spec.is<Factorial>()) {
    const double z = spec.as<Factorial>().z;
    small_q_coefficient_ = z * (z + 1.0) * std::exp(z);
  } else if (spec.is<Mellin>()) {
    const double s = spec.as<Mellin>().s;
    check_mellin(s);
    mellin_cusp_ = mellin_cusp_coefficient(s);
    mellin_series_ = mellin_series(s, mellin_cusp_);
    smoothness_ = Smoothness::kCuspAtZero;
    cusp_exponent_ = s - 1.0;
    if (s < 3.0) {
      small_q_coefficient_ = mellin_cusp_;
      small_q_exponent_ = s - 1.0;
    } else {
      small_q_coefficient_ = zeta_real(s - 2.0);
    }
  } else {
    const auto& p = spec.as<FractionalPower>();
    smoothness_ = Smoothness::kCuspAtZero;
    cusp_exponent_ = 2.0 * p.a;
    small_q_coefficient_ = p.c;
    small_q_exponent_ = 2.0 * p.a;
  }
}

double Multiplier::operator()(double q) const {
  switch (spec_.variant().index()) {
    case 0:
      return ell_k(spec_.as<PureK>().k, q);
    case 1:
      return ell_laplace(spec_.as<Laplace>().lambda, q);
    case 2:
      return ell_factorial(spec_.as<Factorial>().z, q);
    case 3:
      return eval_mellin(mellin_cusp_, mellin_series_, spec_.as<Mellin>().s, q);
    default: {
      const auto& p = spec_.as<FractionalPower>();
      return ell_fractional(p.c, p.a, q);
    }
  }
}

}  // namespace kpath
