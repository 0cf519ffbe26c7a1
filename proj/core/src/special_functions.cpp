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

#include "kpath/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "kpath/error.hpp"

namespace kpath {

namespace {

// B_{2j} / (2j)! for j = 1..10.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

double zeta_euler_maclaurin(double s) {
  constexpr int kN = 20;
  const double n = kN;
  double sum = 0.0;
  for (int k = kN - 1; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  sum += std::pow(n, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(n, -s);

  // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
  double rising = s;                  // s (s+1) ... (s+2j-2)
  double power = std::pow(n, -s - 1.0);  // N^{-s-2j+1}
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    sum += kBernoulliOverFactorial[j] * rising * power;
    const double next = static_cast<double>(2 * j + 1);
    rising *= (s + next) * (s + next + 1.0);
    power /= n * n;
  }
  return sum;
}

}  // namespace

double zeta_real(double x) {
  if (x == 1.0) throw ValidationError("zeta has a pole at x = 1");
  if (std::isnan(x)) return x;
  if (x >= 0.0) {
    if (x > 60.0) return 1.0 + std::exp2(-x) + std::pow(3.0, -x);
    return zeta_euler_maclaurin(x);
  }
  if (std::floor(x / 2.0) == x / 2.0) return 0.0;  // trivial zeros

  const double y = 1.0 - x;
  const double two_pi = 2.0 * std::numbers::pi;
  const double c = std::cos(std::numbers::pi * y / 2.0);
  // 2 (2 pi)^{-y} Gamma(y) in log form; Gamma(y) overflows long before the product does.
  const double log_mag = std::log(2.0) - y * std::log(two_pi) + std::lgamma(y);
  return c * std::exp(log_mag) * zeta_real(y);
}

double mellin_cusp_coefficient(double s) {
  return -std::numbers::pi / (std::tgamma(s) * std::cos(std::numbers::pi * s / 2.0));
}

}  // namespace kpath
