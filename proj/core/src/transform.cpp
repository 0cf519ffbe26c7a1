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

#include "kpath/transform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kpath/error.hpp"

namespace kpath {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_param(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

TransformSpec::TransformSpec(Variant v) : v_(v) {
  std::visit(overloaded{
                 [](const PureK& p) {
                   if (p.k < 1) throw ValidationError("k must be a positive integer");
                 },
                 [](const Laplace& p) {
                   if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) {
                     throw ValidationError("laplace: lambda must be a finite real > 0");
                   }
                 },
                 [](const Factorial& p) {
                   if (!(p.z >= 0.0) || !std::isfinite(p.z)) {
                     throw ValidationError("factorial: z must be a finite real >= 0");
                   }
                 },
                 [](const Mellin& p) {
                   if (!(p.s > 1.0) || !std::isfinite(p.s)) {
                     throw ValidationError("mellin: s must be a finite real > 1");
                   }
                   if (p.s == 3.0) {
                     throw ValidationError(
                         "mellin: s = 3 is excluded (the small-q expansion carries a "
                         "logarithmic term there)");
                   }
                 },
                 [](const FractionalPower& p) {
                   if (!(p.c > 0.0) || !std::isfinite(p.c)) {
                     throw ValidationError("fractional: c must be a finite real > 0");
                   }
                   if (!(p.a > 0.0 && p.a < 1.0)) {
                     throw ValidationError("fractional: a must lie in (0, 1)");
                   }
                 },
             },
             v_);
}

TransformSpec TransformSpec::fractional_matching_mellin(double s) {
  if (!(s > 1.0 && s < 3.0)) {
    throw ValidationError("fractional comparison needs 1 < s < 3");
  }
  const double c = -std::numbers::pi / (std::tgamma(s) * std::cos(std::numbers::pi * s / 2.0));
  return fractional_power(c, (s - 1.0) / 2.0);
}

bool TransformSpec::is_series() const noexcept {
  return is<Laplace>() || is<Factorial>() || is<Mellin>();
}

double TransformSpec::coefficient(int k) const {
  if (k < 1) throw ValidationError("coefficient index must be >= 1");
  return std::visit(
      overloaded{
          [k](const PureK& p) { return k == p.k ? 1.0 : 0.0; },
          [k](const Laplace& p) { return std::exp(-p.lambda * k); },
          [k](const Factorial& p) {
            double c = 1.0;
            for (int j = 1; j <= k && c != 0.0; ++j) c *= p.z / j;
            return c;
          },
          [k](const Mellin& p) { return std::pow(static_cast<double>(k), -p.s); },
          [](const FractionalPower&) -> double {
            throw ValidationError("fractional power has no k-path expansion");
          },
      },
      v_);
}

std::string TransformSpec::family() const {
  return std::visit(overloaded{
                        [](const PureK&) { return std::string("k"); },
                        [](const Laplace&) { return std::string("laplace"); },
                        [](const Factorial&) { return std::string("factorial"); },
                        [](const Mellin&) { return std::string("mellin"); },
                        [](const FractionalPower&) { return std::string("fractional"); },
                    },
                    v_);
}

std::string TransformSpec::describe() const {
  return std::visit(
      overloaded{
          [](const PureK& p) { return "k(k=" + std::to_string(p.k) + ")"; },
          [](const Laplace& p) { return "laplace(lambda=" + format_param(p.lambda) + ")"; },
          [](const Factorial& p) { return "factorial(z=" + format_param(p.z) + ")"; },
          [](const Mellin& p) { return "mellin(s=" + format_param(p.s) + ")"; },
          [](const FractionalPower& p) {
            return "fractional(c=" + format_param(p.c) + ", a=" + format_param(p.a) + ")";
          },
      },
      v_);
}

}  // namespace kpath
