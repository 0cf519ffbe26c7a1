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

#ifndef KPATH_TRANSFORM_HPP
#define KPATH_TRANSFORM_HPP

#include <string>
#include <variant>

namespace kpath {

/// A single k-path Laplacian L_k.
struct PureK {
  int k = 1;
};

/// sum_k exp(-lambda k) L_k
struct Laplace {
  double lambda = 1.0;
};

/// sum_k z^k / k! L_k
struct Factorial {
  double z = 1.0;
};

/// sum_k k^{-s} L_k
struct Mellin {
  double s = 2.0;
};

/// c L_1^a, defined spectrally. Only available as a chain multiplier.
struct FractionalPower {
  double c = 1.0;
  double a = 0.5;
};

/// Operator family selector with validated real parameters.
///
/// Ranges: k >= 1, lambda > 0, z >= 0, s > 1 with s != 3, c > 0, 0 < a < 1.
class TransformSpec {
 public:
  using Variant = std::variant<PureK, Laplace, Factorial, Mellin, FractionalPower>;

  /// Throws ValidationError when a parameter is outside its range.
  explicit TransformSpec(Variant v);

  static TransformSpec pure_k(int k) { return TransformSpec(PureK{k}); }
  static TransformSpec laplace(double lambda) { return TransformSpec(Laplace{lambda}); }
  static TransformSpec factorial(double z) { return TransformSpec(Factorial{z}); }
  static TransformSpec mellin(double s) { return TransformSpec(Mellin{s}); }
  static TransformSpec fractional_power(double c, double a) {
    return TransformSpec(FractionalPower{c, a});
  }
  /// c L_1^a with a = (s-1)/2 and c = -pi / (Gamma(s) cos(pi s / 2)), which
  /// shares its small-q behaviour with Mellin(s) for 1 < s < 3.
  static TransformSpec fractional_matching_mellin(double s);

  const Variant& variant() const noexcept { return v_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(v_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

  /// True for Laplace, Factorial and Mellin (the weighted k-sums).
  bool is_series() const noexcept;

  /// Weight c_k of L_k in the operator (k >= 1). FractionalPower has no such
  /// expansion and throws ValidationError.
  double coefficient(int k) const;

  /// Short family name: "k", "laplace", "factorial", "mellin", "fractional".
  std::string family() const;
  /// Human-readable form such as "mellin(s=2.5)".
  std::string describe() const;

 private:
  Variant v_;
};

}  // namespace kpath

#endif  // KPATH_TRANSFORM_HPP
