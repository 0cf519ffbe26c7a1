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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kpath/error.hpp"
#include "kpath/transform.hpp"

namespace kpath {
namespace {

TEST(TransformSpec, RejectsOutOfRangeParameters) {
  EXPECT_THROW(TransformSpec::pure_k(0), ValidationError);
  EXPECT_THROW(TransformSpec::laplace(0.0), ValidationError);
  EXPECT_THROW(TransformSpec::laplace(-1.0), ValidationError);
  EXPECT_THROW(TransformSpec::laplace(std::nan("")), ValidationError);
  EXPECT_THROW(TransformSpec::factorial(-0.1), ValidationError);
  EXPECT_THROW(TransformSpec::mellin(1.0), ValidationError);
  EXPECT_THROW(TransformSpec::mellin(3.0), ValidationError);
  EXPECT_THROW(TransformSpec::mellin(INFINITY), ValidationError);
  EXPECT_THROW(TransformSpec::fractional_power(0.0, 0.5), ValidationError);
  EXPECT_THROW(TransformSpec::fractional_power(1.0, 1.0), ValidationError);
  EXPECT_THROW(TransformSpec::fractional_power(1.0, 0.0), ValidationError);
}

TEST(TransformSpec, AcceptsBoundaryValues) {
  EXPECT_NO_THROW(TransformSpec::factorial(0.0));
  EXPECT_NO_THROW(TransformSpec::mellin(1.0000001));
  EXPECT_NO_THROW(TransformSpec::mellin(3.5));
  EXPECT_NO_THROW(TransformSpec::pure_k(1000));
}

TEST(TransformSpec, Coefficients) {
  EXPECT_EQ(TransformSpec::pure_k(3).coefficient(3), 1.0);
  EXPECT_EQ(TransformSpec::pure_k(3).coefficient(2), 0.0);
  EXPECT_DOUBLE_EQ(TransformSpec::laplace(0.5).coefficient(4), std::exp(-2.0));
  EXPECT_DOUBLE_EQ(TransformSpec::factorial(2.0).coefficient(5), 32.0 / 120.0);
  EXPECT_EQ(TransformSpec::factorial(0.0).coefficient(1), 0.0);
  EXPECT_DOUBLE_EQ(TransformSpec::mellin(2.5).coefficient(4), 1.0 / 32.0);
  EXPECT_THROW(TransformSpec::mellin(2.5).coefficient(0), ValidationError);
  EXPECT_THROW(TransformSpec::fractional_power(1.0, 0.5).coefficient(1), ValidationError);
}

TEST(TransformSpec, FactorialCoefficientsStayFiniteForLargeK) {
  const auto spec = TransformSpec::factorial(30.0);
  double sum = 0.0;
  for (int k = 1; k <= 400; ++k) {
    const double c = spec.coefficient(k);
    ASSERT_TRUE(std::isfinite(c));
    sum += c;
  }
  EXPECT_NEAR(sum / std::expm1(30.0), 1.0, 1e-12);
}

TEST(TransformSpec, FractionalMatchingMellin) {
  const auto spec = TransformSpec::fractional_matching_mellin(2.0);
  ASSERT_TRUE(spec.is<FractionalPower>());
  EXPECT_DOUBLE_EQ(spec.as<FractionalPower>().a, 0.5);
  EXPECT_NEAR(spec.as<FractionalPower>().c, std::numbers::pi, 1e-14);
  EXPECT_THROW(TransformSpec::fractional_matching_mellin(3.2), ValidationError);
  EXPECT_THROW(TransformSpec::fractional_matching_mellin(1.0), ValidationError);
}

TEST(TransformSpec, Names) {
  EXPECT_EQ(TransformSpec::mellin(2.5).family(), "mellin");
  EXPECT_EQ(TransformSpec::mellin(2.5).describe(), "mellin(s=2.5)");
  EXPECT_EQ(TransformSpec::pure_k(2).describe(), "k(k=2)");
  EXPECT_TRUE(TransformSpec::laplace(1.0).is_series());
  EXPECT_FALSE(TransformSpec::pure_k(1).is_series());
  EXPECT_FALSE(TransformSpec::fractional_power(1.0, 0.5).is_series());
}

}  // namespace
}  // namespace kpath
