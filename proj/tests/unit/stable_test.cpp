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
#include "kpath/stable.hpp"
#include "oracles.hpp"

namespace kpath {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(StableDensity, GaussianClosedForm) {
  for (double gamma : {0.5, 1.0, 3.0}) {
    const StableParams p{2.0, gamma};
    for (double xi = 0.0; xi <= 8.0 * gamma; xi += 0.37 * gamma) {
      const double exact = std::exp(-xi * xi / (4.0 * gamma * gamma)) / (2.0 * gamma * std::sqrt(kPi));
      EXPECT_NEAR(stable_density(xi, p, 1e-13), exact, 1e-12) << "gamma=" << gamma << " xi=" << xi;
    }
  }
}

TEST(StableDensity, CauchyClosedForm) {
  for (double gamma : {0.5, 2.0}) {
    const StableParams p{1.0, gamma};
    for (double xi : {0.0, 0.1, 1.0, 3.0, 10.0, 100.0}) {
      EXPECT_NEAR(stable_density(xi, p, 1e-13), gamma / (kPi * (gamma * gamma + xi * xi)), 1e-12) << xi;
    }
  }
}

TEST(StableDensity, EvenInXi) {
  const StableParams p{1.3, 0.7};
  for (double xi : {0.5, 2.0, 9.0}) EXPECT_EQ(stable_density(xi, p), stable_density(-xi, p));
}

TEST(StableDensity, ScalingInGamma) {
  for (double alpha : {0.7, 1.5, 1.9}) {
    const StableParams unit{alpha, 1.0};
    const StableParams scaled{alpha, 2.5};
    for (double xi : {0.0, 0.8, 4.0, 25.0}) {
      EXPECT_NEAR(stable_density(xi, scaled, 1e-13), stable_density(xi / 2.5, unit, 1e-13) / 2.5, 1e-12);
    }
  }
}

TEST(StableDensity, IntegratesToOne) {
  for (double alpha : {1.2, 1.5, 1.8}) {
    const StableParams p{alpha, 1.0};
    const double cut = 200.0;
    const double body = 2.0 * oracle::simpson([&](double xi) { return stable_density(xi, p, 1e-12); }, 0.0, cut, 4000);
    // Leading tail term integrated from the cut to infinity on both sides.
    const double tail = 2.0 * stable_tail_asymptote(cut, p) * cut / alpha;
    EXPECT_NEAR(body + tail, 1.0, 1e-4) << "alpha=" << alpha;
  }
}

TEST(StablePeak, ClosedForm) {
  EXPECT_NEAR(stable_peak({2.0, 1.0}), 1.0 / (2.0 * std::sqrt(kPi)), 1e-15);
  EXPECT_NEAR(stable_peak({1.0, 1.0}), 1.0 / kPi, 1e-15);
  EXPECT_NEAR(stable_peak({1.5, 2.2354}), 0.128546, 1e-6);
  for (double alpha : {0.6, 1.1, 1.7}) {
    const StableParams p{alpha, 1.3};
    EXPECT_NEAR(stable_density(0.0, p, 1e-13), stable_peak(p), 1e-12);
    EXPECT_LT(stable_density(0.05, p), stable_peak(p));
  }
}

TEST(StableTail, AsymptoticRatio) {
  const StableParams p{1.5, 1.0};
  EXPECT_NEAR(stable_density(200.0, p, 1e-16) / stable_tail_asymptote(200.0, p), 1.0, 0.05);
  EXPECT_NEAR(stable_tail_asymptote(1.0, {1.0, 1.0}), 1.0 / kPi, 1e-15);
  EXPECT_THROW(stable_tail_asymptote(1.0, {2.0, 1.0}), ValidationError);
  EXPECT_THROW(stable_tail_asymptote(0.0, {1.5, 1.0}), ValidationError);
}

TEST(StableHalfWidth, KnownValues) {
  EXPECT_NEAR(stable_half_width({1.0, 1.0}), 1.0, 1e-8);
  EXPECT_NEAR(stable_half_width({1.0, 3.0}), 3.0, 1e-7);
  EXPECT_NEAR(stable_half_width({2.0, 1.0}), 2.0 * std::sqrt(std::log(2.0)), 1e-8);
  EXPECT_NEAR(stable_half_width({2.0, 1.0}), 1.6651092, 1e-7);
  const double mid = stable_half_width({1.5, 1.0});
  EXPECT_GT(mid, 1.0);
  EXPECT_LT(mid, 1.6651092);
  EXPECT_NEAR(stable_density(mid, {1.5, 1.0}, 1e-13), 0.5 * stable_peak({1.5, 1.0}), 1e-9);
}

TEST(StableParams, Validation) {
  EXPECT_THROW(stable_density(0.0, {0.0, 1.0}), ValidationError);
  EXPECT_THROW(stable_density(0.0, {2.1, 1.0}), ValidationError);
  EXPECT_THROW(stable_density(0.0, {1.0, 0.0}), ValidationError);
  EXPECT_THROW(stable_peak({1.0, -1.0}), ValidationError);
  EXPECT_THROW(stable_density(0.0, {1.0, 1.0}, 0.0), ValidationError);
}

}  // namespace
}  // namespace kpath
