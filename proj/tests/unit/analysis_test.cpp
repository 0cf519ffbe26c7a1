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
#include <vector>

#include "kpath/analysis.hpp"
#include "kpath/error.hpp"
#include "kpath/evolution.hpp"
#include "kpath/multiplier.hpp"
#include "kpath/special_functions.hpp"
#include "kpath/stable.hpp"

namespace kpath {
namespace {

DensityProfile make_profile(Site half_width, Site stride, std::vector<double> values) {
  DensityProfile p;
  p.half_width = half_width;
  p.stride = stride;
  p.values = std::move(values);
  return p;
}

TEST(FitPowerLaw, RecoversExactLaw) {
  const std::vector<double> t{1.0, 2.0, 5.0, 10.0, 100.0};
  std::vector<double> y;
  for (double x : t) y.push_back(3.0 * std::pow(x, -0.5));
  const auto fit = fit_power_law(t, y);
  EXPECT_NEAR(fit.exponent, -0.5, 1e-13);
  EXPECT_NEAR(fit.prefactor, 3.0, 1e-12);
  EXPECT_LT(fit.max_residual, 1e-13);
  EXPECT_NEAR(fit_prefactor(t, y, -0.5), 3.0, 1e-13);
}

TEST(FitPowerLaw, ResidualOfANoisyLaw) {
  const std::vector<double> t{1.0, 2.0, 4.0};
  const std::vector<double> y{1.0, 2.0 * std::exp(0.1), 4.0};
  const auto fit = fit_power_law(t, y);
  EXPECT_NEAR(fit.exponent, 1.0, 1e-12);
  // Residuals -1/30, +2/30, -1/30 around the least-squares line.
  EXPECT_NEAR(fit.max_residual, 0.2 / 3.0, 1e-12);
}

TEST(FitPowerLaw, Validation) {
  const std::vector<double> two{1.0, 2.0};
  EXPECT_THROW(fit_power_law(two, two), ValidationError);
  const std::vector<double> t{1.0, 1.0, 2.0};
  const std::vector<double> y{1.0, 1.0, 1.0};
  EXPECT_THROW(fit_power_law(t, y), ValidationError);
  const std::vector<double> good_t{1.0, 2.0, 3.0};
  const std::vector<double> bad_y{1.0, 0.0, 1.0};
  EXPECT_THROW(fit_power_law(good_t, bad_y), ValidationError);
  const std::vector<double> short_y{1.0, 2.0};
  EXPECT_THROW(fit_power_law(good_t, short_y), ValidationError);
}

TEST(Fwhm, LinearInterpolation) {
  EXPECT_DOUBLE_EQ(fwhm(make_profile(4, 1, {0, 1, 2, 3, 4, 3, 2, 1, 0})), 4.0);
  EXPECT_DOUBLE_EQ(fwhm(make_profile(2, 1, {1.5, 2.5, 4.0, 2.5, 1.5})), 3.0);
  EXPECT_DOUBLE_EQ(fwhm(make_profile(4, 2, {0.5, 2.0, 4.0, 3.0, 1.0})), 6.0);
  EXPECT_THROW(fwhm(make_profile(2, 1, {1, 1, 1, 1, 1})), ValidationError);
}

TEST(PeakAndMsd, Basics) {
  const auto p = make_profile(2, 1, {0.1, 0.2, 0.4, 0.2, 0.1});
  EXPECT_EQ(peak_height(p), 0.4);
  EXPECT_NEAR(msd_windowed(p), 2 * (0.2 + 0.4), 1e-15);
  const auto coarse = make_profile(4, 2, {0.1, 0.2, 0.4, 0.2, 0.1});
  EXPECT_NEAR(msd_windowed(coarse), 2.0 * (2 * 16 * 0.1 + 2 * 4 * 0.2), 1e-14);
}

TEST(Msd, PureKChainSpreadsAsTwoKSquaredT) {
  for (int k : {1, 2, 3}) {
    const Multiplier ell(TransformSpec::pure_k(k));
    const double t = 3.0;
    const auto u = evolve_profile(ell, t, 30 * k, {{0, 1.0}}, 1e-14);
    EXPECT_NEAR(msd_windowed(u), 2.0 * k * k * t, 1e-8) << "k=" << k;
  }
}

TEST(Msd, LaplaceMatchesSecondMomentOfTheWeights) {
  const auto spec = TransformSpec::laplace(1.0);
  const double t = 50.0;
  const auto pred = asymptotic_params(spec);
  const auto w = choose_window(pred, t);
  const auto u = evolve_profile(Multiplier(spec), t, w.half_width, {{0, 1.0}}, 1e-13);
  double second = 0.0;
  for (int k = 200; k >= 1; --k) second += 2.0 * k * k * std::exp(-static_cast<double>(k));
  EXPECT_NEAR(msd_windowed(u) / (t * second), 1.0, 1e-6);
}

TEST(AsymptoticParams, Families) {
  auto p = asymptotic_params(TransformSpec::pure_k(3));
  EXPECT_EQ(p.alpha, 2.0);
  EXPECT_EQ(p.gamma, 3.0);
  EXPECT_EQ(p.kappa, 1.0);
  EXPECT_EQ(p.regime, Regime::kNormal);

  const double e = std::exp(1.0);
  p = asymptotic_params(TransformSpec::laplace(1.0));
  EXPECT_NEAR(p.gamma, std::sqrt(e * (e + 1.0) / std::pow(e - 1.0, 3)), 1e-14);
  EXPECT_NEAR(p.gamma * p.gamma, 1.99229, 1e-5);

  p = asymptotic_params(TransformSpec::factorial(1.0));
  EXPECT_NEAR(p.gamma * p.gamma, 2.0 * e, 1e-13);

  p = asymptotic_params(TransformSpec::mellin(4.0));
  EXPECT_EQ(p.alpha, 2.0);
  EXPECT_NEAR(p.gamma * p.gamma, std::numbers::pi * std::numbers::pi / 6.0, 1e-13);

  p = asymptotic_params(TransformSpec::mellin(2.5));
  EXPECT_DOUBLE_EQ(p.alpha, 1.5);
  EXPECT_NEAR(p.kappa, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(std::pow(p.gamma, 1.5), mellin_cusp_coefficient(2.5), 1e-13);
  EXPECT_EQ(p.regime, Regime::kSuperdiffusive);

  p = asymptotic_params(TransformSpec::mellin(2.0));
  EXPECT_DOUBLE_EQ(p.alpha, 1.0);
  EXPECT_NEAR(p.gamma, std::numbers::pi, 1e-14);
  EXPECT_EQ(p.regime, Regime::kBallistic);

  p = asymptotic_params(TransformSpec::mellin(1.5));
  EXPECT_DOUBLE_EQ(p.kappa, 4.0);
  EXPECT_EQ(p.regime, Regime::kSuperdiffusive);

  p = asymptotic_params(TransformSpec::fractional_power(2.0, 0.25));
  EXPECT_DOUBLE_EQ(p.alpha, 0.5);
  EXPECT_NEAR(p.gamma, 4.0, 1e-14);
}

TEST(AsymptoticParams, GammaPositiveAcrossTheCuspRange) {
  for (int i = 1; i <= 50; ++i) {
    const double s = 1.0 + 2.0 * i / 51.0;
    const auto p = asymptotic_params(TransformSpec::mellin(s));
    EXPECT_GT(p.gamma, 0.0) << s;
    EXPECT_NEAR(p.alpha, s - 1.0, 1e-15);
  }
}

TEST(Regime, NamesRoundTrip) {
  for (Regime r : {Regime::kNormal, Regime::kSuperdiffusive, Regime::kBallistic}) {
    EXPECT_EQ(parse_regime(regime_name(r)), r);
  }
  EXPECT_EQ(regime_name(Regime::kBallistic), "ballistic");
  EXPECT_THROW(parse_regime("subdiffusive"), ValidationError);
}

TEST(ChooseWindow, Shapes) {
  const LimitPrediction gauss{2.0, 1.5, 1.0, Regime::kNormal};
  const auto w = choose_window(gauss, 100.0);
  EXPECT_EQ(w.stride, 1);
  EXPECT_EQ(w.half_width, static_cast<Site>(std::ceil(4.1 * 2.0 * 1.5 * 10.0)) + 10);

  const auto pred = asymptotic_params(TransformSpec::mellin(1.5));
  const auto heavy = choose_window(pred, 40.0);
  const double scale = pred.gamma * 40.0 * 40.0;
  EXPECT_EQ(heavy.half_width % heavy.stride, 0);
  EXPECT_GE(static_cast<double>(heavy.half_width), 40.0 * scale);
  EXPECT_LE(static_cast<double>(heavy.stride), scale / 25.0);
  EXPECT_THROW(choose_window(gauss, 0.0), ValidationError);
}

TEST(CompareProfileToLimit, ZeroForTheLimitItself) {
  const auto pred = asymptotic_params(TransformSpec::mellin(2.5));
  const double t = 64.0;
  const double scale = std::pow(t, 1.0 / pred.alpha);
  DensityProfile p;
  p.time = t;
  p.half_width = 40;
  for (Site x = -40; x <= 40; ++x) p.values.push_back(stable_density(x / scale, pred.stable(), 1e-14) / scale);
  EXPECT_LT(compare_profile_to_limit(p, pred), 1e-11);
  p.values[40] += 1e-3 / scale;
  EXPECT_NEAR(compare_profile_to_limit(p, pred), 1e-3, 1e-10);
}

TEST(AnalyzeDiffusion, NormalSpreading) {
  const std::vector<double> times{50.0, 100.0, 200.0, 400.0};
  const auto r = analyze_diffusion(TransformSpec::laplace(1.0), times);
  ASSERT_TRUE(r.peak_fit && r.fwhm_fit);
  EXPECT_NEAR(r.peak_fit->exponent, -0.5, 0.01);
  EXPECT_NEAR(r.fwhm_fit->exponent, 0.5, 0.01);
  ASSERT_EQ(r.msd.size(), 4u);
  EXPECT_FALSE(r.msd_window_dependent);
  for (std::size_t i = 0; i < times.size(); ++i) {
    EXPECT_NEAR(r.msd[i] / (2.0 * r.predicted.gamma * r.predicted.gamma * times[i]), 1.0, 1e-6);
  }
  ASSERT_EQ(r.sup_errors.size(), 4u);
  for (std::size_t i = 1; i < times.size(); ++i) EXPECT_LT(r.sup_errors[i], r.sup_errors[i - 1]);
  EXPECT_EQ(r.transform, "laplace(lambda=1)");
}

TEST(AnalyzeDiffusion, OptionsAndShortSeries) {
  const std::vector<double> times{10.0, 20.0};
  AnalysisOptions opts;
  opts.sup_errors = false;
  const auto r = analyze_diffusion(TransformSpec::mellin(2.5), times, opts);
  EXPECT_FALSE(r.peak_fit.has_value());
  EXPECT_TRUE(r.msd.empty());
  EXPECT_TRUE(r.sup_errors.empty());
  EXPECT_TRUE(r.msd_window_dependent);
  opts.force_msd = true;
  EXPECT_EQ(analyze_diffusion(TransformSpec::mellin(2.5), times, opts).msd.size(), 2u);
  const std::vector<double> unsorted{20.0, 10.0};
  EXPECT_THROW(analyze_diffusion(TransformSpec::laplace(1.0), unsorted), ValidationError);
}

TEST(AnalyzeProfiles, AgreesWithAnalyzeDiffusion) {
  const auto spec = TransformSpec::factorial(1.0);
  const std::vector<double> times{20.0, 40.0, 80.0};
  const auto direct = analyze_diffusion(spec, times);
  std::vector<DensityProfile> profiles;
  const Multiplier ell(spec);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double peak = direct.peaks[i];
    profiles.push_back(evolve_profile(ell, times[i], direct.half_widths[i], {{0, 1.0}}, 1e-10 * peak));
  }
  const auto from_profiles = analyze_profiles(spec, profiles);
  for (std::size_t i = 0; i < times.size(); ++i) {
    EXPECT_NEAR(from_profiles.peaks[i], direct.peaks[i], 1e-9 * direct.peaks[i]);
    EXPECT_NEAR(from_profiles.fwhm[i], direct.fwhm[i], 1e-6);
  }
}

TEST(CompareFractional, RescaledDifferenceShrinks) {
  const std::vector<double> times{10.0, 100.0};
  const auto cmp = compare_fractional(2.5, times);
  ASSERT_EQ(cmp.size(), 2u);
  EXPECT_LT(cmp[1].rescaled_sup_difference, cmp[0].rescaled_sup_difference);
  EXPECT_NEAR(cmp[0].rescaled_sup_difference, cmp[0].sup_difference * std::pow(10.0, 1.0 / 1.5), 1e-15);
  EXPECT_THROW(compare_fractional(3.5, times), ValidationError);
}

}  // namespace
}  // namespace kpath
