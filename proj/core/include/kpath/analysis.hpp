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

#ifndef KPATH_ANALYSIS_HPP
#define KPATH_ANALYSIS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/evolution.hpp"
#include "kpath/stable.hpp"
#include "kpath/transform.hpp"

namespace kpath {

enum class Regime { kNormal, kSuperdiffusive, kBallistic };

std::string_view regime_name(Regime r);
/// Inverse of regime_name; throws ValidationError on unknown names.
Regime parse_regime(std::string_view name);

/// Stable limit of t^{1/alpha} u_{t^{1/alpha} xi}(t) and its spreading
/// exponent kappa = 2 / alpha (FWHM^2 ~ t^kappa).
struct LimitPrediction {
  double alpha = 2.0;
  double gamma = 1.0;
  double kappa = 1.0;
  Regime regime = Regime::kNormal;

  StableParams stable() const { return {alpha, gamma}; }
};

/// Limit law of the evolution generated by spec on the infinite chain:
/// alpha = 2 with gamma^2 the q^2 coefficient of the symbol when that is
/// finite, and the cusp exponent and coefficient otherwise.
LimitPrediction asymptotic_params(const TransformSpec& spec);

/// Sampled window and stride that resolve the limit law at time t.
struct Window {
  Site half_width = 0;
  Site stride = 1;
};

/// alpha = 2: a dense window whose Gaussian tail mass is below 1e-8.
/// alpha < 2: 40 limit scales gamma t^{1/alpha} on each side, sampled about
/// 25 times per scale. A heavy tail cannot be cut at 1e-8 mass at any
/// affordable width, so these windows report the bulk, not the full mass.
Window choose_window(const LimitPrediction& pred, double t);

/// Value at the origin.
double peak_height(const DensityProfile& p);

/// Full width at half maximum, 2 x_half, with x_half the linear interpolation
/// of the first sample x >= 0 where the profile drops to half its peak.
/// Throws ValidationError when the window never reaches the half level.
double fwhm(const DensityProfile& p);

/// stride * sum x^2 u_x over the window (the exact windowed sum when the
/// stride is 1). Diverges with the window when alpha < 2.
double msd_windowed(const DensityProfile& p);

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double max_residual = 0.0;  // max |log y - log fit|
};

/// Least squares line through (log t, log y). Needs >= 3 points, strictly
/// increasing t and positive data.
PowerLawFit fit_power_law(std::span<const double> t, std::span<const double> y);

/// Geometric mean of y t^{-exponent}: the prefactor with the exponent pinned.
double fit_prefactor(std::span<const double> t, std::span<const double> y, double exponent);

/// max over the samples of |t^{1/alpha} u_x - f(t^{-1/alpha} x)| where f is the
/// limit density, each evaluated to density_tol.
double compare_profile_to_limit(const DensityProfile& p, const LimitPrediction& pred,
                                double density_tol = 1e-12);

struct DiffusionReport {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::string transform;
  std::vector<double> times;
  std::vector<Site> half_widths;
  std::vector<Site> strides;
  std::vector<double> peaks;
  std::vector<double> fwhm;
  std::vector<double> msd;  // empty when not requested
  bool msd_window_dependent = false;
  std::vector<double> sup_errors;  // empty when not requested
  std::optional<PowerLawFit> peak_fit;  // present with >= 3 times
  std::optional<PowerLawFit> fwhm_fit;
  LimitPrediction predicted;
};

struct AnalysisOptions {
  /// Kernel entries are integrated to rel_tol times the predicted peak.
  double rel_tol = 1e-10;
  /// MSD is emitted for alpha = 2 unless forced, since it diverges otherwise.
  bool force_msd = false;
  bool sup_errors = true;
};

/// Evolves e_0 to every time, measures peak, FWHM and (optionally) MSD and
/// distance to the limit law, and fits power laws over the time series.
DiffusionReport analyze_diffusion(const TransformSpec& spec, std::span<const double> times,
                                  const AnalysisOptions& options = {});

/// Peak, FWHM and fits from profiles computed elsewhere (such as a CSV).
DiffusionReport analyze_profiles(const TransformSpec& spec, std::span<const DensityProfile> profiles,
                                 const AnalysisOptions& options = {});

struct FractionalComparison {
  double time = 0.0;
  double sup_difference = 0.0;           // max_x |u_mellin - u_fractional|
  double rescaled_sup_difference = 0.0;  // the same times t^{1/alpha}
};

/// Mellin(s) against c L_1^a with the matching cusp, 1 < s < 3. Both share the
/// limit law, so the rescaled difference must vanish as t grows.
std::vector<FractionalComparison> compare_fractional(double s, std::span<const double> times,
                                                     double rel_tol = 1e-10);

}  // namespace kpath

#endif  // KPATH_ANALYSIS_HPP
