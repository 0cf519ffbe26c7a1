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

#include "kpath/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kpath/error.hpp"
#include "kpath/multiplier.hpp"
#include "kpath/parallel.hpp"
#include "kpath/special_functions.hpp"

namespace kpath {

namespace {

constexpr double kGaussianWindowSigmas = 4.1;  // erfc(4.1) < 1e-8
constexpr double kHeavyTailScales = 40.0;
constexpr double kSamplesPerScale = 25.0;

LimitPrediction make_prediction(double alpha, double gamma) {
  Regime regime = Regime::kSuperdiffusive;
  if (alpha == 2.0) regime = Regime::kNormal;
  if (alpha == 1.0) regime = Regime::kBallistic;
  return {alpha, gamma, 2.0 / alpha, regime};
}

void check_times(std::span<const double> times) {
  if (times.empty()) throw ValidationError("times must not be empty");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || !std::isfinite(times[i])) throw ValidationError("times must be finite and > 0");
    if (i > 0 && !(times[i] > times[i - 1])) throw ValidationError("times must be strictly increasing");
  }
}

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::kNormal:
      return "normal";
    case Regime::kSuperdiffusive:
      return "superdiffusive";
    case Regime::kBallistic:
      return "ballistic";
  }
  return "unknown";
}

Regime parse_regime(std::string_view name) {
  for (Regime r : {Regime::kNormal, Regime::kSuperdiffusive, Regime::kBallistic}) {
    if (regime_name(r) == name) return r;
  }
  throw ValidationError("unknown regime '" + std::string(name) + "'");
}

LimitPrediction asymptotic_params(const TransformSpec& spec) {
  if (spec.is<PureK>()) return make_prediction(2.0, spec.as<PureK>().k);
  if (spec.is<Laplace>()) {
    const double e = std::exp(spec.as<Laplace>().lambda);
    return make_prediction(2.0, std::sqrt(e * (e + 1.0) / std::pow(e - 1.0, 3)));
  }
  if (spec.is<Factorial>()) {
    const double z = spec.as<Factorial>().z;
    return make_prediction(2.0, std::sqrt(z * (z + 1.0) * std::exp(z)));
  }
  if (spec.is<Mellin>()) {
    const double s = spec.as<Mellin>().s;
    if (s > 3.0) return make_prediction(2.0, std::sqrt(zeta_real(s - 2.0)));
    return make_prediction(s - 1.0, std::pow(mellin_cusp_coefficient(s), 1.0 / (s - 1.0)));
  }
  const auto& f = spec.as<FractionalPower>();
  return make_prediction(2.0 * f.a, std::pow(f.c, 1.0 / (2.0 * f.a)));
}

Window choose_window(const LimitPrediction& pred, double t) {
  if (!(t > 0.0)) throw ValidationError("window selection needs t > 0");
  if (pred.alpha == 2.0) {
    // Limit density exp(-x^2 / (4 gamma^2 t)): standard deviation gamma sqrt(2t).
    const double reach = kGaussianWindowSigmas * 2.0 * pred.gamma * std::sqrt(t);
    return {static_cast<Site>(std::ceil(reach)) + 10, 1};
  }
  const double scale = pred.gamma * std::pow(t, 1.0 / pred.alpha);
  const Site stride = std::max<Site>(1, static_cast<Site>(std::floor(scale / kSamplesPerScale)));
  const Site units = std::max<Site>(10, static_cast<Site>(std::ceil(kHeavyTailScales * scale / stride)));
  return {units * stride, stride};
}

double peak_height(const DensityProfile& p) {
  if (p.values.empty()) throw ValidationError("peak of an empty profile");
  return p.at(0);
}

double fwhm(const DensityProfile& p) {
  const double half = 0.5 * peak_height(p);
  const std::size_t origin = static_cast<std::size_t>(p.half_width / p.stride);
  for (std::size_t i = origin + 1; i < p.values.size(); ++i) {
    if (p.values[i] <= half) {
      const double before = p.values[i - 1];
      const double frac = (before - half) / (before - p.values[i]);
      const double x_half = static_cast<double>(p.site(i - 1)) + frac * static_cast<double>(p.stride);
      return 2.0 * x_half;
    }
  }
  throw ValidationError("profile at t = " + std::to_string(p.time) +
                        " stays above half its peak across the window; enlarge the window");
}

double msd_windowed(const DensityProfile& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    const auto x = static_cast<double>(p.site(i));
    sum += x * x * p.values[i];
  }
  return static_cast<double>(p.stride) * sum;
}

PowerLawFit fit_power_law(std::span<const double> t, std::span<const double> y) {
  if (t.size() != y.size()) throw ValidationError("power-law fit needs as many values as times");
  if (t.size() < 3) throw ValidationError("power-law fit needs at least 3 points");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(y[i] > 0.0)) throw ValidationError("power-law fit needs positive data");
    if (i > 0 && !(t[i] > t[i - 1])) throw ValidationError("power-law fit needs strictly increasing t");
  }
  const auto n = static_cast<double>(t.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    mx += std::log(t[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double dx = std::log(t[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  fit.prefactor = std::exp(intercept);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = std::log(y[i]) - (intercept + fit.exponent * std::log(t[i]));
    fit.max_residual = std::max(fit.max_residual, std::abs(r));
  }
  return fit;
}

double fit_prefactor(std::span<const double> t, std::span<const double> y, double exponent) {
  if (t.size() != y.size() || t.empty()) throw ValidationError("prefactor fit needs matching, nonempty data");
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(y[i] > 0.0)) throw ValidationError("prefactor fit needs positive data");
    sum += std::log(y[i]) - exponent * std::log(t[i]);
  }
  return std::exp(sum / static_cast<double>(t.size()));
}

double compare_profile_to_limit(const DensityProfile& p, const LimitPrediction& pred, double density_tol) {
  if (!(p.time > 0.0)) throw ValidationError("limit comparison needs t > 0");
  const StableParams law = pred.stable();
  const double scale = std::pow(p.time, 1.0 / pred.alpha);

  // The limit density is even: evaluate it once per distinct |x|.
  std::vector<Site> radii;
  radii.reserve(p.values.size());
  for (std::size_t i = 0; i < p.values.size(); ++i) radii.push_back(std::abs(p.site(i)));
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  std::vector<double> limit(radii.size());
  parallel_for(radii.size(), [&](std::size_t i) {
    limit[i] = stable_density(static_cast<double>(radii[i]) / scale, law, density_tol);
  });

  double sup = 0.0;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    const auto it = std::lower_bound(radii.begin(), radii.end(), std::abs(p.site(i)));
    const double f = limit[static_cast<std::size_t>(it - radii.begin())];
    sup = std::max(sup, std::abs(scale * p.values[i] - f));
  }
  return sup;
}

DiffusionReport analyze_profiles(const TransformSpec& spec, std::span<const DensityProfile> profiles,
                                 const AnalysisOptions& options) {
  DiffusionReport report;
  report.transform = spec.describe();
  report.predicted = asymptotic_params(spec);
  const bool normal = report.predicted.alpha == 2.0;
  const bool with_msd = normal || options.force_msd;
  report.msd_window_dependent = !normal;

  for (const auto& p : profiles) report.times.push_back(p.time);
  check_times(report.times);
  const double density_tol = options.rel_tol * stable_peak(report.predicted.stable());
  for (const auto& p : profiles) {
    report.half_widths.push_back(p.half_width);
    report.strides.push_back(p.stride);
    report.peaks.push_back(peak_height(p));
    report.fwhm.push_back(fwhm(p));
    if (with_msd) report.msd.push_back(msd_windowed(p));
    if (options.sup_errors) {
      report.sup_errors.push_back(compare_profile_to_limit(p, report.predicted, density_tol));
    }
  }
  if (report.times.size() >= 3) {
    report.peak_fit = fit_power_law(report.times, report.peaks);
    report.fwhm_fit = fit_power_law(report.times, report.fwhm);
  }
  return report;
}

DiffusionReport analyze_diffusion(const TransformSpec& spec, std::span<const double> times,
                                  const AnalysisOptions& options) {
  check_times(times);
  if (!(options.rel_tol > 0.0)) throw ValidationError("relative tolerance must be > 0");
  const Multiplier ell(spec);
  const LimitPrediction pred = asymptotic_params(spec);
  const double limit_peak = stable_peak(pred.stable());
  std::vector<DensityProfile> profiles;
  profiles.reserve(times.size());
  for (double t : times) {
    const Window w = choose_window(pred, t);
    const double peak = std::min(1.0, limit_peak * std::pow(t, -1.0 / pred.alpha));
    profiles.push_back(evolve_profile(ell, t, w.half_width, {{0, 1.0}}, options.rel_tol * peak, w.stride));
  }
  return analyze_profiles(spec, profiles, options);
}

std::vector<FractionalComparison> compare_fractional(double s, std::span<const double> times, double rel_tol) {
  if (!(s > 1.0 && s < 3.0)) throw ValidationError("fractional comparison needs 1 < s < 3");
  check_times(times);
  const TransformSpec mellin = TransformSpec::mellin(s);
  const Multiplier ell_m(mellin);
  const Multiplier ell_f(TransformSpec::fractional_matching_mellin(s));
  const LimitPrediction pred = asymptotic_params(mellin);
  const double limit_peak = stable_peak(pred.stable());

  std::vector<FractionalComparison> out;
  for (double t : times) {
    const Window w = choose_window(pred, t);
    const double scale = std::pow(t, 1.0 / pred.alpha);
    const double tol = rel_tol * std::min(1.0, limit_peak / scale);
    const DensityProfile a = evolve_profile(ell_m, t, w.half_width, {{0, 1.0}}, tol, w.stride);
    const DensityProfile b = evolve_profile(ell_f, t, w.half_width, {{0, 1.0}}, tol, w.stride);
    double sup = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) sup = std::max(sup, std::abs(a.values[i] - b.values[i]));
    out.push_back({t, sup, scale * sup});
  }
  return out;
}

}  // namespace kpath
