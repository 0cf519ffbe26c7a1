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

#include "kpath/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "kpath/error.hpp"
#include "kpath/graph.hpp"
#include "kpath/operators.hpp"
#include "kpath/parallel.hpp"

namespace kpath {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxForcedPanels = 20000;
constexpr Site kEdgeSites = 5;
constexpr double kEdgeMassThreshold = 1e-8;

// Panel edges on [0, pi]: geometric grading toward every zero of the symbol
// down to 1% of the concentration scale q* = (c t)^{-1/p}, and, where the
// envelope exp(-t l) is still above tol, spacing short enough that no panel
// spans more than two periods of cos(m q).
std::vector<double> kernel_breakpoints(const Multiplier& ell, double t, Site m, double tol) {
  const double c = ell.small_q_coefficient();
  const double p = ell.small_q_exponent();
  const double q_star = std::min(kPi, std::pow(c * t, -1.0 / p));
  const int levels = std::clamp(static_cast<int>(std::ceil(std::log2(kPi / (0.01 * q_star)))), 4, 60);
  std::vector<double> pts = graded_breakpoints(0.0, kPi, ell.zeros(), levels);
  for (double f = 1.0; f <= 16.0; f *= 2.0) {
    if (f * q_star < kPi) pts.push_back(f * q_star);
  }

  if (m > 0) {
    const double decay = -std::log(tol) + 10.0;
    const double reach = std::min(kPi, std::pow(decay / (c * t), 1.0 / p));
    const double h = 4.0 * kPi / static_cast<double>(m);
    const std::size_t per_zero = static_cast<std::size_t>(reach / h);
    if (per_zero * ell.zeros().size() * 2 <= kMaxForcedPanels) {
      for (double z : ell.zeros()) {
        for (std::size_t j = 1; j <= per_zero; ++j) {
          const double off = static_cast<double>(j) * h;
          if (z - off > 0.0) pts.push_back(z - off);
          if (z + off < kPi) pts.push_back(z + off);
        }
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

double DensityProfile::at(Site x) const {
  const Site offset = x + half_width;
  if (offset < 0 || offset % stride != 0 || offset / stride >= static_cast<Site>(values.size())) {
    throw ValidationError("site " + std::to_string(x) + " is not sampled by this profile");
  }
  return values[static_cast<std::size_t>(offset / stride)];
}

QuadratureResult heat_kernel_entry_detailed(const Multiplier& ell, double t, Site m, double tol) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("time must be finite and >= 0");
  if (!(tol > 0.0)) throw ValidationError("kernel tolerance must be > 0");
  m = m < 0 ? -m : m;
  if (t == 0.0 || ell.small_q_coefficient() == 0.0) {
    // exp(-t l) == 1: the integral of cos(m q) over [0, pi].
    return {m == 0 ? 1.0 : 0.0, 0.0, 0};
  }

  const std::vector<double> pts = kernel_breakpoints(ell, t, m, tol);
  const double md = static_cast<double>(m);
  auto integrand = [&](double q) { return std::cos(md * q) * std::exp(-t * ell(q)); };
  const int budget = std::max(20000, static_cast<int>(4 * pts.size()) + 1000);
  QuadratureResult r = integrate_adaptive(integrand, pts, kPi * tol, budget);
  r.value /= kPi;
  r.error_estimate /= kPi;
  return r;
}

double heat_kernel_entry(const Multiplier& ell, double t, Site m, double tol) {
  return heat_kernel_entry_detailed(ell, t, m, tol).value;
}

DensityProfile evolve_profile(const Multiplier& ell, double t, Site half_width,
                              const InitialCondition& w, double tol, Site stride) {
  if (half_width < 0) throw ValidationError("window half-width must be >= 0");
  if (stride < 1) throw ValidationError("stride must be >= 1");
  if (half_width % stride != 0) throw ValidationError("window half-width must be a multiple of the stride");
  for (const auto& [site, weight] : w) {
    if (site < -half_width || site > half_width) {
      throw ValidationError("initial condition site " + std::to_string(site) + " lies outside the window");
    }
    if (!std::isfinite(weight)) throw ValidationError("initial condition weight must be finite");
  }

  DensityProfile profile{t, half_width, stride, {}};
  const std::size_t samples = static_cast<std::size_t>(2 * (half_width / stride) + 1);
  profile.values.assign(samples, 0.0);

  std::vector<Site> lags;
  lags.reserve(samples * std::max<std::size_t>(w.size(), 1));
  for (std::size_t i = 0; i < samples; ++i) {
    for (const auto& entry : w) {
      const Site d = profile.site(i) - entry.first;
      lags.push_back(d < 0 ? -d : d);
    }
  }
  std::sort(lags.begin(), lags.end());
  lags.erase(std::unique(lags.begin(), lags.end()), lags.end());

  std::vector<double> kernel(lags.size());
  parallel_for(lags.size(), [&](std::size_t i) { kernel[i] = heat_kernel_entry(ell, t, lags[i], tol); });

  for (std::size_t i = 0; i < samples; ++i) {
    double sum = 0.0;
    for (const auto& [site, weight] : w) {
      const Site d = profile.site(i) - site;
      const auto it = std::lower_bound(lags.begin(), lags.end(), d < 0 ? -d : d);
      sum += weight * kernel[static_cast<std::size_t>(it - lags.begin())];
    }
    profile.values[i] = sum;
  }
  return profile;
}

struct TruncatedChainPropagator::Impl {
  Eigen::MatrixXd op;
  Eigen::MatrixXd vectors;
  Eigen::VectorXd values;
};

namespace {

Eigen::MatrixXd finite_graph_operator(const TransformSpec& spec, Site n) {
  const Graph g = path_graph(static_cast<VertexId>(2 * n + 1));
  const SparseSymMatrix m = transformed_laplacian_matrix(g, spec, 1e-14).matrix;
  const auto dim = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& e : m.entries()) {
    const auto r = static_cast<Eigen::Index>(e.row);
    const auto c = static_cast<Eigen::Index>(e.col);
    out(r, c) = e.value;
    out(c, r) = e.value;
  }
  return out;
}

Eigen::MatrixXd toeplitz_section(const TransformSpec& spec, Site n) {
  const Eigen::Index dim = 2 * n + 1;
  std::vector<double> band(static_cast<std::size_t>(dim));
  if (spec.is<PureK>()) {
    const int k = spec.as<PureK>().k;
    band[0] = 2.0;
    if (k < dim) band[static_cast<std::size_t>(k)] = -1.0;
  } else if (spec.is_series()) {
    for (Eigen::Index d = 0; d < dim; ++d) band[static_cast<std::size_t>(d)] = transformed_action_on_e0(spec, d);
  } else {
    throw ValidationError(spec.describe() + " has no matrix form; use the chain multiplier");
  }
  Eigen::MatrixXd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) out(r, c) = band[static_cast<std::size_t>(std::abs(r - c))];
  }
  return out;
}

}  // namespace

TruncatedChainPropagator::TruncatedChainPropagator(const TransformSpec& spec, Site n,
                                                   Truncation truncation)
    : n_(n), impl_(std::make_unique<Impl>()) {
  if (n < 1) throw ValidationError("truncation size N must be >= 1");
  if (n > 5000) throw ValidationError("truncation size N must be <= 5000 for a dense eigendecomposition");
  impl_->op = truncation == Truncation::kFiniteGraph ? finite_graph_operator(spec, n)
                                                     : toeplitz_section(spec, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(impl_->op);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigendecomposition failed");
  impl_->vectors = solver.eigenvectors();
  impl_->values = solver.eigenvalues();
}

TruncatedChainPropagator::~TruncatedChainPropagator() = default;
TruncatedChainPropagator::TruncatedChainPropagator(TruncatedChainPropagator&&) noexcept = default;
TruncatedChainPropagator& TruncatedChainPropagator::operator=(TruncatedChainPropagator&&) noexcept = default;

std::vector<double> TruncatedChainPropagator::operator_matrix() const {
  const auto& m = impl_->op;
  std::vector<double> out(static_cast<std::size_t>(m.size()));
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(out.data(), m.rows(), m.cols()) = m;
  return out;
}

std::vector<double> TruncatedChainPropagator::propagator(double t) const {
  if (!(t >= 0.0)) throw ValidationError("time must be >= 0");
  const auto& v = impl_->vectors;
  const Eigen::VectorXd decay = (-t * impl_->values).array().exp();
  const Eigen::MatrixXd p = v * decay.asDiagonal() * v.transpose();
  std::vector<double> out(static_cast<std::size_t>(p.size()));
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(out.data(), p.rows(), p.cols()) = p;
  return out;
}

TruncatedEvolution TruncatedChainPropagator::evolve(double t, const InitialCondition& w,
                                                    Site half_width) const {
  if (!(t >= 0.0)) throw ValidationError("time must be >= 0");
  if (half_width < 0 || half_width > n_) {
    throw ValidationError("window half-width " + std::to_string(half_width) +
                          " exceeds the truncation size N = " + std::to_string(n_));
  }
  const Eigen::Index dim = 2 * n_ + 1;
  Eigen::VectorXd w0 = Eigen::VectorXd::Zero(dim);
  for (const auto& [site, weight] : w) {
    if (site < -n_ || site > n_) {
      throw ValidationError("initial condition site " + std::to_string(site) + " lies outside -N..N");
    }
    w0(site + n_) += weight;
  }
  const auto& v = impl_->vectors;
  const Eigen::VectorXd coeff = (-t * impl_->values).array().exp() * (v.transpose() * w0).array();
  const Eigen::VectorXd u = v * coeff;

  TruncatedEvolution out;
  out.profile.time = t;
  out.profile.half_width = half_width;
  out.profile.values.resize(static_cast<std::size_t>(2 * half_width + 1));
  for (Site x = -half_width; x <= half_width; ++x) {
    out.profile.values[static_cast<std::size_t>(x + half_width)] = u(x + n_);
  }
  for (Site j = 0; j < std::min(kEdgeSites, n_ + 1); ++j) {
    out.edge_mass += std::abs(u(j)) + (dim - 1 - j != j ? std::abs(u(dim - 1 - j)) : 0.0);
  }
  out.boundary_contaminated = out.edge_mass > kEdgeMassThreshold;
  return out;
}

TruncatedEvolution evolve_truncated_matrix(const TransformSpec& spec, Site n, double t,
                                           const InitialCondition& w, Site half_width,
                                           Truncation truncation) {
  return TruncatedChainPropagator(spec, n, truncation).evolve(t, w, half_width);
}

}  // namespace kpath
