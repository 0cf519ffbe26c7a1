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

#ifndef KPATH_EVOLUTION_HPP
#define KPATH_EVOLUTION_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "kpath/multiplier.hpp"
#include "kpath/quadrature.hpp"
#include "kpath/transform.hpp"

namespace kpath {

using Site = std::int64_t;

/// Occupation numbers (u(t))_x sampled at x = -X, -X + stride, ..., X.
///
/// A stride above one lets heavy-tailed profiles cover windows far wider than
/// the number of stored values; X is always a multiple of the stride, so the
/// origin is a sample point.
struct DensityProfile {
  double time = 0.0;
  Site half_width = 0;
  Site stride = 1;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  Site site(std::size_t i) const noexcept {
    return -half_width + static_cast<Site>(i) * stride;
  }
  /// Throws ValidationError unless x is a sample point.
  double at(Site x) const;
};

/// Initial condition as (site, weight) pairs; e_0 is {{0, 1.0}}.
using InitialCondition = std::vector<std::pair<Site, double>>;

/// (1/pi) int_0^pi cos(m q) exp(-t l(q)) dq, the lag-m entry of exp(-t L) on
/// the infinite chain, to absolute error tol.
double heat_kernel_entry(const Multiplier& ell, double t, Site m, double tol = 1e-9);

/// Same integral with the quadrature diagnostics.
QuadratureResult heat_kernel_entry_detailed(const Multiplier& ell, double t, Site m,
                                            double tol = 1e-9);

/// (u(t))_x = sum_nu w_nu K_t(x - nu) on the sampled window. Each distinct lag
/// is integrated once, independently and in parallel, so results do not depend
/// on the thread count. Every entry carries absolute error <= tol * sum |w|.
DensityProfile evolve_profile(const Multiplier& ell, double t, Site half_width,
                              const InitialCondition& w, double tol = 1e-9, Site stride = 1);

/// How the infinite chain operator is cut down to 2N + 1 sites.
enum class Truncation {
  /// The transformed operator of path_graph(2N + 1): row sums vanish, so the
  /// propagator conserves mass exactly.
  kFiniteGraph,
  /// The central block of the infinite Toeplitz matrix: the diagonal keeps
  /// the full 2 sum_k c_k, so interior rows match the chain up to hops that
  /// leave the block.
  kToeplitzSection,
};

struct TruncatedEvolution {
  DensityProfile profile;
  double edge_mass = 0.0;  // sum |u_x| over the 5 outermost sites on each side
  bool boundary_contaminated = false;  // edge_mass > 1e-8
};

/// exp(-t M) for a finite symmetric cut M of a chain operator, through one
/// symmetric eigendecomposition reused for every t. Sites are -N..N.
class TruncatedChainPropagator {
 public:
  TruncatedChainPropagator(const TransformSpec& spec, Site n,
                           Truncation truncation = Truncation::kToeplitzSection);
  ~TruncatedChainPropagator();
  TruncatedChainPropagator(TruncatedChainPropagator&&) noexcept;
  TruncatedChainPropagator& operator=(TruncatedChainPropagator&&) noexcept;

  Site n() const noexcept { return n_; }

  /// Row-major (2N + 1)^2 operator and propagator, for invariant checks.
  std::vector<double> operator_matrix() const;
  std::vector<double> propagator(double t) const;

  /// Evolves w and reports sites -X..X. Throws ValidationError when X > N or
  /// w leaves the block.
  TruncatedEvolution evolve(double t, const InitialCondition& w, Site half_width) const;

 private:
  struct Impl;
  Site n_;
  std::unique_ptr<Impl> impl_;
};

/// One-shot form of TruncatedChainPropagator::evolve.
TruncatedEvolution evolve_truncated_matrix(const TransformSpec& spec, Site n, double t,
                                           const InitialCondition& w, Site half_width,
                                           Truncation truncation = Truncation::kToeplitzSection);

}  // namespace kpath

#endif  // KPATH_EVOLUTION_HPP
