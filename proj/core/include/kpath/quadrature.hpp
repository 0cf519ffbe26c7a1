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

#ifndef KPATH_QUADRATURE_HPP
#define KPATH_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace kpath {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Globally adaptive Gauss-Kronrod (10/21 point) integration.
///
/// The interval is [breakpoints.front(), breakpoints.back()]; every interior
/// breakpoint starts as a panel edge. The panel with the largest |K21 - G10|
/// is bisected until the summed estimate is <= abs_tol. Panels whose estimate
/// is at the round-off floor, or stops shrinking under bisection while already
/// tiny relative to the panel's integral of |f|, are not split further, so a tolerance
/// below machine precision returns the best achievable result with its honest
/// error estimate. Throws NumericalError once more than max_panels panels
/// would be needed.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints, double abs_tol,
                                    int max_panels = 20000);

/// Sorted, de-duplicated breakpoints on [lo, hi] graded geometrically toward
/// each anchor: anchor +/- (hi - lo) 2^{-j} for j = 1..levels, plus the
/// anchors and end points themselves.
std::vector<double> graded_breakpoints(double lo, double hi, std::span<const double> anchors,
                                       int levels);

}  // namespace kpath

#endif  // KPATH_QUADRATURE_HPP
