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

#ifndef KPATH_SPECIAL_FUNCTIONS_HPP
#define KPATH_SPECIAL_FUNCTIONS_HPP

namespace kpath {

/// Riemann zeta on the real line, x != 1.
///
/// x >= 0 uses the Euler-Maclaurin continuation of sum k^{-x}; x < 0 goes
/// through the reflection zeta(1-y) = 2 (2 pi)^{-y} cos(pi y / 2) Gamma(y) zeta(y).
/// Negative even integers return exactly 0. Throws ValidationError at x = 1.
double zeta_real(double x);

/// -pi / (Gamma(s) cos(pi s / 2)): the coefficient of |q|^{s-1} in the Mellin
/// multiplier, positive for 1 < s < 3.
double mellin_cusp_coefficient(double s);

}  // namespace kpath

#endif  // KPATH_SPECIAL_FUNCTIONS_HPP
