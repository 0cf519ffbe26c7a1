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

#ifndef KPATH_OPERATORS_HPP
#define KPATH_OPERATORS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/transform.hpp"

namespace kpath {

/// Symmetric matrix holding each off-diagonal pair once (row < col) plus the
/// diagonal. Entries are kept sorted by (row, col); duplicates are summed and
/// exact zeros dropped on construction.
class SparseSymMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    double value;
  };

  explicit SparseSymMatrix(std::size_t dimension, std::vector<Entry> entries = {});

  std::size_t dimension() const noexcept { return dim_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t stored_entries() const noexcept { return entries_.size(); }

  /// Value at (row, col) in either orientation.
  double at(std::size_t row, std::size_t col) const;

  std::vector<double> multiply(std::span<const double> x) const;
  std::vector<double> row(std::size_t r) const;

  /// Row-major dense copy.
  std::vector<double> to_dense() const;

 private:
  std::size_t dim_;
  std::vector<Entry> entries_;
};

/// (L_k f)(v) = sum over w with d(v, w) = k of f(v) - f(w).
std::vector<double> apply_k_path_laplacian(const Graph& g, int k, std::span<const double> f);

SparseSymMatrix k_path_laplacian_matrix(const Graph& g, int k);

/// Upper bound on delta_{k,max} of the form C * k^alpha (alpha = 0 gives a
/// constant bound). The caller supplies it; nothing here tries to infer it.
struct DegreeGrowthBound {
  double constant = 2.0;
  double exponent = 0.0;

  double operator()(int k) const;
};

/// Coefficients c_1..c_K of a weighted k-sum with a certificate on the
/// operator norm of everything dropped.
struct CoefficientSeries {
  std::vector<double> coefficients;  // coefficients[k - 1] = c_k
  double tail_bound = 0.0;

  int terms() const noexcept { return static_cast<int>(coefficients.size()); }
};

/// Operator-norm bound on sum_{k > K} c_k L_k, using ||L_k|| <= 2 delta_{k,max}.
/// Valid for every K >= 0; the Laplace and Factorial bounds also cover k = K.
/// Returns +infinity when the bound cannot be established at this K.
double certified_tail_bound(const TransformSpec& spec, int K, const DegreeGrowthBound& delta);

/// Smallest K whose certified tail is <= tol. Valid for Laplace, Factorial and
/// Mellin specs. Throws ValidationError for tol <= 0, for non-series specs, or
/// for Mellin with exponent >= s - 1; NumericalError if K would exceed
/// max_terms.
CoefficientSeries transform_coefficients(const TransformSpec& spec, double tol,
                                         const DegreeGrowthBound& delta,
                                         int max_terms = 10'000'000);

struct TransformedOperator {
  SparseSymMatrix matrix;
  int terms = 0;           // highest k included
  double tail_bound = 0.0; // operator-norm bound on the omitted terms
};

/// sum_k c_k L_k on a finite graph. L_k vanishes beyond the diameter, so the
/// sum is exact unless a shorter certified truncation is already within tol.
/// PureK specs give L_k itself; FractionalPower is rejected.
TransformedOperator transformed_laplacian_matrix(const Graph& g, const TransformSpec& spec,
                                                 double tol = 1e-10);

/// (delta_{k,max}, 2 delta_{k,max}): the spectral norm of L_k lies in between.
std::pair<double, double> norm_bounds(const Graph& g, int k);

/// Largest eigenvalue of a non-negative symmetric matrix by power iteration.
/// The returned Rayleigh quotient never exceeds the true value.
double spectral_norm(const SparseSymMatrix& m, int max_iterations = 20000, double rel_tol = 1e-12);

}  // namespace kpath

#endif  // KPATH_OPERATORS_HPP
