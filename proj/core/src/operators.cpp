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

#include "kpath/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "kpath/error.hpp"

namespace kpath {

SparseSymMatrix::SparseSymMatrix(std::size_t dimension, std::vector<Entry> entries)
    : dim_(dimension) {
  for (auto& e : entries) {
    if (e.row >= dim_ || e.col >= dim_) {
      throw ValidationError("matrix entry outside the dimension");
    }
    if (e.row > e.col) std::swap(e.row, e.col);
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (const auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.value == 0.0; });
}

double SparseSymMatrix::at(std::size_t row, std::size_t col) const {
  if (row > col) std::swap(row, col);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return e.row != key.first ? e.row < key.first : e.col < key.second;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0.0;
}

std::vector<double> SparseSymMatrix::multiply(std::span<const double> x) const {
  if (x.size() != dim_) throw ValidationError("vector length does not match matrix dimension");
  std::vector<double> y(dim_, 0.0);
  for (const auto& e : entries_) {
    y[e.row] += e.value * x[e.col];
    if (e.row != e.col) y[e.col] += e.value * x[e.row];
  }
  return y;
}

std::vector<double> SparseSymMatrix::row(std::size_t r) const {
  if (r >= dim_) throw ValidationError("row index outside the dimension");
  std::vector<double> out(dim_, 0.0);
  for (const auto& e : entries_) {
    if (e.row == r) out[e.col] = e.value;
    if (e.col == r) out[e.row] = e.value;
  }
  return out;
}

std::vector<double> SparseSymMatrix::to_dense() const {
  std::vector<double> out(dim_ * dim_, 0.0);
  for (const auto& e : entries_) {
    out[e.row * dim_ + e.col] = e.value;
    out[e.col * dim_ + e.row] = e.value;
  }
  return out;
}

std::vector<double> apply_k_path_laplacian(const Graph& g, int k, std::span<const double> f) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  if (f.size() != g.num_vertices()) {
    throw ValidationError("function must be defined on every vertex");
  }
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t v = 0; v < f.size(); ++v) {
    const auto row = distance_row(g, static_cast<VertexId>(v), k);
    double acc = 0.0;
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (row[w] == k) acc += f[v] - f[w];
    }
    out[v] = acc;
  }
  return out;
}

SparseSymMatrix k_path_laplacian_matrix(const Graph& g, int k) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  std::vector<SparseSymMatrix::Entry> entries;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto row = distance_row(g, static_cast<VertexId>(v), k);
    std::size_t degree = 0;
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (row[w] != k) continue;
      ++degree;
      if (v < w) entries.push_back({v, w, -1.0});
    }
    if (degree > 0) entries.push_back({v, v, static_cast<double>(degree)});
  }
  return SparseSymMatrix(g.num_vertices(), std::move(entries));
}

double DegreeGrowthBound::operator()(int k) const {
  return exponent == 0.0 ? constant : constant * std::pow(static_cast<double>(k), exponent);
}

double certified_tail_bound(const TransformSpec& spec, int K, const DegreeGrowthBound& delta) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int k0 = std::max(K, 1);
  const double kk = k0;
  const double alpha = delta.exponent;
  const double two_c = 2.0 * delta.constant;

  if (spec.is<Laplace>()) {
    const double lambda = spec.as<Laplace>().lambda;
    // Term ratios from k0 onward are at most e^{-lambda} ((k0+1)/k0)^alpha.
    const double ratio = std::exp(-lambda) * std::pow((kk + 1.0) / kk, alpha);
    if (ratio >= 1.0) return kInf;
    return two_c * std::pow(kk, alpha) * std::exp(-lambda * kk) / (1.0 - ratio);
  }
  if (spec.is<Factorial>()) {
    const double z = spec.as<Factorial>().z;
    if (z == 0.0) return 0.0;
    const double ratio = z / (kk + 1.0) * std::pow((kk + 1.0) / kk, alpha);
    if (ratio >= 1.0) return kInf;
    return two_c * std::pow(kk, alpha) * spec.coefficient(k0) / (1.0 - ratio);
  }
  if (spec.is<Mellin>()) {
    const double decay = spec.as<Mellin>().s - alpha;  // terms behave like k^{-decay}
    if (decay <= 1.0) return kInf;
    // sum_{k > K} k^{-decay} <= integral_K^inf; the whole sum needs 1 + integral_1^inf.
    const double integral = std::pow(kk, 1.0 - decay) / (decay - 1.0);
    return two_c * (K == 0 ? 1.0 + integral : integral);
  }
  if (spec.is<PureK>()) {
    return spec.as<PureK>().k > K ? two_c * std::pow(spec.as<PureK>().k, alpha) : 0.0;
  }
  throw ValidationError("fractional power has no k-path expansion");
}

CoefficientSeries transform_coefficients(const TransformSpec& spec, double tol,
                                         const DegreeGrowthBound& delta, int max_terms) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be > 0");
  if (!spec.is_series()) {
    throw ValidationError("transform_coefficients needs a laplace, factorial or mellin spec");
  }
  if (!(delta.constant > 0.0) || !(delta.exponent >= 0.0)) {
    throw ValidationError("degree bound needs C > 0 and exponent >= 0");
  }
  if (spec.is<Mellin>() && delta.exponent >= spec.as<Mellin>().s - 1.0) {
    throw ValidationError(
        "mellin series is not certifiably summable: degree growth exponent must be < s - 1");
  }

  CoefficientSeries out;
  if (spec.is<Factorial>() && spec.as<Factorial>().z == 0.0) return out;

  int K = 0;
  if (spec.is<Mellin>()) {
    // Solve 2C K^{1-d}/(d-1) <= tol directly, then nudge for rounding.
    const double d = spec.as<Mellin>().s - delta.exponent;
    const double k_real = std::pow(2.0 * delta.constant / ((d - 1.0) * tol), 1.0 / (d - 1.0));
    if (!(k_real < static_cast<double>(max_terms))) {
      throw NumericalError("mellin tail certificate needs more than " +
                           std::to_string(max_terms) + " terms");
    }
    K = std::max(1, static_cast<int>(std::floor(k_real)) - 1);
    while (certified_tail_bound(spec, K, delta) > tol) ++K;
    while (K > 1 && certified_tail_bound(spec, K - 1, delta) <= tol) --K;
  } else {
    while (certified_tail_bound(spec, K, delta) > tol) {
      if (++K > max_terms) {
        throw NumericalError("tail certificate needs more than " + std::to_string(max_terms) +
                             " terms");
      }
    }
  }
  if (K > max_terms) {
    throw NumericalError("tail certificate needs more than " + std::to_string(max_terms) +
                         " terms");
  }
  out.coefficients.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) out.coefficients.push_back(spec.coefficient(k));
  out.tail_bound = certified_tail_bound(spec, K, delta);
  return out;
}

TransformedOperator transformed_laplacian_matrix(const Graph& g, const TransformSpec& spec,
                                                 double tol) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be > 0");
  if (spec.is<FractionalPower>()) {
    throw ValidationError("fractional power cannot be assembled from k-path Laplacians");
  }
  if (spec.is<PureK>()) {
    return {k_path_laplacian_matrix(g, spec.as<PureK>().k), spec.as<PureK>().k, 0.0};
  }

  const int diam = diameter(g);
  // A finite graph never has more than n - 1 vertices at any distance.
  const DegreeGrowthBound crude{static_cast<double>(std::max<std::size_t>(g.num_vertices() - 1, 1)),
                                0.0};
  int terms = diam;
  double tail = 0.0;
  for (int K = 0; K < diam; ++K) {
    const double bound = certified_tail_bound(spec, K, crude);
    if (bound <= tol) {
      terms = K;
      tail = bound;
      break;
    }
  }

  std::vector<double> c(static_cast<std::size_t>(terms) + 1, 0.0);
  for (int k = 1; k <= terms; ++k) c[static_cast<std::size_t>(k)] = spec.coefficient(k);

  std::vector<SparseSymMatrix::Entry> entries;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto row = distance_row(g, static_cast<VertexId>(v), terms);
    double diag = 0.0;
    for (std::size_t w = 0; w < row.size(); ++w) {
      const int d = row[w];
      if (d < 1) continue;
      const double ck = c[static_cast<std::size_t>(d)];
      diag += ck;
      if (v < w) entries.push_back({v, w, -ck});
    }
    entries.push_back({v, v, diag});
  }
  return {SparseSymMatrix(g.num_vertices(), std::move(entries)), terms, tail};
}

std::pair<double, double> norm_bounds(const Graph& g, int k) {
  const auto dmax = static_cast<double>(max_k_path_degree(g, k));
  return {dmax, 2.0 * dmax};
}

double spectral_norm(const SparseSymMatrix& m, int max_iterations, double rel_tol) {
  const std::size_t n = m.dimension();
  if (n == 0 || m.stored_entries() == 0) return 0.0;
  std::mt19937_64 rng(0x6b70617468ULL);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& xi : x) xi = uni(rng);

  auto normalize = [](std::vector<double>& v) {
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (norm == 0.0) return false;
    for (auto& vi : v) vi /= norm;
    return true;
  };
  normalize(x);

  double rayleigh = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    auto y = m.multiply(x);
    const double next = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    if (!normalize(y)) return 0.0;
    x.swap(y);
    if (it > 0 && std::abs(next - rayleigh) <= rel_tol * std::abs(next)) {
      rayleigh = next;
      break;
    }
    rayleigh = next;
  }
  return rayleigh;
}

}  // namespace kpath
