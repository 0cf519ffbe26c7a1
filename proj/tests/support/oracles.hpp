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

#ifndef KPATH_TESTS_ORACLES_HPP
#define KPATH_TESTS_ORACLES_HPP

// Brute-force reference computations. None of them calls into the library
// beyond reading graph adjacency, so agreement is a genuine cross-check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath::oracle {

/// Floyd-Warshall all-pairs distances; entry [v * n + w].
inline std::vector<int> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<int> d(n * n, inf);
  for (std::size_t v = 0; v < n; ++v) {
    d[v * n + v] = 0;
    for (VertexId w : g.neighbors(static_cast<VertexId>(v))) d[v * n + static_cast<std::size_t>(w)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    }
  }
  return d;
}

/// Length of the shortest simple path from v to w found by enumerating every
/// simple path (exponential; tiny graphs only). -1 when none exists.
inline int shortest_by_enumeration(const Graph& g, VertexId v, VertexId w) {
  std::vector<bool> on_path(g.num_vertices(), false);
  int best = -1;
  std::function<void(VertexId, int)> walk = [&](VertexId u, int len) {
    if (u == w) {
      if (best < 0 || len < best) best = len;
      return;
    }
    on_path[static_cast<std::size_t>(u)] = true;
    for (VertexId x : g.neighbors(u)) {
      if (!on_path[static_cast<std::size_t>(x)]) walk(x, len + 1);
    }
    on_path[static_cast<std::size_t>(u)] = false;
  };
  walk(v, 0);
  return best;
}

/// Dense row-major n x n matrix helpers.
inline std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  }
  return c;
}

/// exp(-t M) by scaling and squaring of a Taylor polynomial.
inline std::vector<double> expm_negative(const std::vector<double>& m, std::size_t n, double t) {
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(m[i * n + j]);
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (t * norm / std::ldexp(1.0, squarings) > 0.25) ++squarings;
  const double h = -t / std::ldexp(1.0, squarings);

  std::vector<double> result(n * n, 0.0);
  std::vector<double> term(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = term[i * n + i] = 1.0;
  std::vector<double> a(m);
  for (double& x : a) x *= h;
  for (int k = 1; k <= 30; ++k) {
    term = matmul(term, a, n);
    for (double& x : term) x /= k;
    for (std::size_t i = 0; i < n * n; ++i) result[i] += term[i];
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result, n);
  return result;
}

/// sum_{k=1}^{K} c(k) 2 (1 - cos(k q)): the defining series of a chain symbol.
inline double symbol_partial_sum(const std::function<double(int)>& c, double q, int K) {
  double sum = 0.0;
  for (int k = K; k >= 1; --k) sum += c(k) * 2.0 * (1.0 - std::cos(k * q));
  return sum;
}

/// e^{-2t} I_m(2t) by its power series: the heat kernel of the standard chain.
inline double bessel_heat_kernel(double t, int m) {
  m = std::abs(m);
  double term = std::exp(-2.0 * t + m * std::log(t) - std::lgamma(m + 1.0));
  double sum = 0.0;
  for (int j = 0; j < 400; ++j) {
    sum += term;
    term *= t * t / ((j + 1.0) * (j + 1.0 + m));
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

/// Composite Simpson rule on [a, b] with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

}  // namespace kpath::oracle

#endif  // KPATH_TESTS_ORACLES_HPP
