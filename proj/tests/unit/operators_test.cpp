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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "kpath/error.hpp"
#include "kpath/graph.hpp"
#include "kpath/operators.hpp"
#include "oracles.hpp"

namespace kpath {
namespace {

std::vector<Graph> fixtures() {
  std::vector<Graph> out;
  out.push_back(path_graph(41));
  out.push_back(cycle_graph(15));
  out.push_back(ladder_graph(9));
  out.push_back(square_lattice(7, 6));
  out.push_back(triangular_lattice(6, 6));
  out.push_back(hexagonal_lattice(8, 6));
  out.push_back(generation_tree(4));
  return out;
}

std::vector<double> unit_vector(std::size_t n, std::size_t v) {
  std::vector<double> e(n, 0.0);
  e[v] = 1.0;
  return e;
}

TEST(ApplyKPathLaplacian, ConstantsAreInTheKernel) {
  for (const auto& g : fixtures()) {
    const std::vector<double> ones(g.num_vertices(), 3.5);
    for (int k = 1; k <= 4; ++k) {
      for (double y : apply_k_path_laplacian(g, k, ones)) EXPECT_EQ(y, 0.0);
    }
  }
}

TEST(ApplyKPathLaplacian, UnitVectorGivesDegreeAndMinusOnes) {
  const Graph g = square_lattice(5, 5);
  for (int k = 1; k <= 3; ++k) {
    const auto nb = k_neighborhood(g, 12, k);
    const auto y = apply_k_path_laplacian(g, k, unit_vector(25, 12));
    for (std::size_t w = 0; w < 25; ++w) {
      double expected = 0.0;
      if (w == 12) expected = static_cast<double>(nb.degree());
      if (std::binary_search(nb.members.begin(), nb.members.end(), static_cast<VertexId>(w))) expected = -1.0;
      EXPECT_EQ(y[w], expected);
    }
  }
}

TEST(ApplyKPathLaplacian, PathFiveSecondHop) {
  const auto y = apply_k_path_laplacian(path_graph(5), 2, unit_vector(5, 2));
  EXPECT_EQ(y, (std::vector<double>{-1, 0, 2, 0, -1}));
}

TEST(ApplyKPathLaplacian, RejectsBadInput) {
  const Graph g = path_graph(3);
  EXPECT_THROW(apply_k_path_laplacian(g, 0, std::vector<double>(3)), ValidationError);
  EXPECT_THROW(apply_k_path_laplacian(g, 1, std::vector<double>(2)), ValidationError);
}

TEST(KPathLaplacianMatrix, SmallPaths) {
  EXPECT_EQ(k_path_laplacian_matrix(path_graph(3), 1).to_dense(),
            (std::vector<double>{1, -1, 0, -1, 2, -1, 0, -1, 1}));
  EXPECT_EQ(k_path_laplacian_matrix(path_graph(3), 2).to_dense(),
            (std::vector<double>{1, 0, -1, 0, 0, 0, -1, 0, 1}));
}

TEST(KPathLaplacianMatrix, BeyondDiameterIsZero) {
  for (const auto& g : fixtures()) {
    const auto m = k_path_laplacian_matrix(g, diameter(g) + 1);
    EXPECT_EQ(m.stored_entries(), 0u);
  }
}

TEST(KPathLaplacianMatrix, ProductAgreesWithDirectApplication) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  for (const auto& g : fixtures()) {
    std::vector<double> f(g.num_vertices());
    for (double& x : f) x = normal(rng);
    for (int k = 1; k <= 3; ++k) {
      const auto a = k_path_laplacian_matrix(g, k).multiply(f);
      const auto b = apply_k_path_laplacian(g, k, f);
      for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-13);
    }
  }
}

TEST(OperatorProperties, QuadraticFormIsHalfSumOfSquares) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  for (const auto& g : fixtures()) {
    const std::size_t n = g.num_vertices();
    const auto dist = oracle::all_pairs_distances(g);
    for (int k = 1; k <= 4; ++k) {
      std::vector<double> f(n);
      for (double& x : f) x = normal(rng);
      const auto lf = apply_k_path_laplacian(g, k, f);
      double form = 0.0;
      for (std::size_t v = 0; v < n; ++v) form += lf[v] * f[v];
      double half_sum = 0.0;
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
          if (dist[v * n + w] == k) half_sum += 0.5 * (f[v] - f[w]) * (f[v] - f[w]);
        }
      }
      EXPECT_GE(form, 0.0);
      EXPECT_NEAR(form, half_sum, 1e-12 * std::max(1.0, half_sum));
    }
  }
}

TEST(OperatorProperties, NormOfColumnMatchesDegreeIdentity) {
  for (const auto& g : fixtures()) {
    for (int k = 1; k <= 3; ++k) {
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const auto y = apply_k_path_laplacian(g, k, unit_vector(g.num_vertices(), v));
        double sq = 0.0;
        for (double x : y) sq += x * x;
        const double d = static_cast<double>(k_neighborhood(g, static_cast<VertexId>(v), k).degree());
        EXPECT_EQ(std::sqrt(sq), std::sqrt(d * d + d));
      }
    }
  }
}

TEST(OperatorProperties, SpectralNormWithinDegreeBounds) {
  for (const auto& g : fixtures()) {
    for (int k = 1; k <= 3; ++k) {
      const auto [lo, hi] = norm_bounds(g, k);
      const double norm = spectral_norm(k_path_laplacian_matrix(g, k));
      EXPECT_GE(norm, lo * (1.0 - 1e-9));
      EXPECT_LE(norm, hi * (1.0 + 1e-9));
    }
  }
}

TEST(NormBounds, Examples) {
  EXPECT_EQ(norm_bounds(path_graph(41), 1), (std::pair<double, double>{2.0, 4.0}));
  const Graph p = path_graph(6);
  EXPECT_EQ(norm_bounds(p, 9), (std::pair<double, double>{0.0, 0.0}));
  EXPECT_EQ(norm_bounds(square_lattice(9, 9), 2), (std::pair<double, double>{8.0, 16.0}));
  const double top = 2.0 + 2.0 * std::cos(std::acos(-1.0) / 41.0);  // largest eigenvalue of the path
  EXPECT_NEAR(spectral_norm(k_path_laplacian_matrix(path_graph(41), 1)), top, 1e-8);
}

TEST(SparseSymMatrix, NormalisesEntries) {
  const SparseSymMatrix m(3, {{2, 0, 1.0}, {0, 2, 0.5}, {1, 1, 0.0}, {0, 0, 2.0}});
  EXPECT_EQ(m.stored_entries(), 2u);
  EXPECT_EQ(m.at(0, 2), 1.5);
  EXPECT_EQ(m.at(2, 0), 1.5);
  EXPECT_EQ(m.at(1, 1), 0.0);
  EXPECT_THROW(SparseSymMatrix(2, {{0, 2, 1.0}}), ValidationError);
}

TEST(TransformCoefficients, LaplaceGeometricTail) {
  const auto series = transform_coefficients(TransformSpec::laplace(1.0), 1e-10, {2.0, 0.0});
  int expected = 0;
  while (4.0 * std::exp(-expected) / (1.0 - std::exp(-1.0)) > 1e-10) ++expected;
  EXPECT_EQ(series.terms(), expected);
  for (int k = 1; k <= series.terms(); ++k) {
    EXPECT_DOUBLE_EQ(series.coefficients[static_cast<std::size_t>(k - 1)], std::exp(-k));
  }
  EXPECT_LE(series.tail_bound, 1e-10);
  // The certificate dominates the true tail 2 * 2 * sum_{k > K} e^{-k}.
  EXPECT_GE(series.tail_bound, 4.0 * std::exp(-(expected + 1.0)) / (1.0 - std::exp(-1.0)));
}

TEST(TransformCoefficients, FactorialAtZeroIsEmpty) {
  for (double tol : {1e-3, 1e-12}) {
    const auto series = transform_coefficients(TransformSpec::factorial(0.0), tol, {2.0, 0.0});
    EXPECT_EQ(series.terms(), 0);
    EXPECT_EQ(series.tail_bound, 0.0);
  }
}

TEST(TransformCoefficients, MellinIntegralTail) {
  const auto series = transform_coefficients(TransformSpec::mellin(2.5), 1e-6, {2.0, 0.0});
  const int K = series.terms();
  EXPECT_LE(4.0 * std::pow(K, -1.5) / 1.5, 1e-6);
  EXPECT_GT(4.0 * std::pow(K - 1, -1.5) / 1.5, 1e-6);
  EXPECT_DOUBLE_EQ(series.coefficients[1], std::pow(2.0, -2.5));
  // True tail from an independent zeta evaluation.
  double partial = 0.0;
  for (int k = K; k >= 1; --k) partial += std::pow(k, -2.5);
  const double true_tail = 4.0 * (std::riemann_zeta(2.5) - partial);
  EXPECT_LE(true_tail, series.tail_bound);
}

TEST(TransformCoefficients, Errors) {
  EXPECT_THROW(transform_coefficients(TransformSpec::laplace(1.0), 0.0, {}), ValidationError);
  EXPECT_THROW(transform_coefficients(TransformSpec::pure_k(2), 1e-6, {}), ValidationError);
  EXPECT_THROW(transform_coefficients(TransformSpec::mellin(2.5), 1e-6, {2.0, 1.5}), ValidationError);
  EXPECT_THROW(transform_coefficients(TransformSpec::mellin(1.01), 1e-12, {2.0, 0.0}, 1000), NumericalError);
}

TEST(TransformCoefficients, GrowingDegreeBound) {
  const DegreeGrowthBound linear{1.0, 1.0};
  const auto series = transform_coefficients(TransformSpec::laplace(0.5), 1e-8, linear);
  double direct = 0.0;
  for (int k = series.terms() + 1; k < 2000; ++k) direct += 2.0 * k * std::exp(-0.5 * k);
  EXPECT_LE(direct, series.tail_bound);
  EXPECT_LE(series.tail_bound, 1e-8);
}

TEST(TransformedLaplacian, CentreRowsOfPath21) {
  const Graph g = path_graph(21);
  const std::size_t c = 10;
  const auto lap = transformed_laplacian_matrix(g, TransformSpec::laplace(1.0)).matrix;
  double diag = 0.0;
  for (int k = 1; k <= 10; ++k) diag += 2.0 * std::exp(-k);
  EXPECT_NEAR(lap.at(c, c), diag, 1e-15);
  EXPECT_NEAR(lap.at(c, c), 2.0 / (std::exp(1.0) - 1.0), 2.0 * std::exp(-11.0) / (1.0 - std::exp(-1.0)) + 1e-15);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_DOUBLE_EQ(lap.at(c, c + n), -std::exp(-static_cast<double>(n)));

  const auto fac = transformed_laplacian_matrix(g, TransformSpec::factorial(1.0)).matrix;
  EXPECT_NEAR(fac.at(c, c), 2.0 * (std::exp(1.0) - 1.0), 1e-7);
  EXPECT_DOUBLE_EQ(fac.at(c, c - 3), -1.0 / 6.0);

  const auto mel = transformed_laplacian_matrix(g, TransformSpec::mellin(2.5)).matrix;
  double partial = 0.0;
  for (int k = 10; k >= 1; --k) partial += 2.0 * std::pow(k, -2.5);
  EXPECT_NEAR(mel.at(c, c), partial, 1e-14);
  EXPECT_DOUBLE_EQ(mel.at(c, c + 2), -std::pow(2.0, -2.5));
}

TEST(TransformedLaplacian, ConstantsInKernelAndNonNegative) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (const auto& g : fixtures()) {
    for (const auto& spec : {TransformSpec::laplace(0.7), TransformSpec::factorial(1.3), TransformSpec::mellin(2.2)}) {
      const auto m = transformed_laplacian_matrix(g, spec).matrix;
      for (double y : m.multiply(std::vector<double>(g.num_vertices(), 1.0))) EXPECT_NEAR(y, 0.0, 1e-12);
      std::vector<double> f(g.num_vertices());
      for (double& x : f) x = normal(rng);
      const auto mf = m.multiply(f);
      double form = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) form += mf[i] * f[i];
      EXPECT_GE(form, -1e-12);
    }
  }
}

TEST(TransformedLaplacian, RejectsFractionalPower) {
  EXPECT_THROW(transformed_laplacian_matrix(path_graph(5), TransformSpec::fractional_power(1.0, 0.5)),
               ValidationError);
}

TEST(TransformedLaplacian, PureKIsLk) {
  const Graph g = ladder_graph(6);
  EXPECT_EQ(transformed_laplacian_matrix(g, TransformSpec::pure_k(2)).matrix.to_dense(),
            k_path_laplacian_matrix(g, 2).to_dense());
}

}  // namespace
}  // namespace kpath
