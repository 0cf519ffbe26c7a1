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

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "kpath/evolution.hpp"
#include "kpath/graph.hpp"
#include "kpath/multiplier.hpp"
#include "kpath/operators.hpp"
#include "kpath/stable.hpp"

namespace {

using namespace kpath;

void BM_KNeighborhood(benchmark::State& state) {
  const Graph g = square_lattice(200, 200);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_neighborhood(g, 20100, k));
}
BENCHMARK(BM_KNeighborhood)->Arg(1)->Arg(8)->Arg(64);

void BM_ApplyKPathLaplacian(benchmark::State& state) {
  const Graph g = triangular_lattice(60, 60);
  const std::vector<double> f(g.num_vertices(), 1.0);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apply_k_path_laplacian(g, k, f));
}
BENCHMARK(BM_ApplyKPathLaplacian)->Arg(1)->Arg(4);

void BM_TransformedMatrix(benchmark::State& state) {
  const Graph g = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transformed_laplacian_matrix(g, TransformSpec::mellin(2.5)));
}
BENCHMARK(BM_TransformedMatrix)->Arg(101)->Arg(401);

void BM_MellinSymbol(benchmark::State& state) {
  const Multiplier ell(TransformSpec::mellin(2.5));
  double q = 0.0;
  for (auto _ : state) {
    q += 1e-3;
    if (q > std::numbers::pi) q = 1e-3;
    benchmark::DoNotOptimize(ell(q));
  }
}
BENCHMARK(BM_MellinSymbol);

void BM_HeatKernelEntry(benchmark::State& state) {
  const Multiplier ell(TransformSpec::mellin(2.5));
  const Site m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel_entry(ell, 100.0, m, 1e-12));
}
BENCHMARK(BM_HeatKernelEntry)->Arg(0)->Arg(100)->Arg(10000);

void BM_EvolveProfile(benchmark::State& state) {
  const Multiplier ell(TransformSpec::laplace(1.0));
  for (auto _ : state) benchmark::DoNotOptimize(evolve_profile(ell, 200.0, 120, {{0, 1.0}}, 1e-12));
}
BENCHMARK(BM_EvolveProfile)->Unit(benchmark::kMillisecond);

void BM_TruncatedPropagator(benchmark::State& state) {
  const Site n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(TruncatedChainPropagator(TransformSpec::mellin(2.5), n));
}
BENCHMARK(BM_TruncatedPropagator)->Arg(100)->Arg(250)->Unit(benchmark::kMillisecond);

void BM_StableDensity(benchmark::State& state) {
  const StableParams p{1.5, 2.2354};
  const double xi = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stable_density(xi, p, 1e-12));
}
BENCHMARK(BM_StableDensity)->Arg(0)->Arg(10)->Arg(150);

}  // namespace

BENCHMARK_MAIN();
