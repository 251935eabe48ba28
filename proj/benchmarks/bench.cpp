// Copyright 2026 The graphsym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "graphsym/automorphism.hpp"
#include "graphsym/controllability.hpp"
#include "graphsym/datasets.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/spectral.hpp"

namespace {

using namespace graphsym;

void BM_ErdosRenyiSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(erdos_renyi_sample(n, 0.5, seed++));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ErdosRenyiSample)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Eigendecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntMatrix a = adjacency_matrix(erdos_renyi_sample(n, 0.5, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigendecompose(a));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_FriendlinessUsa(benchmark::State& state) {
  const Graph usa = contiguous_usa_graph(false).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_friendliness(usa, 1e-4));
  }
}
BENCHMARK(BM_FriendlinessUsa);

void BM_AutomorphismSearchUsa(benchmark::State& state) {
  const Graph usa = contiguous_usa_graph(false).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_automorphisms(usa));
  }
}
BENCHMARK(BM_AutomorphismSearchUsa);

void BM_BruteForceGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = erdos_renyi_sample(n, 0.5, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_automorphisms(g));
  }
}
BENCHMARK(BM_BruteForceGroup)->DenseRange(5, 8);

void BM_KalmanRank(benchmark::State& state) {
  const LeaderFollowerSystem sys(fig5_graph().graph, {1, 0, 0, 0, 0, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_controllable_kalman(sys));
  }
}
BENCHMARK(BM_KalmanRank);

}  // namespace

BENCHMARK_MAIN();
