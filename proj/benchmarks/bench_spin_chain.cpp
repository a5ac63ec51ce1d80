// Copyright 2026 The maxent-hierarchy Authors.
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

#include "maxent/ensembles.hpp"
#include "maxent/spin_chain.hpp"

namespace {

void BM_BuildHamiltonian(benchmark::State& state) {
  const auto params = maxent::reference_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto h = maxent::build_hamiltonian(params);
    benchmark::DoNotOptimize(h.data());
  }
}
BENCHMARK(BM_BuildHamiltonian)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_Diagonalize(benchmark::State& state) {
  const auto h =
      maxent::build_hamiltonian(maxent::reference_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto spectral = maxent::diagonalize(h);
    benchmark::DoNotOptimize(spectral.eigenvalues.data());
  }
}
BENCHMARK(BM_Diagonalize)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_OperatorMoments(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const auto h = maxent::build_hamiltonian(maxent::reference_chain(sites));
  const auto psi = maxent::neel_state(sites, maxent::InitialStateKind::neel_z);
  for (auto _ : state) {
    auto mu = maxent::moments_operator(h, psi, 12);
    benchmark::DoNotOptimize(mu.values.data());
  }
}
BENCHMARK(BM_OperatorMoments)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
