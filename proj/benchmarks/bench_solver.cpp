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

#include "maxent/hierarchy.hpp"
#include "maxent/solver.hpp"
#include "maxent/spin_chain.hpp"

namespace {

struct Problem {
  maxent::SpectralData spectral;
  maxent::DiagonalEnsemble de;
  maxent::MomentVector targets;
};

Problem make_problem(int sites, int order) {
  Problem problem;
  problem.spectral =
      maxent::diagonalize(maxent::build_hamiltonian(maxent::reference_chain(sites)));
  problem.de = maxent::diagonal_ensemble(
      problem.spectral, maxent::neel_state(sites, maxent::InitialStateKind::neel_z));
  problem.targets = maxent::moments_spectral(
      problem.de, order,
      maxent::BasisSpec{maxent::MomentBasis::chebyshev_rescaled,
                        problem.spectral.rescale()});
  return problem;
}

void BM_SolveSingleLevel(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const int level = static_cast<int>(state.range(1));
  const Problem problem = make_problem(sites, level);
  for (auto _ : state) {
    auto ens = maxent::solve_maxent(problem.spectral.eigenvalues,
                                    problem.targets, level);
    benchmark::DoNotOptimize(ens.probabilities.data());
  }
}
BENCHMARK(BM_SolveSingleLevel)
    ->Args({4, 2})
    ->Args({4, 15})
    ->Args({10, 2})
    ->Args({10, 10})
    ->Unit(benchmark::kMicrosecond);

void BM_HierarchySweepL4(benchmark::State& state) {
  maxent::ExperimentConfig config;
  config.chain = maxent::reference_chain(4);
  config.initial_state = maxent::InitialStateKind::neel_z;
  config.n_max = 15;
  for (auto _ : state) {
    auto report = maxent::run_hierarchy(config);
    benchmark::DoNotOptimize(report.records.data());
  }
}
BENCHMARK(BM_HierarchySweepL4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
