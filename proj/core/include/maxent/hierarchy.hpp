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

#ifndef MAXENT_HIERARCHY_HPP
#define MAXENT_HIERARCHY_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "maxent/ensembles.hpp"
#include "maxent/metrics.hpp"
#include "maxent/solver.hpp"
#include "maxent/spin_chain.hpp"

namespace maxent {

/// One end-to-end experiment: model, initial state, and how far up the
/// hierarchy to sweep. The pipeline is deterministic; `seed` is reserved.
struct ExperimentConfig {
  SpinChainParams chain;
  InitialStateKind initial_state = InitialStateKind::neel_z;
  /// -1 selects the default min(D-1, 30).
  int n_max = -1;
  std::vector<int> snapshot_levels;
  SolverOptions solver;
  std::optional<std::vector<double>> time_grid;  // rescaled-energy time units
  std::uint64_t seed = 0;

  int resolved_n_max() const;
  void validate() const;
};

struct LevelTelemetry {
  int level = 0;
  int iterations = 0;
  int damping_events = 0;
  bool converged = false;
  double grad_norm = 0.0;
  std::string error;           // empty on success
  double wall_seconds = 0.0;   // informational; not part of serialized output
};

struct DistributionSnapshot {
  int level = 0;
  Eigen::VectorXd q;
};

/// Fidelity-vs-time table for the diagonal ensemble and each snapshot level.
struct FidelityTable {
  std::vector<double> times;
  std::vector<double> f_de;
  std::vector<std::pair<int, std::vector<double>>> f_gamma;  // sorted by level
};

/// Everything the sweeps of the figures need: per-level convergence records,
/// solver telemetry, and distribution snapshots.
struct HierarchyReport {
  ExperimentConfig config;
  RescaleMap rescale;
  Eigen::VectorXd energies;           // raw, ascending
  Eigen::VectorXd energies_rescaled;  // mapped to [-1, 1]
  DiagonalEnsemble de;
  std::vector<ConvergenceRecord> records;    // levels 0..n_max, in order
  std::vector<LevelTelemetry> telemetry;     // same order
  std::vector<DistributionSnapshot> snapshots;
  std::optional<FidelityTable> fidelity;
};

/// Build -> diagonalize -> diagonal ensemble -> moment targets -> solve
/// gamma_0..gamma_nmax with warm starts. A level that fails to converge is
/// recorded with its error and the sweep continues from the last successful
/// multipliers; only diagonalization failure aborts.
HierarchyReport run_hierarchy(const ExperimentConfig& config);

/// Aligned (rescaled energies, p_DE, q_gamma) triplet for one snapshot level.
struct SnapshotView {
  Eigen::VectorXd energies;
  Eigen::VectorXd p_de;
  Eigen::VectorXd q_gamma;
};
SnapshotView snapshot_distribution(const HierarchyReport& report, int level);

}  // namespace maxent

#endif  // MAXENT_HIERARCHY_HPP
