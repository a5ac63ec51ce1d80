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

#include "maxent/hierarchy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>
#include <string>

#include "maxent/errors.hpp"
#include "maxent/logging.hpp"

namespace maxent {

int ExperimentConfig::resolved_n_max() const {
  const int dim = chain.dimension();
  if (n_max < 0) return std::min(dim - 1, 30);
  return n_max;
}

void ExperimentConfig::validate() const {
  chain.validate();
  if (initial_state != InitialStateKind::neel_z &&
      initial_state != InitialStateKind::neel_x) {
    throw DomainError("experiment initial state must be neel_z or neel_x");
  }
  const int dim = chain.dimension();
  const int levels = resolved_n_max();
  if (levels < 0 || levels > dim - 1) {
    throw DimensionError("n_max " + std::to_string(levels) +
                         " outside [0, D-1] with D = " + std::to_string(dim));
  }
  for (int level : snapshot_levels) {
    if (level < 0 || level > levels) {
      throw DimensionError("snapshot level " + std::to_string(level) +
                           " outside [0, n_max]");
    }
  }
  if (time_grid) {
    for (double t : *time_grid) {
      if (!std::isfinite(t)) throw DomainError("time grid has non-finite entry");
    }
  }
  solver.validate();
}

HierarchyReport run_hierarchy(const ExperimentConfig& config) {
  using clock = std::chrono::steady_clock;
  config.validate();

  HierarchyReport report;
  report.config = config;

  const Eigen::MatrixXd hamiltonian = build_hamiltonian(config.chain);
  const SpectralData spectral = diagonalize(hamiltonian);  // aborts on failure
  const InitialState psi0 = neel_state(config.chain.sites, config.initial_state);
  report.de = diagonal_ensemble(spectral, psi0);
  report.rescale = spectral.rescale();
  report.energies = spectral.eigenvalues;
  report.energies_rescaled = report.rescale.apply(spectral.eigenvalues);

  const int n_max = config.resolved_n_max();
  const BasisSpec working{config.solver.basis,
                          config.solver.basis == MomentBasis::monomial_raw
                              ? RescaleMap::identity()
                              : report.rescale};
  const MomentVector targets =
      (n_max > 0) ? moments_spectral(report.de, n_max, working) : MomentVector{{}, working};

  const std::set<int> wanted(config.snapshot_levels.begin(),
                             config.snapshot_levels.end());

  report.records.reserve(n_max + 1);
  report.telemetry.reserve(n_max + 1);

  Eigen::VectorXd warm;  // last successful multipliers
  bool have_warm = false;
  for (int level = 0; level <= n_max; ++level) {
    const auto t0 = clock::now();
    SolveResult solved = solve_maxent_detailed(
        spectral.eigenvalues, targets, level, config.solver,
        have_warm ? &warm : nullptr);
    const auto t1 = clock::now();

    LevelTelemetry tel;
    tel.level = level;
    tel.iterations = solved.telemetry.iterations;
    tel.damping_events = solved.telemetry.damping_events;
    tel.converged = solved.telemetry.converged;
    tel.grad_norm = solved.telemetry.grad_norm;
    tel.error = solved.telemetry.converged ? "" : solved.telemetry.message;
    tel.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.telemetry.push_back(tel);

    if (solved.telemetry.converged) {
      warm = solved.ensemble.theta;
      have_warm = true;
      if (log::enabled(log::Level::info)) {
        std::ostringstream line;
        line << "level " << level << ": converged in "
             << solved.telemetry.iterations << " iterations";
        log::info(line.str());
      }
    } else {
      log::warn("level " + std::to_string(level) +
                " did not converge: " + solved.telemetry.message);
    }

    report.records.push_back(make_convergence_record(
        level, solved.ensemble.probabilities,
        solved.ensemble.log_probabilities, report.de));
    if (wanted.contains(level)) {
      report.snapshots.push_back(
          DistributionSnapshot{level, solved.ensemble.probabilities});
    }
  }

  if (config.time_grid) {
    FidelityTable table;
    table.times = *config.time_grid;
    table.f_de = fidelity_series(report.de, table.times, true);
    for (const DistributionSnapshot& snapshot : report.snapshots) {
      std::vector<double> f;
      f.reserve(table.times.size());
      for (double t : table.times) {
        std::complex<double> value(0.0, 0.0);
        for (Eigen::Index j = 0; j < snapshot.q.size(); ++j) {
          value += snapshot.q(j) *
                   std::polar(1.0, report.energies_rescaled(j) * t);
        }
        f.push_back(std::abs(value));
      }
      table.f_gamma.emplace_back(snapshot.level, std::move(f));
    }
    std::sort(table.f_gamma.begin(), table.f_gamma.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    report.fidelity = std::move(table);
  }

  return report;
}

SnapshotView snapshot_distribution(const HierarchyReport& report, int level) {
  for (const DistributionSnapshot& snapshot : report.snapshots) {
    if (snapshot.level == level) {
      return SnapshotView{report.energies_rescaled, report.de.probabilities,
                          snapshot.q};
    }
  }
  throw DomainError("snapshot_distribution: level " + std::to_string(level) +
                    " was not requested in snapshot_levels");
}

}  // namespace maxent
