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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <cstring>

#include "maxent/errors.hpp"
#include "maxent/hierarchy.hpp"

using namespace maxent;

namespace {

ExperimentConfig reference_config(int sites, InitialStateKind kind, int n_max) {
  ExperimentConfig config;
  config.chain = reference_chain(sites);
  config.initial_state = kind;
  config.n_max = n_max;
  return config;
}

bool bitwise_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.size() == b.size() &&
         std::memcmp(a.data(), b.data(), sizeof(double) * a.size()) == 0;
}

// d_n for the L=4 reference sweep (Neel-z), frozen from two runs of the
// brute-force primal oracle; the runs agree with each other and with an
// independent dual solve to better than 1e-10 at every converged level.
constexpr double kGoldenDkl[14] = {
    2.543607114342581e-01, 2.493404391410264e-01, 1.990757044629640e-01,
    1.608123983118224e-01, 1.263189993038822e-01, 1.026974135830439e-01,
    1.011353324808448e-01, 1.007540659313329e-01, 1.006490584748213e-01,
    9.923167696646808e-02, 9.451449353642320e-02, 2.831666495269405e-02,
    5.218086103075253e-03, 6.460590934725173e-04,
};

}  // namespace

TEST_CASE("full hierarchy at L=2 closes in four levels") {
  const HierarchyReport report =
      run_hierarchy(reference_config(2, InitialStateKind::neel_z, 3));
  REQUIRE(report.records.size() == 4);
  REQUIRE(report.records[3].relative_entropy_to_de <= 1e-8);
  for (const LevelTelemetry& tel : report.telemetry) {
    REQUIRE(tel.converged);
  }
}

TEST_CASE("L=4 reference sweep matches the oracle-seeded regression data") {
  ExperimentConfig config = reference_config(4, InitialStateKind::neel_z, 15);
  config.snapshot_levels = {0, 1, 15};
  const HierarchyReport report = run_hierarchy(config);
  REQUIRE(report.records.size() == 16);

  // d_0 = log D - S(p) analytically.
  const double s_de = shannon_entropy(report.de.probabilities);
  REQUIRE(std::abs(report.records[0].relative_entropy_to_de -
                   (std::log(16.0) - s_de)) < 1e-12);

  for (int n = 1; n <= 14; ++n) {
    REQUIRE(std::abs(report.records[n].relative_entropy_to_de -
                     kGoldenDkl[n - 1]) < 1e-8);
  }
  REQUIRE(report.records[15].relative_entropy_to_de <= 1e-8);
  REQUIRE(report.records[15].trace_distance <= 1e-5);

  // Strictly informative hierarchy until the endpoint, nonincreasing within
  // numerical slack.
  for (int n = 0; n < 15; ++n) {
    REQUIRE(report.records[n].relative_entropy_to_de > 1e-6);
    REQUIRE(report.records[n + 1].relative_entropy_to_de <=
            report.records[n].relative_entropy_to_de + 1e-10);
    REQUIRE(report.records[n + 1].entropy <= report.records[n].entropy + 1e-10);
  }
}

TEST_CASE("snapshots expose the distribution pairs of the sweep") {
  ExperimentConfig config = reference_config(4, InitialStateKind::neel_z, 15);
  config.snapshot_levels = {0, 1, 15};
  const HierarchyReport report = run_hierarchy(config);

  const SnapshotView level0 = snapshot_distribution(report, 0);
  for (int j = 0; j < 16; ++j) {
    REQUIRE(std::abs(level0.q_gamma(j) - 1.0 / 16.0) < 1e-14);
  }

  const SnapshotView level15 = snapshot_distribution(report, 15);
  REQUIRE((level15.q_gamma - level15.p_de).cwiseAbs().maxCoeff() <= 1e-7);

  // gamma_1 is Gibbs: log q affine in the energy, residual of the
  // least-squares line below 1e-9.
  const SnapshotView level1 = snapshot_distribution(report, 1);
  const Eigen::VectorXd x = level1.energies;
  const Eigen::VectorXd y = level1.q_gamma.array().log();
  const double xm = x.mean(), ym = y.mean();
  const double slope = (x.array() - xm).cwiseProduct(y.array() - ym).sum() /
                       (x.array() - xm).square().sum();
  const double intercept = ym - slope * xm;
  const double residual =
      (y - (slope * x).array().matrix() -
       Eigen::VectorXd::Constant(16, intercept))
          .cwiseAbs()
          .maxCoeff();
  REQUIRE(residual <= 1e-9);

  REQUIRE_THROWS_AS(snapshot_distribution(report, 7), DomainError);
}

TEST_CASE("warm and cold starts land on the same ensemble") {
  ExperimentConfig config = reference_config(4, InitialStateKind::neel_z, 8);
  const HierarchyReport swept = run_hierarchy(config);  // warm-started sweep

  const SpectralData spectral = diagonalize(build_hamiltonian(config.chain));
  const DiagonalEnsemble de =
      diagonal_ensemble(spectral, neel_state(4, InitialStateKind::neel_z));
  const MomentVector targets = moments_spectral(
      de, 8, BasisSpec{MomentBasis::chebyshev_rescaled, spectral.rescale()});
  const MaxEntEnsemble cold = solve_maxent(spectral.eigenvalues, targets, 8);

  const ConvergenceRecord cold_record =
      make_convergence_record(8, cold.probabilities, cold.log_probabilities, de);
  // Warm-start equivalence: the per-entry weights agree to 1e-8.
  const SpectralData spectral2 = diagonalize(build_hamiltonian(config.chain));
  const MaxEntEnsemble warm7 = solve_maxent(spectral2.eigenvalues, targets, 7);
  Eigen::VectorXd warm = warm7.theta;
  const SolveResult warm8 =
      solve_maxent_detailed(spectral2.eigenvalues, targets, 8, {}, &warm);
  REQUIRE(warm8.telemetry.converged);
  REQUIRE((warm8.ensemble.probabilities - cold.probabilities)
              .cwiseAbs()
              .maxCoeff() < 1e-8);
  REQUIRE(std::abs(cold_record.relative_entropy_to_de -
                   swept.records[8].relative_entropy_to_de) < 1e-9);
  REQUIRE(std::abs(cold_record.entropy - swept.records[8].entropy) < 1e-9);
}

TEST_CASE("identical configs produce bit-identical reports") {
  ExperimentConfig config = reference_config(4, InitialStateKind::neel_x, 12);
  config.snapshot_levels = {0, 6, 12};
  config.time_grid = std::vector<double>{0.0, 0.5, 1.0, 2.0};

  const HierarchyReport a = run_hierarchy(config);
  const HierarchyReport b = run_hierarchy(config);

  REQUIRE(bitwise_equal(a.energies, b.energies));
  REQUIRE(bitwise_equal(a.de.probabilities, b.de.probabilities));
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    REQUIRE(a.records[i].entropy == b.records[i].entropy);
    REQUIRE(a.records[i].relative_entropy_to_de ==
            b.records[i].relative_entropy_to_de);
    REQUIRE(a.records[i].trace_distance == b.records[i].trace_distance);
  }
  for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
    REQUIRE(bitwise_equal(a.snapshots[i].q, b.snapshots[i].q));
  }
  REQUIRE(a.fidelity->f_de == b.fidelity->f_de);
}

TEST_CASE("a level that cannot converge is recorded and the sweep continues") {
  ExperimentConfig config = reference_config(4, InitialStateKind::neel_z, 6);
  config.solver.max_newton_iters = 1;
  const HierarchyReport report = run_hierarchy(config);
  REQUIRE(report.records.size() == 7);

  bool any_failed = false;
  for (const LevelTelemetry& tel : report.telemetry) {
    if (!tel.converged) {
      any_failed = true;
      REQUIRE_FALSE(tel.error.empty());
    }
  }
  REQUIRE(any_failed);
  // Records exist (from the best iterate) even for failed levels.
  for (const ConvergenceRecord& record : report.records) {
    REQUIRE(std::isfinite(record.entropy));
  }
}

TEST_CASE("fidelity table covers the diagonal ensemble and snapshots") {
  ExperimentConfig config = reference_config(3, InitialStateKind::neel_x, 5);
  config.snapshot_levels = {2, 5};
  config.time_grid = std::vector<double>{0.0, 0.3, 0.9, 1.4};
  const HierarchyReport report = run_hierarchy(config);

  REQUIRE(report.fidelity.has_value());
  REQUIRE(report.fidelity->f_de.size() == 4);
  REQUIRE(std::abs(report.fidelity->f_de[0] - 1.0) < 1e-12);
  REQUIRE(report.fidelity->f_gamma.size() == 2);
  REQUIRE(report.fidelity->f_gamma[0].first == 2);
  REQUIRE(report.fidelity->f_gamma[1].first == 5);
  for (const auto& [level, values] : report.fidelity->f_gamma) {
    REQUIRE(std::abs(values[0] - 1.0) < 1e-12);
  }
}

TEST_CASE("config validation rejects bad snapshot levels and n_max") {
  ExperimentConfig config = reference_config(3, InitialStateKind::neel_z, 9);
  REQUIRE_THROWS_AS(config.validate(), DimensionError);  // n_max > D-1

  config.n_max = 5;
  config.snapshot_levels = {6};
  REQUIRE_THROWS_AS(config.validate(), DimensionError);

  config.snapshot_levels = {5};
  REQUIRE_NOTHROW(config.validate());

  // Default n_max: min(D-1, 30).
  config.n_max = -1;
  REQUIRE(config.resolved_n_max() == 7);
  ExperimentConfig big = reference_config(10, InitialStateKind::neel_z, -1);
  REQUIRE(big.resolved_n_max() == 30);
}
