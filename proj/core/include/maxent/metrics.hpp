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

#ifndef MAXENT_METRICS_HPP
#define MAXENT_METRICS_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "maxent/ensembles.hpp"
#include "maxent/solver.hpp"

namespace maxent {

/// -sum q_j log q_j in nats, 0 log 0 = 0. Entries below -1e-12 are rejected.
double shannon_entropy(const Eigen::VectorXd& q);

/// sum_j p_j (log p_j - log q_j) >= 0 in nats, restricted to the support of
/// p (kSupportCutoff). If p puts weight where q has none the result is
/// +infinity and, when requested, the first offending index is reported.
double relative_entropy(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                        std::ptrdiff_t* support_violation = nullptr);

/// Log-domain variants for exponential-family weights whose probabilities
/// underflow: log q stays finite when q itself rounds to zero.
double shannon_entropy_from_log(const Eigen::VectorXd& log_q);
double relative_entropy_from_log(const Eigen::VectorXd& p,
                                 const Eigen::VectorXd& log_q);

/// Half the l1 distance of the spectra — the trace distance of states that
/// are simultaneously diagonal in the energy basis, which every ensemble
/// here is.
double trace_distance_commuting(const Eigen::VectorXd& p,
                                const Eigen::VectorXd& q);

/// sqrt(1 - F^2): trace distance between a pure state and its time evolute.
double trace_distance_pure_states(double fidelity);

/// Per-level convergence diagnostics against the diagonal ensemble.
struct ConvergenceRecord {
  int level = 0;
  double entropy = 0.0;             // S(gamma_n), nats
  double relative_entropy_to_de = 0.0;  // d_n = D_KL(rho_DE || gamma_n)
  double trace_distance = 0.0;      // t_n
  double pinsker_bound = 0.0;       // sqrt(d_n / 2) >= t_n
};

ConvergenceRecord make_convergence_record(int level, const Eigen::VectorXd& q,
                                          const DiagonalEnsemble& de);

/// Same record, with entropy and divergence taken through log q.
ConvergenceRecord make_convergence_record(int level, const Eigen::VectorXd& q,
                                          const Eigen::VectorXd& log_q,
                                          const DiagonalEnsemble& de);

/// F(t) = |sum_j p_j exp(i e_j t)|, the characteristic function of the
/// energy distribution and the fidelity |<psi_0|psi_t>|. Times are in
/// rescaled-energy units by default (e_j mapped to [-1,1]); pass false to
/// evaluate against the raw spectrum.
std::vector<double> fidelity_series(const DiagonalEnsemble& de,
                                    std::span<const double> times,
                                    bool rescaled_energy_units = true);

/// Pointwise |M_n(t) - M_DE(t)| of the two characteristic functions. The
/// first n derivatives at t=0 coincide by moment matching, so the gap opens
/// at order t^{n+1}.
std::vector<double> mgf_gap_series(const MaxEntEnsemble& ensemble,
                                   const DiagonalEnsemble& de,
                                   std::span<const double> times,
                                   bool rescaled_energy_units = true);

/// Least-squares slope of log(y) against log(t); the small-t order probe
/// for the characteristic-function gap. Points with y <= 0 are skipped.
double loglog_slope(std::span<const double> t, std::span<const double> y);

}  // namespace maxent

#endif  // MAXENT_METRICS_HPP
