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

#ifndef MAXENT_SOLVER_HPP
#define MAXENT_SOLVER_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "maxent/basis.hpp"
#include "maxent/ensembles.hpp"

namespace maxent {

struct SolverOptions {
  double grad_tol = 1e-10;
  int max_newton_iters = 200;
  /// Levenberg ridge: starts at 0 (pure Newton); on an ill-conditioned or
  /// non-descent step the ridge is seeded relative to the Hessian scale and
  /// grows by x10 per event. Reset after every accepted step.
  double damping_seed = 1e-10;
  double damping_growth = 10.0;
  /// Armijo constant for the backtracking line search on the dual.
  double armijo_c = 1e-4;
  MomentBasis basis = MomentBasis::chebyshev_rescaled;
  /// Dual divergence guard in rescaled units: the targets are declared
  /// infeasible when the multipliers pass this norm.
  double theta_divergence = 1e8;
  /// When non-null, every Newton iterate's theta is appended (tests probe
  /// Hessian definiteness along the path).
  std::vector<Eigen::VectorXd>* iterate_trace = nullptr;

  void validate() const;
};

/// Maximum-entropy ensemble constrained by the first n moments:
/// q_j = exp(sum_k theta_k phi_k(e_j)) / Z_n. In the raw monomial basis the
/// dual coefficients relate to the multipliers of the exponential solution
/// by theta_k = lambda_k - 1.
struct MaxEntEnsemble {
  int level = 0;
  Eigen::VectorXd theta;                 // working-basis dual coefficients
  Eigen::VectorXd probabilities;
  /// log q_j, always finite even where q_j underflows (large multipliers
  /// spread the scores over hundreds of nats at high levels).
  Eigen::VectorXd log_probabilities;
  double log_partition = 0.0;            // log Z_n in the working basis
  BasisSpec working_basis;
  Eigen::VectorXd constraint_residuals;  // |model moment - target|, k = 1..n

  int dimension() const { return static_cast<int>(probabilities.size()); }
};

struct SolveTelemetry {
  int iterations = 0;       // accepted Newton steps
  int damping_events = 0;   // ridge growths
  bool converged = false;
  bool diverged = false;    // hit the theta_divergence guard
  double grad_norm = 0.0;   // final max-norm of the dual gradient
  std::string message;
};

struct SolveResult {
  MaxEntEnsemble ensemble;  // best iterate even when not converged
  SolveTelemetry telemetry;
};

/// Minimizes the strictly convex dual
///   F(theta) = log sum_j exp(sum_k theta_k phi_k(e_j)) - sum_k theta_k mu_k
/// by damped Newton with backtracking; gradient = model moments - targets,
/// Hessian = covariance of the basis functions under q. All exponentials go
/// through max-subtracted log-sums. Does not throw on non-convergence.
///
/// Targets are converted to opts.basis when expressed in another one; their
/// rescale map must match the map induced by `energies`.
SolveResult solve_maxent_detailed(const Eigen::VectorXd& energies,
                                  const MomentVector& targets, int level,
                                  const SolverOptions& opts = {},
                                  const Eigen::VectorXd* warm_start = nullptr);

/// Throwing wrapper: ConvergenceError on a stalled iteration, InfeasibleError
/// on dual divergence.
MaxEntEnsemble solve_maxent(const Eigen::VectorXd& energies,
                            const MomentVector& targets, int level,
                            const SolverOptions& opts = {});

/// Canonical route to the level-1 ensemble: bisection for beta on the
/// monotone map beta -> <H>_beta, q_j proportional to exp(-beta E_j).
/// Must coincide with solve_maxent(n=1) after basis back-conversion.
/// The ensemble is returned in the raw monomial basis with theta = {-beta}.
MaxEntEnsemble gibbs_crosscheck(const Eigen::VectorXd& energies,
                                double target_mean);

/// Multipliers of the exponential solution written in raw monomials,
/// lambda_k = theta^raw_k + 1 (k >= 1), with the normalization multiplier
/// lambda_0 = 1 - log Z reported separately.
struct MonomialMultipliers {
  double lambda0 = 0.0;
  std::vector<double> lambda;  // lambda_1..lambda_n
  bool lossy = false;          // back-transform coefficient growth, n > 30
};
MonomialMultipliers multipliers_monomial(const MaxEntEnsemble& ensemble);

/// Model vs true moments of the rescaled energy, k = 1..k_max. For k <= n
/// the pair agrees within solver tolerance by construction; the k > n gaps
/// are the diagnostic payload.
struct ConsistencyRow {
  int order = 0;
  double model_moment = 0.0;
  double true_moment = 0.0;
};
std::vector<ConsistencyRow> consistency_report(const MaxEntEnsemble& ensemble,
                                               const DiagonalEnsemble& de,
                                               int k_max);

/// q proportional to exp(Phi theta) with max-subtraction; returns log Z.
/// Exposed for diagnostics and tests.
double exponential_family_probabilities(const Eigen::MatrixXd& phi,
                                        const Eigen::VectorXd& theta,
                                        Eigen::VectorXd& q_out);

/// Covariance matrix of the basis functions under q (the dual Hessian).
Eigen::MatrixXd dual_hessian(const Eigen::MatrixXd& phi,
                             const Eigen::VectorXd& q);

}  // namespace maxent

#endif  // MAXENT_SOLVER_HPP
