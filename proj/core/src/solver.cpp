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

#include "maxent/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "maxent/errors.hpp"
#include "maxent/logging.hpp"

namespace maxent {

void SolverOptions::validate() const {
  if (!(grad_tol > 0.0)) throw DomainError("grad_tol must be positive");
  if (max_newton_iters < 1) {
    throw DomainError("max_newton_iters must be at least 1");
  }
  if (!(damping_growth > 1.0)) {
    throw DomainError("damping growth factor must exceed 1");
  }
  if (!(armijo_c > 0.0) || armijo_c >= 1.0) {
    throw DomainError("Armijo constant must lie in (0, 1)");
  }
}

namespace {

// scores -> (log q, log Z) with max-subtraction; log q is finite even where
// q underflows.
struct LogWeights {
  Eigen::VectorXd log_q;
  double log_z = 0.0;
};

LogWeights log_weights(const Eigen::MatrixXd& phi, const Eigen::VectorXd& theta) {
  const Eigen::Index dim = phi.rows();
  Eigen::VectorXd scores =
      (theta.size() > 0) ? (phi * theta).eval() : Eigen::VectorXd::Zero(dim);
  const double peak = scores.maxCoeff();
  const double total = (scores.array() - peak).exp().sum();
  LogWeights out;
  out.log_z = peak + std::log(total);
  out.log_q = scores.array() - out.log_z;
  return out;
}

}  // namespace

double exponential_family_probabilities(const Eigen::MatrixXd& phi,
                                        const Eigen::VectorXd& theta,
                                        Eigen::VectorXd& q_out) {
  const LogWeights w = log_weights(phi, theta);
  q_out = w.log_q.array().exp();
  return w.log_z;
}

Eigen::MatrixXd dual_hessian(const Eigen::MatrixXd& phi,
                             const Eigen::VectorXd& q) {
  const Eigen::VectorXd mean = phi.transpose() * q;
  const Eigen::MatrixXd weighted = phi.array().colwise() * q.array();
  Eigen::MatrixXd hess = phi.transpose() * weighted - mean * mean.transpose();
  return 0.5 * (hess + hess.transpose());  // kill rounding asymmetry
}

namespace {

struct WorkingProblem {
  Eigen::MatrixXd phi;   // D x n basis values
  Eigen::VectorXd mu;    // n targets in the working basis
  BasisSpec spec;
};

WorkingProblem prepare_problem(const Eigen::VectorXd& energies,
                               const MomentVector& targets, int level,
                               const SolverOptions& opts) {
  const Eigen::Index dim = energies.size();
  if (dim < 1) throw DimensionError("solve_maxent: empty spectrum");
  if (level < 0) throw DomainError("solve_maxent: negative level");
  if (level > dim - 1) {
    throw DimensionError("solve_maxent: level " + std::to_string(level) +
                         " exceeds D - 1 = " + std::to_string(dim - 1));
  }
  if (targets.order() < level) {
    throw DimensionError("solve_maxent: need " + std::to_string(level) +
                         " target moments, got " +
                         std::to_string(targets.order()));
  }

  const RescaleMap natural =
      RescaleMap::to_unit_interval(energies.minCoeff(), energies.maxCoeff());
  WorkingProblem problem;
  problem.spec.basis = opts.basis;
  problem.spec.map = (opts.basis == MomentBasis::monomial_raw)
                         ? RescaleMap::identity()
                         : natural;

  if (targets.basis.rescaled() &&
      !targets.basis.map.approx_equal(natural, 1e-9)) {
    throw DomainError(
        "solve_maxent: target rescale map does not match the spectrum");
  }

  std::span<const double> wanted(targets.values.data(),
                                 static_cast<std::size_t>(level));
  const std::vector<double> converted =
      convert_moments(wanted, targets.basis, problem.spec);
  problem.mu = Eigen::Map<const Eigen::VectorXd>(
      converted.data(), static_cast<Eigen::Index>(converted.size()));

  // Moments of any distribution on [-1,1] are bounded by 1 in both rescaled
  // families; anything larger cannot be met.
  if (problem.spec.rescaled() && level > 0 &&
      problem.mu.cwiseAbs().maxCoeff() > 1.0 + 1e-9) {
    throw InfeasibleError(
        "targets exceed the moment range of the rescaled spectrum");
  }

  problem.phi = basis_matrix(energies, problem.spec, level);
  if (!problem.phi.allFinite()) {
    throw OverflowError(
        "basis values overflowed double range; use a rescaled working basis",
        level);
  }
  return problem;
}

}  // namespace

SolveResult solve_maxent_detailed(const Eigen::VectorXd& energies,
                                  const MomentVector& targets, int level,
                                  const SolverOptions& opts,
                                  const Eigen::VectorXd* warm_start) {
  opts.validate();
  WorkingProblem problem = prepare_problem(energies, targets, level, opts);
  const Eigen::Index dim = energies.size();

  SolveResult result;
  MaxEntEnsemble& ens = result.ensemble;
  SolveTelemetry& tel = result.telemetry;
  ens.level = level;
  ens.working_basis = problem.spec;

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(level);
  if (warm_start != nullptr) {
    const Eigen::Index carry = std::min<Eigen::Index>(warm_start->size(), level);
    theta.head(carry) = warm_start->head(carry);
  }

  LogWeights weights = log_weights(problem.phi, theta);
  Eigen::VectorXd q = weights.log_q.array().exp();

  if (level == 0) {
    // gamma_0: uniform weights, Z_0 = D.
    ens.theta = theta;
    ens.probabilities = q;
    ens.log_probabilities = weights.log_q;
    ens.log_partition = weights.log_z;
    ens.constraint_residuals = Eigen::VectorXd();
    tel.converged = true;
    tel.message = "level 0 is closed-form";
    return result;
  }

  Eigen::VectorXd grad(level);
  double dual_value = weights.log_z - theta.dot(problem.mu);
  double grad_norm = std::numeric_limits<double>::infinity();

  // Quasi-null Hessian directions at high levels put a floor under the
  // reachable gradient norm; once the best norm stops improving the honest
  // outcome is a recorded stall, not more iterations.
  double best_grad_norm = std::numeric_limits<double>::infinity();
  int since_improvement = 0;
  constexpr int kStallWindow = 12;

  int iter = 0;
  for (; iter < opts.max_newton_iters; ++iter) {
    grad = problem.phi.transpose() * q - problem.mu;
    grad_norm = grad.cwiseAbs().maxCoeff();
    if (opts.iterate_trace != nullptr) opts.iterate_trace->push_back(theta);

    if (grad_norm <= opts.grad_tol) {
      tel.converged = true;
      break;
    }
    if (theta.cwiseAbs().maxCoeff() > opts.theta_divergence) {
      tel.diverged = true;
      std::ostringstream msg;
      msg << "dual diverged: |theta| passed " << opts.theta_divergence
          << " in rescaled units; targets are numerically infeasible";
      tel.message = msg.str();
      break;
    }
    if (grad_norm < best_grad_norm) {
      best_grad_norm = grad_norm;
      since_improvement = 0;
    } else if (++since_improvement >= kStallWindow) {
      std::ostringstream msg;
      msg << "stalled at |grad| = " << grad_norm << " (tolerance "
          << opts.grad_tol << "): Hessian numerically singular at level "
          << level;
      tel.message = msg.str();
      break;
    }

    const Eigen::MatrixXd hess = dual_hessian(problem.phi, q);
    const double hess_scale = std::max(1.0, hess.cwiseAbs().maxCoeff());

    // Ridge restarts at zero each iteration; it exists for unusable or
    // non-descending factorizations, not as a permanent regularizer.
    double ridge = 0.0;
    bool stepped = false;
    for (int attempt = 0; attempt < 64; ++attempt) {
      Eigen::MatrixXd damped = hess;
      if (ridge > 0.0) damped.diagonal().array() += ridge;
      const Eigen::LDLT<Eigen::MatrixXd> ldlt(damped);
      Eigen::VectorXd direction = ldlt.solve(-grad);
      const double slope = grad.dot(direction);
      // A factorization of a numerically singular Hessian can hand back a
      // direction that solves the system poorly; treat that as
      // ill-conditioned and damp rather than stepping on noise.
      const double solve_residual =
          (damped * direction + grad).cwiseAbs().maxCoeff();
      const bool usable = (ldlt.info() == Eigen::Success) &&
                          direction.allFinite() && slope < 0.0 &&
                          solve_residual <= 0.25 * grad_norm;
      if (!usable) {
        ridge = (ridge == 0.0) ? opts.damping_seed * hess_scale
                               : ridge * opts.damping_growth;
        ++tel.damping_events;
        continue;
      }

      // Backtracking with the Armijo condition on the dual.
      double step = 1.0;
      bool line_ok = false;
      for (int backtrack = 0; backtrack < 60; ++backtrack) {
        const Eigen::VectorXd candidate = theta + step * direction;
        const LogWeights w_try = log_weights(problem.phi, candidate);
        const double value = w_try.log_z - candidate.dot(problem.mu);
        if (std::isfinite(value) &&
            value <= dual_value + opts.armijo_c * step * slope) {
          theta = candidate;
          weights = w_try;
          q = weights.log_q.array().exp();
          dual_value = value;
          line_ok = true;
          break;
        }
        step *= 0.5;
      }
      if (line_ok) {
        stepped = true;
        break;
      }
      ridge = (ridge == 0.0) ? opts.damping_seed * hess_scale
                             : ridge * opts.damping_growth;
      ++tel.damping_events;
    }

    if (!stepped) {
      tel.message = "no descent step found (damping exhausted)";
      break;
    }
    ++tel.iterations;
  }

  if (!tel.converged && tel.message.empty()) {
    std::ostringstream msg;
    msg << "Newton did not reach grad_tol " << opts.grad_tol << " within "
        << opts.max_newton_iters << " iterations; final |grad| = " << grad_norm;
    tel.message = msg.str();
  }

  // Final state at the last accepted iterate.
  weights = log_weights(problem.phi, theta);
  q = weights.log_q.array().exp();
  grad = problem.phi.transpose() * q - problem.mu;
  tel.grad_norm = grad.cwiseAbs().maxCoeff();
  if (tel.converged && opts.iterate_trace != nullptr &&
      (opts.iterate_trace->empty() ||
       opts.iterate_trace->back() != theta)) {
    opts.iterate_trace->push_back(theta);
  }

  ens.theta = theta;
  ens.probabilities = q;
  ens.log_probabilities = weights.log_q;
  ens.log_partition = weights.log_z;
  ens.constraint_residuals = grad.cwiseAbs();
  return result;
}

MaxEntEnsemble solve_maxent(const Eigen::VectorXd& energies,
                            const MomentVector& targets, int level,
                            const SolverOptions& opts) {
  SolveResult result = solve_maxent_detailed(energies, targets, level, opts);
  if (result.telemetry.converged) return std::move(result.ensemble);
  if (result.telemetry.diverged) throw InfeasibleError(result.telemetry.message);
  throw ConvergenceError(result.telemetry.message, result.telemetry.grad_norm,
                         result.telemetry.iterations);
}

MaxEntEnsemble gibbs_crosscheck(const Eigen::VectorXd& energies,
                                double target_mean) {
  const Eigen::Index dim = energies.size();
  if (dim < 1) throw DimensionError("gibbs_crosscheck: empty spectrum");
  const double e_min = energies.minCoeff();
  const double e_max = energies.maxCoeff();
  if (!(target_mean > e_min) || !(target_mean < e_max)) {
    throw InfeasibleError(
        "gibbs_crosscheck: mean energy must lie strictly inside the spectrum");
  }

  Eigen::VectorXd q(dim);
  auto mean_at = [&](double beta) {
    Eigen::VectorXd scores = -beta * energies;
    const double peak = scores.maxCoeff();
    q = (scores.array() - peak).exp();
    const double total = q.sum();
    q /= total;
    return q.dot(energies);
  };

  // <H>_beta decreases monotonically from E_max (beta -> -inf) to E_min
  // (beta -> +inf); bracket then bisect.
  const double beta_unit = 1.0 / std::max(e_max - e_min, 1e-300);
  double lo = 0.0, hi = 0.0;
  const double mean0 = mean_at(0.0);
  const double beta_cap = 1e15 * beta_unit;
  if (mean0 > target_mean) {
    lo = 0.0;
    hi = beta_unit;
    while (mean_at(hi) > target_mean && hi < beta_cap) {
      lo = hi;
      hi *= 2.0;
    }
  } else {
    hi = 0.0;
    lo = -beta_unit;
    while (mean_at(lo) < target_mean && lo > -beta_cap) {
      hi = lo;
      lo *= 2.0;
    }
  }

  for (int i = 0; i < 500; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // interval at machine resolution
    if (mean_at(mid) > target_mean) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double beta = 0.5 * (lo + hi);

  MaxEntEnsemble ens;
  ens.level = 1;
  ens.working_basis = BasisSpec{MomentBasis::monomial_raw, RescaleMap::identity()};
  ens.theta = Eigen::VectorXd::Constant(1, -beta);
  const double mean_final = mean_at(beta);
  ens.probabilities = q;
  Eigen::VectorXd scores = -beta * energies;
  const double peak = scores.maxCoeff();
  ens.log_partition = peak + std::log((scores.array() - peak).exp().sum());
  ens.log_probabilities = scores.array() - ens.log_partition;
  ens.constraint_residuals =
      Eigen::VectorXd::Constant(1, std::abs(mean_final - target_mean));
  return ens;
}

MonomialMultipliers multipliers_monomial(const MaxEntEnsemble& ensemble) {
  const BasisSpec raw{MomentBasis::monomial_raw, RescaleMap::identity()};
  std::span<const double> theta_span(ensemble.theta.data(),
                                     static_cast<std::size_t>(ensemble.theta.size()));
  const DualCoefficients dc =
      convert_dual_coefficients(theta_span, ensemble.working_basis, raw);

  MonomialMultipliers out;
  out.lossy = ensemble.level > 30;
  const double log_z_raw = ensemble.log_partition - dc.constant_shift;
  if (!std::isfinite(log_z_raw)) {
    throw OverflowError(
        "monomial back-transform overflowed; report multipliers in the "
        "working basis instead");
  }
  out.lambda.reserve(dc.coeffs.size());
  for (double c : dc.coeffs) {
    if (!std::isfinite(c)) {
      throw OverflowError(
          "monomial back-transform overflowed; report multipliers in the "
          "working basis instead");
    }
    out.lambda.push_back(c + 1.0);
  }
  out.lambda0 = 1.0 - log_z_raw;
  return out;
}

std::vector<ConsistencyRow> consistency_report(const MaxEntEnsemble& ensemble,
                                               const DiagonalEnsemble& de,
                                               int k_max) {
  if (k_max <= ensemble.level) {
    throw DomainError("consistency_report: k_max must exceed the level");
  }
  if (ensemble.dimension() != de.dimension()) {
    throw DimensionError("consistency_report: dimension mismatch");
  }
  const RescaleMap map = de.rescale();
  if (ensemble.working_basis.rescaled() &&
      !ensemble.working_basis.map.approx_equal(map, 1e-9)) {
    throw DomainError("consistency_report: ensemble was solved on a "
                      "different rescale map");
  }

  const Eigen::VectorXd x = map.apply(de.energies);
  std::vector<ConsistencyRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  Eigen::VectorXd power = Eigen::VectorXd::Ones(x.size());
  for (int k = 1; k <= k_max; ++k) {
    power = power.cwiseProduct(x);
    rows.push_back(ConsistencyRow{k, power.dot(ensemble.probabilities),
                                  power.dot(de.probabilities)});
  }
  return rows;
}

}  // namespace maxent
