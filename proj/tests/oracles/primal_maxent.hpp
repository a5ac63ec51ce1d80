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

// Brute-force primal route: maximize the Shannon entropy directly over the
// probability simplex intersected with the moment constraints, by projected
// gradient ascent started from the (always feasible) diagonal-ensemble
// weights. No dual variables, no Newton steps, no shared machinery with the
// library solver.

#ifndef MAXENT_TESTS_PRIMAL_MAXENT_HPP
#define MAXENT_TESTS_PRIMAL_MAXENT_HPP

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace oracles {

struct PrimalResult {
  Eigen::VectorXd q;
  long iterations = 0;
  double projected_grad_norm = 0.0;
  bool converged = false;
};

inline double primal_entropy(const Eigen::VectorXd& q) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < q.size(); ++j) {
    if (q(j) > 0.0) s -= q(j) * std::log(q(j));
  }
  return s;
}

// Constraint rows: normalization plus Chebyshev moments of the rescaled
// energies (local recurrence; equivalent constraint set to any polynomial
// family of the same degree).
inline Eigen::MatrixXd primal_constraint_rows(const Eigen::VectorXd& energies,
                                              int level) {
  const Eigen::Index dim = energies.size();
  const double e_min = energies.minCoeff();
  const double e_max = energies.maxCoeff();
  const double width = (e_max > e_min) ? (e_max - e_min) : 1.0;
  Eigen::MatrixXd rows(level + 1, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double x = (2.0 * energies(j) - e_max - e_min) / width;
    rows(0, j) = 1.0;
    double t_prev = 1.0, t_curr = x;
    for (int k = 1; k <= level; ++k) {
      rows(k, j) = t_curr;
      const double t_next = 2.0 * x * t_curr - t_prev;
      t_prev = t_curr;
      t_curr = t_next;
    }
  }
  return rows;
}

inline PrimalResult primal_maxent_projected_gradient(
    const Eigen::VectorXd& energies, const Eigen::VectorXd& p_feasible,
    int level, double tol = 1e-10, long max_iters = 50000000L) {
  const Eigen::MatrixXd a = primal_constraint_rows(energies, level);
  const Eigen::VectorXd b = a * p_feasible;
  const Eigen::LDLT<Eigen::MatrixXd> gram((a * a.transpose()).eval());

  auto project_tangent = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return v - a.transpose() * gram.solve(a * v);
  };
  auto restore_feasibility = [&](Eigen::VectorXd& q) {
    q -= a.transpose() * gram.solve(a * q - b);
  };

  PrimalResult result;
  Eigen::VectorXd q = p_feasible;

  // Step rule: half the 1D Newton step along the projected gradient,
  // capped at 40% of the distance to the positivity boundary. On [0, cap]
  // the directional curvature exceeds -c0/0.6, so half the Newton step
  // cannot cross the 1D ridge: the ascent is monotone in exact arithmetic
  // and every iterate stays strictly feasible. An Armijo test on entropy
  // differences would drown in rounding noise near the optimum.
  for (long iter = 0; iter < max_iters; ++iter) {
    const Eigen::VectorXd grad = -(q.array().log() + 1.0).matrix();
    const Eigen::VectorXd direction = project_tangent(grad);
    const double grad_norm = direction.cwiseAbs().maxCoeff();
    result.iterations = iter;
    result.projected_grad_norm = grad_norm;
    if (grad_norm <= tol) {
      result.converged = true;
      break;
    }

    double curvature = 0.0;  // -f''(0) = sum d_j^2 / q_j
    double boundary = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < q.size(); ++j) {
      curvature += direction(j) * direction(j) / q(j);
      if (direction(j) < 0.0) {
        boundary = std::min(boundary, -q(j) / direction(j));
      }
    }
    const double newton = direction.squaredNorm() / curvature;
    const double alpha = std::min(0.5 * newton, 0.4 * boundary);
    q += alpha * direction;
    if ((iter & 15) == 15) restore_feasibility(q);
  }

  restore_feasibility(q);
  result.q = q;
  return result;
}

}  // namespace oracles

#endif  // MAXENT_TESTS_PRIMAL_MAXENT_HPP
