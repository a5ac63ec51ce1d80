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

#ifndef MAXENT_BASIS_HPP
#define MAXENT_BASIS_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace maxent {

/// Polynomial families used to express moment constraints. The constraint
/// rotation by any non-singular linear map leaves the optimizer's solution
/// unchanged, so the choice is purely a conditioning decision: raw monomials
/// E^k grow without bound, rescaled monomials live on [-1,1], and Chebyshev
/// polynomials of the rescaled energy stay uniformly bounded and keep the
/// dual Hessian well conditioned.
enum class MomentBasis { monomial_raw, monomial_rescaled, chebyshev_rescaled };

const char* to_string(MomentBasis basis);

/// Affine energy rescale x = scale * E + offset.
struct RescaleMap {
  double scale = 1.0;
  double offset = 0.0;

  static RescaleMap identity() { return {}; }

  /// Map [e_min, e_max] onto [-1, 1]. A zero-width spectrum degenerates to
  /// the identity so single-atom edge cases stay finite.
  static RescaleMap to_unit_interval(double e_min, double e_max);

  double apply(double e) const { return scale * e + offset; }
  double invert(double x) const { return (x - offset) / scale; }
  Eigen::VectorXd apply(const Eigen::VectorXd& e) const;
  RescaleMap inverse() const;

  bool approx_equal(const RescaleMap& other, double tol = 1e-12) const;
};

/// Basis family plus the affine map it is evaluated through. The map is
/// ignored for monomial_raw (kept as identity).
struct BasisSpec {
  MomentBasis basis = MomentBasis::chebyshev_rescaled;
  RescaleMap map;

  bool rescaled() const { return basis != MomentBasis::monomial_raw; }
  bool compatible_with(const BasisSpec& other, double tol = 1e-12) const;
};

/// T_0..T_n at x via the three-term recurrence; out.size() == n+1.
/// Never goes through expanded monomial coefficients.
void chebyshev_values(double x, std::span<double> out);

/// D x n matrix with column k-1 holding phi_k at every energy, k = 1..n.
/// phi_k is E^k, (aE+b)^k, or T_k(aE+b) depending on the spec.
Eigen::MatrixXd basis_matrix(const Eigen::VectorXd& energies,
                             const BasisSpec& spec, int order);

/// phi_k evaluated at a single energy, k = 0..order (phi_0 = 1).
std::vector<double> basis_values(double energy, const BasisSpec& spec,
                                 int order);

/// (n+1)x(n+1) lower-triangular matrix M expressing the `from` family in the
/// `to` family: phi^from_k = sum_l M(k,l) phi^to_l, indices 0..n. Entries are
/// exact integers, dyadic rationals, or binomial-scaled affine powers; matrix
/// products are accumulated with error-free two-products so the composition
/// of a transform with its inverse stays the identity to near machine
/// precision even at order 30 where entries reach 2^29.
Eigen::MatrixXd basis_transform_matrix(const BasisSpec& from,
                                       const BasisSpec& to, int order);

/// Chebyshev-to-monomial coefficients: T_k(x) = sum_l C(k,l) x^l (exact
/// integers), and its exact dyadic inverse.
Eigen::MatrixXd cheb_to_monomial_coeffs(int order);
Eigen::MatrixXd monomial_to_cheb_coeffs(int order);

/// Moments follow the basis functions: mu^to = basis_transform_matrix(to,
/// from) * mu^from. This helper hides the direction bookkeeping: input and
/// output are (mu_1..mu_n), mu_0 = 1 implicit on both sides.
std::vector<double> convert_moments(std::span<const double> moments,
                                    const BasisSpec& from, const BasisSpec& to);

/// Dual (Lagrange) coefficients transform contravariantly and pick up a
/// constant: sum_{k>=1} theta_k phi^from_k = shift + sum_{l>=1} out_l phi^to_l.
struct DualCoefficients {
  std::vector<double> coeffs;
  double constant_shift = 0.0;
};
DualCoefficients convert_dual_coefficients(std::span<const double> theta,
                                           const BasisSpec& from,
                                           const BasisSpec& to);

namespace detail {
/// Dot product via fma two-products and Neumaier compensation: exact up to
/// the final rounding, which the ill-conditioned integer transforms need.
double compensated_dot(std::span<const double> a, std::span<const double> b);
}  // namespace detail

}  // namespace maxent

#endif  // MAXENT_BASIS_HPP
