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

#include "maxent/basis.hpp"

#include <cmath>
#include <cstdlib>

#include "maxent/errors.hpp"

namespace maxent {

namespace detail {

double compensated_dot(std::span<const double> a, std::span<const double> b) {
  // fma two-product makes each a[i]*b[i] exact as hi+lo; Neumaier
  // compensation keeps the running sum exact up to the final rounding.
  double sum = 0.0;
  double comp = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = a[i] * b[i];
    const double lo = std::fma(a[i], b[i], -hi);
    const double t = sum + hi;
    if (std::abs(sum) >= std::abs(hi)) {
      comp += (sum - t) + hi;
    } else {
      comp += (hi - t) + sum;
    }
    sum = t;
    comp += lo;
  }
  return sum + comp;
}

}  // namespace detail

const char* to_string(MomentBasis basis) {
  switch (basis) {
    case MomentBasis::monomial_raw: return "monomial_raw";
    case MomentBasis::monomial_rescaled: return "monomial_rescaled";
    case MomentBasis::chebyshev_rescaled: return "chebyshev_rescaled";
  }
  return "?";
}

RescaleMap RescaleMap::to_unit_interval(double e_min, double e_max) {
  const double width = e_max - e_min;
  if (!(width > 0.0)) return RescaleMap::identity();
  return RescaleMap{2.0 / width, -(e_max + e_min) / width};
}

Eigen::VectorXd RescaleMap::apply(const Eigen::VectorXd& e) const {
  return (scale * e).array() + offset;
}

RescaleMap RescaleMap::inverse() const {
  return RescaleMap{1.0 / scale, -offset / scale};
}

bool RescaleMap::approx_equal(const RescaleMap& other, double tol) const {
  return std::abs(scale - other.scale) <= tol * std::max(1.0, std::abs(scale)) &&
         std::abs(offset - other.offset) <=
             tol * std::max(1.0, std::abs(offset));
}

bool BasisSpec::compatible_with(const BasisSpec& other, double tol) const {
  if (basis != other.basis) return false;
  if (basis == MomentBasis::monomial_raw) return true;
  return map.approx_equal(other.map, tol);
}

void chebyshev_values(double x, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = x;
  for (std::size_t k = 2; k < out.size(); ++k) {
    out[k] = 2.0 * x * out[k - 1] - out[k - 2];
  }
}

std::vector<double> basis_values(double energy, const BasisSpec& spec,
                                 int order) {
  std::vector<double> values(static_cast<std::size_t>(order) + 1);
  switch (spec.basis) {
    case MomentBasis::monomial_raw: {
      values[0] = 1.0;
      for (int k = 1; k <= order; ++k) values[k] = values[k - 1] * energy;
      break;
    }
    case MomentBasis::monomial_rescaled: {
      const double x = spec.map.apply(energy);
      values[0] = 1.0;
      for (int k = 1; k <= order; ++k) values[k] = values[k - 1] * x;
      break;
    }
    case MomentBasis::chebyshev_rescaled: {
      chebyshev_values(spec.map.apply(energy), values);
      break;
    }
  }
  return values;
}

Eigen::MatrixXd basis_matrix(const Eigen::VectorXd& energies,
                             const BasisSpec& spec, int order) {
  if (order < 0) throw DomainError("basis_matrix: negative order");
  const Eigen::Index d = energies.size();
  Eigen::MatrixXd phi(d, order);
  std::vector<double> values(static_cast<std::size_t>(order) + 1);
  for (Eigen::Index j = 0; j < d; ++j) {
    switch (spec.basis) {
      case MomentBasis::monomial_raw: {
        double p = 1.0;
        for (int k = 1; k <= order; ++k) {
          p *= energies(j);
          phi(j, k - 1) = p;
        }
        break;
      }
      case MomentBasis::monomial_rescaled: {
        const double x = spec.map.apply(energies(j));
        double p = 1.0;
        for (int k = 1; k <= order; ++k) {
          p *= x;
          phi(j, k - 1) = p;
        }
        break;
      }
      case MomentBasis::chebyshev_rescaled: {
        chebyshev_values(spec.map.apply(energies(j)), values);
        for (int k = 1; k <= order; ++k) phi(j, k - 1) = values[k];
        break;
      }
    }
  }
  return phi;
}

Eigen::MatrixXd cheb_to_monomial_coeffs(int order) {
  const int n = order + 1;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  c(0, 0) = 1.0;
  if (order >= 1) c(1, 1) = 1.0;
  for (int k = 2; k <= order; ++k) {
    for (int l = 1; l <= k; ++l) c(k, l) = 2.0 * c(k - 1, l - 1);
    for (int l = 0; l <= k - 2; ++l) c(k, l) -= c(k - 2, l);
  }
  return c;
}

Eigen::MatrixXd monomial_to_cheb_coeffs(int order) {
  // x^l = 2^(1-l) * sum over k = l, l-2, ... of binom(l, (l-k)/2) T_k(x),
  // T_0 term halved. Binomials and the dyadic scale are exact in double for
  // every order this library reaches.
  const int n = order + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m(0, 0) = 1.0;
  for (int l = 1; l <= order; ++l) {
    const double scale = std::ldexp(1.0, 1 - l);  // 2^(1-l)
    double binom = 1.0;                           // binom(l, j)
    for (int j = 0; 2 * j <= l; ++j) {
      const int k = l - 2 * j;
      const double halved = (k == 0) ? 0.5 : 1.0;
      m(l, k) = scale * binom * halved;
      binom = binom * static_cast<double>(l - j) / static_cast<double>(j + 1);
    }
  }
  return m;
}

namespace {

// ebar^k expressed in powers of e for ebar = a e + b:
// (a e + b)^k = sum_m binom(k,m) a^m b^(k-m) e^m.
Eigen::MatrixXd affine_power_coeffs(int order, const RescaleMap& map) {
  const int n = order + 1;
  std::vector<double> scale_pow(n), offset_pow(n);
  scale_pow[0] = offset_pow[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    scale_pow[k] = scale_pow[k - 1] * map.scale;
    offset_pow[k] = offset_pow[k - 1] * map.offset;
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k <= order; ++k) {
    double binom = 1.0;
    for (int m = 0; m <= k; ++m) {
      a(k, m) = binom * scale_pow[m] * offset_pow[k - m];
      binom = binom * static_cast<double>(k - m) / static_cast<double>(m + 1);
    }
  }
  return a;
}

Eigen::MatrixXd mul_exact(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows(), b.cols());
  std::vector<double> row(static_cast<std::size_t>(a.cols()));
  std::vector<double> col(static_cast<std::size_t>(b.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) row[c] = a(i, c);
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      for (Eigen::Index r = 0; r < b.rows(); ++r) col[r] = b(r, j);
      out(i, j) = detail::compensated_dot(row, col);
    }
  }
  return out;
}

// Expression of the family in raw monomials (functions of E).
Eigen::MatrixXd to_raw_matrix(const BasisSpec& spec, int order) {
  switch (spec.basis) {
    case MomentBasis::monomial_raw:
      return Eigen::MatrixXd::Identity(order + 1, order + 1);
    case MomentBasis::monomial_rescaled:
      return affine_power_coeffs(order, spec.map);
    case MomentBasis::chebyshev_rescaled:
      return mul_exact(cheb_to_monomial_coeffs(order),
                       affine_power_coeffs(order, spec.map));
  }
  throw DomainError("unknown basis");
}

// Expression of raw monomials in the target family.
Eigen::MatrixXd from_raw_matrix(const BasisSpec& spec, int order) {
  switch (spec.basis) {
    case MomentBasis::monomial_raw:
      return Eigen::MatrixXd::Identity(order + 1, order + 1);
    case MomentBasis::monomial_rescaled:
      return affine_power_coeffs(order, spec.map.inverse());
    case MomentBasis::chebyshev_rescaled:
      return mul_exact(affine_power_coeffs(order, spec.map.inverse()),
                       monomial_to_cheb_coeffs(order));
  }
  throw DomainError("unknown basis");
}

}  // namespace

Eigen::MatrixXd basis_transform_matrix(const BasisSpec& from,
                                       const BasisSpec& to, int order) {
  if (order < 0) throw DomainError("basis_transform_matrix: negative order");
  if (from.compatible_with(to)) {
    return Eigen::MatrixXd::Identity(order + 1, order + 1);
  }
  // Shortcut for a shared rescale map: the Chebyshev <-> rescaled-monomial
  // pair never has to leave [-1,1] coordinates.
  if (from.rescaled() && to.rescaled() && from.map.approx_equal(to.map)) {
    if (from.basis == MomentBasis::chebyshev_rescaled) {
      return cheb_to_monomial_coeffs(order);
    }
    return monomial_to_cheb_coeffs(order);
  }
  return mul_exact(to_raw_matrix(from, order), from_raw_matrix(to, order));
}

std::vector<double> convert_moments(std::span<const double> moments,
                                    const BasisSpec& from,
                                    const BasisSpec& to) {
  const int order = static_cast<int>(moments.size());
  if (from.compatible_with(to)) {
    return std::vector<double>(moments.begin(), moments.end());
  }
  // mu^to_k = E[phi^to_k] = sum_l M(k,l) mu^from_l with M expressing the
  // target family in the source family.
  const Eigen::MatrixXd m = basis_transform_matrix(to, from, order);
  std::vector<double> extended(static_cast<std::size_t>(order) + 1);
  extended[0] = 1.0;
  for (int l = 1; l <= order; ++l) extended[l] = moments[l - 1];
  std::vector<double> out(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k) {
    std::vector<double> row(static_cast<std::size_t>(order) + 1);
    for (int l = 0; l <= order; ++l) row[l] = m(k, l);
    out[k - 1] = detail::compensated_dot(row, extended);
  }
  return out;
}

DualCoefficients convert_dual_coefficients(std::span<const double> theta,
                                           const BasisSpec& from,
                                           const BasisSpec& to) {
  const int order = static_cast<int>(theta.size());
  DualCoefficients result;
  result.coeffs.assign(theta.begin(), theta.end());
  if (from.compatible_with(to) || order == 0) return result;

  const Eigen::MatrixXd m = basis_transform_matrix(from, to, order);
  std::vector<double> th(theta.begin(), theta.end());
  std::vector<double> column(static_cast<std::size_t>(order));
  for (int l = 0; l <= order; ++l) {
    for (int k = 1; k <= order; ++k) column[k - 1] = m(k, l);
    const double value = detail::compensated_dot(column, th);
    if (l == 0) {
      result.constant_shift = value;
    } else {
      result.coeffs[l - 1] = value;
    }
  }
  return result;
}

}  // namespace maxent
