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

#ifndef MAXENT_SPIN_CHAIN_HPP
#define MAXENT_SPIN_CHAIN_HPP

#include <Eigen/Dense>

#include "maxent/basis.hpp"

namespace maxent {

/// Pauli component of the -J(sigma_1 + sigma_L) boundary term. Only z is
/// defined; the enumeration exists so the convention is explicit at call
/// sites and extendable if another reading is ever needed.
enum class BoundaryAxis { z };

/// Open chain of L spin-1/2 sites,
///   H = sum_i (g sx_i + h sz_i) + J sum_i sz_i sz_{i+1} - J (sz_1 + sz_L),
/// in the computational z-product basis. Site 1 is the most significant bit
/// of the basis index; bit 0 means spin up (sz eigenvalue +1).
struct SpinChainParams {
  int sites = 2;                   // L
  double transverse_field = 0.0;   // g
  double longitudinal_field = 0.0; // h
  double coupling = 0.0;           // J
  BoundaryAxis boundary_axis = BoundaryAxis::z;

  static constexpr int kMaxSites = 14;  // dense-matrix guard, D <= 16384

  int dimension() const { return 1 << sites; }

  /// Throws DimensionError / DomainError when the invariants fail
  /// (2 <= L <= 14, all couplings finite).
  void validate() const;
};

/// Paper parameter set (g=0.9, h=0.75, J=1), robustly non-integrable.
SpinChainParams reference_chain(int sites);

/// Full spectral decomposition of a dense real symmetric Hamiltonian.
struct SpectralData {
  int dimension = 0;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthogonal, column j <-> eigenvalue j
  double min_gap = 0.0;          // smallest consecutive spacing
  bool degenerate = false;       // min_gap below 1e-10 * spectral width

  double spectral_width() const {
    return eigenvalues(dimension - 1) - eigenvalues(0);
  }

  /// Affine map taking [E_min, E_max] onto [-1, 1].
  RescaleMap rescale() const;
};

/// Dense H in the computational basis; exactly symmetric by construction.
Eigen::MatrixXd build_hamiltonian(const SpinChainParams& params);

/// Dense symmetric eigendecomposition. Requires symmetry within 1e-12 per
/// entry. A near-degenerate spectrum sets SpectralData::degenerate instead
/// of failing.
SpectralData diagonalize(const Eigen::MatrixXd& hamiltonian);

}  // namespace maxent

#endif  // MAXENT_SPIN_CHAIN_HPP
