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

#ifndef MAXENT_ENSEMBLES_HPP
#define MAXENT_ENSEMBLES_HPP

#include <Eigen/Dense>
#include <vector>

#include "maxent/basis.hpp"
#include "maxent/spin_chain.hpp"

namespace maxent {

/// Probabilities below this are treated as exact zeros in entropy and
/// relative-entropy sums (0 log 0 := 0); some overlaps underflow even when
/// the exact amplitudes are nonzero.
inline constexpr double kSupportCutoff = 1e-14;

enum class InitialStateKind { neel_z, neel_x, custom };

const char* to_string(InitialStateKind kind);

/// Pure state in the computational basis, unit norm within 1e-12.
struct InitialState {
  InitialStateKind kind = InitialStateKind::custom;
  Eigen::VectorXcd amplitudes;

  int dimension() const { return static_cast<int>(amplitudes.size()); }
  void validate() const;
};

/// Antiferromagnetic product state, alternating sites starting from up.
/// axis z: the single basis vector |up,down,up,...>. axis x: the product of
/// (|up>+|down>)/sqrt2 and (|up>-|down>)/sqrt2, all amplitudes +-2^{-L/2}.
InitialState neel_state(int sites, InitialStateKind axis);

/// Energy probability distribution p_j = |<E_j|psi_0>|^2 — the complete set
/// of conserved quantities of the evolution, and the weights of the
/// time-averaged (diagonal) ensemble.
struct DiagonalEnsemble {
  Eigen::VectorXd probabilities;   // non-negative, sums to 1 within 1e-10
  Eigen::VectorXd energies;        // ascending, shared with SpectralData
  std::vector<bool> support_mask;  // p_j > kSupportCutoff

  int dimension() const { return static_cast<int>(probabilities.size()); }
  RescaleMap rescale() const;
};

DiagonalEnsemble diagonal_ensemble(const SpectralData& spectral,
                                   const InitialState& psi0);

/// First n moments of a distribution in a given polynomial basis.
struct MomentVector {
  std::vector<double> values;  // mu_1..mu_n (mu_0 = 1 implicit)
  BasisSpec basis;

  int order() const { return static_cast<int>(values.size()); }
};

/// mu_k = sum_j p_j phi_k(E_j) directly in the requested basis (Chebyshev
/// values by recurrence, never through expanded coefficients). Raw monomials
/// that would leave double range are rejected with a pointer to the
/// rescaled bases.
MomentVector moments_spectral(const DiagonalEnsemble& de, int n_max,
                              const BasisSpec& spec);

/// mu_k = <psi0|H^k|psi0> by iterated matrix-vector products; no
/// diagonalization involved. Returned in raw monomials (identity map).
MomentVector moments_operator(const Eigen::MatrixXd& hamiltonian,
                              const InitialState& psi0, int n_max);

}  // namespace maxent

#endif  // MAXENT_ENSEMBLES_HPP
