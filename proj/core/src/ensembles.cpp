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

#include "maxent/ensembles.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "maxent/errors.hpp"

namespace maxent {

const char* to_string(InitialStateKind kind) {
  switch (kind) {
    case InitialStateKind::neel_z: return "neel_z";
    case InitialStateKind::neel_x: return "neel_x";
    case InitialStateKind::custom: return "custom";
  }
  return "?";
}

void InitialState::validate() const {
  if (amplitudes.size() == 0) {
    throw DimensionError("initial state has no amplitudes");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw DomainError("initial state is not normalized: |psi|^2 = " +
                      std::to_string(norm2));
  }
}

InitialState neel_state(int sites, InitialStateKind axis) {
  if (sites < 2) {
    throw DimensionError("neel_state needs at least 2 sites");
  }
  if (sites > SpinChainParams::kMaxSites) {
    throw DimensionError("neel_state: L exceeds the dense guard");
  }
  const int dim = 1 << sites;
  InitialState state;
  state.kind = axis;
  state.amplitudes = Eigen::VectorXcd::Zero(dim);

  switch (axis) {
    case InitialStateKind::neel_z: {
      // |up,down,up,...>: even sites carry bit 1. Site i is bit (L-i).
      int index = 0;
      for (int site = 2; site <= sites; site += 2) {
        index |= 1 << (sites - site);
      }
      state.amplitudes(index) = 1.0;
      break;
    }
    case InitialStateKind::neel_x: {
      // Product of (|up>+|down>)/sqrt2 on odd sites and (|up>-|down>)/sqrt2
      // on even sites: amplitude sign is the parity of down-spins on even
      // sites.
      int even_mask = 0;
      for (int site = 2; site <= sites; site += 2) {
        even_mask |= 1 << (sites - site);
      }
      const double magnitude = std::ldexp(1.0, -sites / 2) *
                               ((sites % 2) ? 1.0 / std::sqrt(2.0) : 1.0);
      for (int s = 0; s < dim; ++s) {
        const bool odd = std::popcount(static_cast<unsigned>(s & even_mask)) % 2;
        state.amplitudes(s) = odd ? -magnitude : magnitude;
      }
      break;
    }
    case InitialStateKind::custom:
      throw DomainError("neel_state: axis must be neel_z or neel_x");
  }
  return state;
}

RescaleMap DiagonalEnsemble::rescale() const {
  const int dim = dimension();
  return RescaleMap::to_unit_interval(energies(0), energies(dim - 1));
}

DiagonalEnsemble diagonal_ensemble(const SpectralData& spectral,
                                   const InitialState& psi0) {
  psi0.validate();
  if (psi0.dimension() != spectral.dimension) {
    throw DimensionError("diagonal_ensemble: state dimension " +
                         std::to_string(psi0.dimension()) +
                         " does not match spectrum dimension " +
                         std::to_string(spectral.dimension));
  }
  // c_j = <E_j|psi0>; the eigenvector matrix is real orthogonal.
  const Eigen::VectorXcd overlaps =
      spectral.eigenvectors.transpose() * psi0.amplitudes;

  DiagonalEnsemble de;
  de.energies = spectral.eigenvalues;
  de.probabilities = overlaps.cwiseAbs2();
  const double total = de.probabilities.sum();
  if (std::abs(total - 1.0) > 1e-10) {
    throw DomainError("diagonal ensemble does not normalize: sum p = " +
                      std::to_string(total));
  }
  de.support_mask.resize(de.probabilities.size());
  for (Eigen::Index j = 0; j < de.probabilities.size(); ++j) {
    de.support_mask[j] = de.probabilities(j) > kSupportCutoff;
  }
  return de;
}

MomentVector moments_spectral(const DiagonalEnsemble& de, int n_max,
                              const BasisSpec& spec) {
  if (n_max < 1) throw DomainError("moments_spectral: n_max must be >= 1");
  const Eigen::Index dim = de.probabilities.size();

  if (spec.basis == MomentBasis::monomial_raw) {
    const double e_abs =
        std::max(std::abs(de.energies(0)), std::abs(de.energies(dim - 1)));
    // |E|^n past double range: point the caller at the rescaled bases.
    if (e_abs > 1.0 &&
        static_cast<double>(n_max) * std::log(e_abs) > 700.0) {
      throw OverflowError(
          "raw monomial moments overflow double at order " +
              std::to_string(n_max) +
              "; use a rescaled basis (monomial_rescaled or "
              "chebyshev_rescaled)",
          n_max);
    }
  }

  MomentVector mv;
  mv.basis = spec;
  if (spec.basis == MomentBasis::monomial_raw) mv.basis.map = RescaleMap::identity();
  mv.values.assign(static_cast<std::size_t>(n_max), 0.0);

  std::vector<double> phi(static_cast<std::size_t>(n_max) + 1);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double p = de.probabilities(j);
    if (p == 0.0) continue;
    phi = basis_values(de.energies(j), mv.basis, n_max);
    for (int k = 1; k <= n_max; ++k) mv.values[k - 1] += p * phi[k];
  }
  for (int k = 1; k <= n_max; ++k) {
    if (!std::isfinite(mv.values[k - 1])) {
      throw OverflowError("moment overflowed double range at order " +
                              std::to_string(k) +
                              "; use a rescaled basis",
                          k);
    }
  }
  return mv;
}

MomentVector moments_operator(const Eigen::MatrixXd& hamiltonian,
                              const InitialState& psi0, int n_max) {
  if (n_max < 1) throw DomainError("moments_operator: n_max must be >= 1");
  psi0.validate();
  if (psi0.dimension() != hamiltonian.rows() ||
      hamiltonian.rows() != hamiltonian.cols()) {
    throw DimensionError("moments_operator: dimension mismatch");
  }

  MomentVector mv;
  mv.basis = BasisSpec{MomentBasis::monomial_raw, RescaleMap::identity()};
  mv.values.reserve(static_cast<std::size_t>(n_max));

  Eigen::VectorXcd v = psi0.amplitudes;
  for (int k = 1; k <= n_max; ++k) {
    v = hamiltonian * v;
    if (!v.allFinite()) {
      throw OverflowError(
          "H^k |psi0> overflowed double range at k = " + std::to_string(k), k);
    }
    // <psi0|H^k|psi0> is real for a symmetric H; the imaginary part is
    // rounding noise.
    const std::complex<double> moment = psi0.amplitudes.dot(v);
    mv.values.push_back(moment.real());
  }
  return mv;
}

}  // namespace maxent
