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

#include "maxent/spin_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "maxent/errors.hpp"
#include "maxent/logging.hpp"

namespace maxent {

void SpinChainParams::validate() const {
  if (sites < 2) {
    throw DimensionError("spin chain needs at least 2 sites, got " +
                         std::to_string(sites));
  }
  if (sites > kMaxSites) {
    throw DimensionError(
        "L = " + std::to_string(sites) + " exceeds the dense-matrix guard L <= " +
        std::to_string(kMaxSites) + " (D = 2^L would be > 16384)");
  }
  if (!std::isfinite(transverse_field) || !std::isfinite(longitudinal_field) ||
      !std::isfinite(coupling)) {
    throw DomainError("spin chain couplings must be finite");
  }
}

SpinChainParams reference_chain(int sites) {
  SpinChainParams params;
  params.sites = sites;
  params.transverse_field = 0.9;
  params.longitudinal_field = 0.75;
  params.coupling = 1.0;
  return params;
}

RescaleMap SpectralData::rescale() const {
  return RescaleMap::to_unit_interval(eigenvalues(0),
                                      eigenvalues(dimension - 1));
}

Eigen::MatrixXd build_hamiltonian(const SpinChainParams& params) {
  params.validate();
  const int sites = params.sites;
  const int dim = params.dimension();
  const double g = params.transverse_field;
  const double h = params.longitudinal_field;
  const double j = params.coupling;

  // Site i (1-based) lives on bit (L - i); bit value 0 is spin up, so the
  // sz eigenvalue of site i in basis state s is 1 - 2*((s >> (L-i)) & 1).
  auto sz = [sites](int state, int site) {
    return 1 - 2 * ((state >> (sites - site)) & 1);
  };

  Eigen::MatrixXd hmat = Eigen::MatrixXd::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int site = 1; site <= sites; ++site) diag += h * sz(s, site);
    for (int site = 1; site < sites; ++site) {
      diag += j * sz(s, site) * sz(s, site + 1);
    }
    diag -= j * (sz(s, 1) + sz(s, sites));  // -J(sz_1 + sz_L) boundary term
    hmat(s, s) = diag;

    // g sx_i flips bit (L - i); each unordered pair is visited once from
    // either side, so the matrix comes out exactly symmetric.
    for (int site = 1; site <= sites; ++site) {
      const int flipped = s ^ (1 << (sites - site));
      hmat(flipped, s) += g;
    }
  }
  return hmat;
}

SpectralData diagonalize(const Eigen::MatrixXd& hamiltonian) {
  const Eigen::Index dim = hamiltonian.rows();
  if (dim == 0 || hamiltonian.cols() != dim) {
    throw DimensionError("diagonalize: matrix must be square and non-empty");
  }
  const double scale = hamiltonian.cwiseAbs().maxCoeff();
  const double sym_tol = 1e-12 * std::max(1.0, scale);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index k = i + 1; k < dim; ++k) {
      if (std::abs(hamiltonian(i, k) - hamiltonian(k, i)) > sym_tol) {
        throw DomainError("diagonalize: matrix is not symmetric at (" +
                          std::to_string(i) + "," + std::to_string(k) + ")");
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw Error("dense symmetric eigensolver failed to converge");
  }

  SpectralData data;
  data.dimension = static_cast<int>(dim);
  data.eigenvalues = solver.eigenvalues();
  data.eigenvectors = solver.eigenvectors();

  double min_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i + 1 < dim; ++i) {
    min_gap = std::min(min_gap, data.eigenvalues(i + 1) - data.eigenvalues(i));
  }
  data.min_gap = (dim > 1) ? min_gap : 0.0;

  const double width = data.spectral_width();
  data.degenerate = (dim > 1) && (data.min_gap < 1e-10 * width);
  if (data.degenerate) {
    log::warn("spectrum is numerically degenerate: min gap " +
              std::to_string(data.min_gap) + " vs width " +
              std::to_string(width));
  }
  return data;
}

}  // namespace maxent
