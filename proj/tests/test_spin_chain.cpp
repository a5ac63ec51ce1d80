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

#include <catch2/catch_amalgamated.hpp>

#include "maxent/errors.hpp"
#include "maxent/spin_chain.hpp"
#include "oracles/charpoly_bisection.hpp"
#include "oracles/kron_oracle.hpp"

using namespace maxent;

namespace {

void check_spectral_invariants(const Eigen::MatrixXd& h,
                               const SpectralData& spectral) {
  const int dim = spectral.dimension;
  const Eigen::MatrixXd& v = spectral.eigenvectors;

  // Orthogonality: V^T V = I within 1e-10 per entry.
  const Eigen::MatrixXd gram = v.transpose() * v;
  REQUIRE((gram - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() <
          1e-10);

  // Reconstruction: V diag(E) V^T = H within 1e-8 * max |E_j| per entry.
  const Eigen::MatrixXd rebuilt =
      v * spectral.eigenvalues.asDiagonal() * v.transpose();
  const double e_scale = spectral.eigenvalues.cwiseAbs().maxCoeff();
  REQUIRE((rebuilt - h).cwiseAbs().maxCoeff() <= 1e-8 * std::max(e_scale, 1.0));

  // Ascending order.
  for (int j = 0; j + 1 < dim; ++j) {
    REQUIRE(spectral.eigenvalues(j) <= spectral.eigenvalues(j + 1));
  }

  // Trace preservation.
  const double diag_scale = h.diagonal().cwiseAbs().maxCoeff();
  REQUIRE(std::abs(spectral.eigenvalues.sum() - h.trace()) <=
          1e-9 * dim * std::max(diag_scale, 1.0));
}

}  // namespace

TEST_CASE("longitudinal field alone is diagonal in the z basis") {
  SpinChainParams params;
  params.sites = 2;
  params.longitudinal_field = 1.0;
  const Eigen::MatrixXd h = build_hamiltonian(params);

  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(4, 4);
  expected.diagonal() << 2.0, 0.0, 0.0, -2.0;  // |uu>, |ud>, |du>, |dd>
  REQUIRE((h - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("transverse field alone couples Hamming-distance-1 states") {
  SpinChainParams params;
  params.sites = 2;
  params.transverse_field = 1.0;
  const Eigen::MatrixXd h = build_hamiltonian(params);

  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const int hamming = __builtin_popcount(static_cast<unsigned>(a ^ b));
      REQUIRE(h(a, b) == ((hamming == 1) ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("reference chain matches naive tensor-product assembly") {
  const SpinChainParams params = reference_chain(4);
  const Eigen::MatrixXd h = build_hamiltonian(params);
  const Eigen::MatrixXd expected = oracles::kron_hamiltonian(4, 0.9, 0.75, 1.0);
  REQUIRE(h.rows() == 16);
  REQUIRE((h - expected).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("site-count guard") {
  SpinChainParams params;
  params.sites = 15;
  REQUIRE_THROWS_AS(build_hamiltonian(params), DimensionError);
  params.sites = 1;
  REQUIRE_THROWS_AS(build_hamiltonian(params), DimensionError);
  params.sites = 4;
  params.coupling = std::numeric_limits<double>::quiet_NaN();
  REQUIRE_THROWS_AS(build_hamiltonian(params), DomainError);
}

TEST_CASE("diagonal matrix diagonalizes to sorted eigenvalues") {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(3, 3);
  h.diagonal() << 3.0, 1.0, 2.0;
  const SpectralData spectral = diagonalize(h);

  REQUIRE(spectral.eigenvalues(0) == 1.0);
  REQUIRE(spectral.eigenvalues(1) == 2.0);
  REQUIRE(spectral.eigenvalues(2) == 3.0);
  // Eigenvectors are permutation of identity columns (up to sign).
  for (int j = 0; j < 3; ++j) {
    REQUIRE(spectral.eigenvectors.col(j).cwiseAbs().maxCoeff() == 1.0);
  }
  check_spectral_invariants(h, spectral);
}

TEST_CASE("two independent transverse spins give eigenvalues -2,0,0,2") {
  SpinChainParams params;
  params.sites = 2;
  params.transverse_field = 1.0;
  const Eigen::MatrixXd h = build_hamiltonian(params);
  const SpectralData spectral = diagonalize(h);

  REQUIRE(std::abs(spectral.eigenvalues(0) + 2.0) < 1e-12);
  REQUIRE(std::abs(spectral.eigenvalues(1)) < 1e-12);
  REQUIRE(std::abs(spectral.eigenvalues(2)) < 1e-12);
  REQUIRE(std::abs(spectral.eigenvalues(3) - 2.0) < 1e-12);
  REQUIRE(spectral.degenerate);  // exact degeneracy is a warning, not fatal
  check_spectral_invariants(h, spectral);
}

TEST_CASE("L=4 reference spectrum against characteristic-polynomial roots") {
  const Eigen::MatrixXd h = build_hamiltonian(reference_chain(4));
  const SpectralData spectral = diagonalize(h);
  check_spectral_invariants(h, spectral);

  const Eigen::VectorXd roots = oracles::charpoly_eigenvalues(h);
  REQUIRE((roots - spectral.eigenvalues).cwiseAbs().maxCoeff() < 1e-9);

  // 16 distinct eigenvalues: the reference parameters are non-degenerate.
  REQUIRE(spectral.min_gap > 0.0);
  REQUIRE_FALSE(spectral.degenerate);
}

TEST_CASE("L=6 reference chain stays non-degenerate") {
  const Eigen::MatrixXd h = build_hamiltonian(reference_chain(6));
  const SpectralData spectral = diagonalize(h);
  check_spectral_invariants(h, spectral);
  REQUIRE_FALSE(spectral.degenerate);
  REQUIRE(spectral.min_gap > 0.0);
}

TEST_CASE("diagonalize rejects asymmetric input") {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2, 2);
  h(0, 1) = 1.0;
  h(1, 0) = 1.0 + 1e-6;
  REQUIRE_THROWS_AS(diagonalize(h), DomainError);
}

TEST_CASE("rescale map sends the spectrum onto [-1, 1]") {
  const Eigen::MatrixXd h = build_hamiltonian(reference_chain(3));
  const SpectralData spectral = diagonalize(h);
  const RescaleMap map = spectral.rescale();
  REQUIRE(std::abs(map.apply(spectral.eigenvalues(0)) + 1.0) < 1e-14);
  REQUIRE(std::abs(map.apply(spectral.eigenvalues(spectral.dimension - 1)) -
                   1.0) < 1e-14);
}
