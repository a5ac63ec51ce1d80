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

#include "maxent/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "maxent/errors.hpp"

namespace maxent {

double shannon_entropy(const Eigen::VectorXd& q) {
  double entropy = 0.0;
  for (Eigen::Index j = 0; j < q.size(); ++j) {
    const double value = q(j);
    if (value < -1e-12) {
      throw DomainError("shannon_entropy: negative probability at index " +
                        std::to_string(j));
    }
    if (value > kSupportCutoff) entropy -= value * std::log(value);
  }
  return entropy;
}

double relative_entropy(const Eigen::VectorXd& p, const Eigen::VectorXd& q,
                        std::ptrdiff_t* support_violation) {
  if (p.size() != q.size()) {
    throw DimensionError("relative_entropy: length mismatch");
  }
  if (support_violation != nullptr) *support_violation = -1;
  double divergence = 0.0;
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    const double pj = p(j);
    if (pj <= kSupportCutoff) continue;  // 0 log 0 = 0
    const double qj = q(j);
    // Only a true zero of q breaks absolute continuity; a small positive
    // weight just contributes a large finite term.
    if (qj < 1e-290) {
      if (support_violation != nullptr) *support_violation = j;
      return std::numeric_limits<double>::infinity();
    }
    divergence += pj * (std::log(pj) - std::log(qj));
  }
  // Tiny negative values are pure rounding; the quantity is >= 0.
  return std::max(divergence, 0.0);
}

double shannon_entropy_from_log(const Eigen::VectorXd& log_q) {
  double entropy = 0.0;
  for (Eigen::Index j = 0; j < log_q.size(); ++j) {
    const double w = std::exp(log_q(j));
    if (w > 0.0) entropy -= w * log_q(j);
  }
  return entropy;
}

double relative_entropy_from_log(const Eigen::VectorXd& p,
                                 const Eigen::VectorXd& log_q) {
  if (p.size() != log_q.size()) {
    throw DimensionError("relative_entropy_from_log: length mismatch");
  }
  double divergence = 0.0;
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    const double pj = p(j);
    if (pj <= kSupportCutoff) continue;
    divergence += pj * (std::log(pj) - log_q(j));
  }
  return std::max(divergence, 0.0);
}

double trace_distance_commuting(const Eigen::VectorXd& p,
                                const Eigen::VectorXd& q) {
  if (p.size() != q.size()) {
    throw DimensionError("trace_distance_commuting: length mismatch");
  }
  return 0.5 * (p - q).cwiseAbs().sum();
}

double trace_distance_pure_states(double fidelity) {
  if (fidelity < -1e-12 || fidelity > 1.0 + 1e-12) {
    throw DomainError("trace_distance_pure_states: fidelity outside [0,1]");
  }
  const double clamped = std::clamp(fidelity, 0.0, 1.0);
  return std::sqrt(1.0 - clamped * clamped);
}

ConvergenceRecord make_convergence_record(int level, const Eigen::VectorXd& q,
                                          const DiagonalEnsemble& de) {
  ConvergenceRecord record;
  record.level = level;
  record.entropy = shannon_entropy(q);
  record.relative_entropy_to_de = relative_entropy(de.probabilities, q);
  record.trace_distance = trace_distance_commuting(de.probabilities, q);
  record.pinsker_bound =
      std::sqrt(0.5 * std::max(record.relative_entropy_to_de, 0.0));
  return record;
}

ConvergenceRecord make_convergence_record(int level, const Eigen::VectorXd& q,
                                          const Eigen::VectorXd& log_q,
                                          const DiagonalEnsemble& de) {
  ConvergenceRecord record;
  record.level = level;
  record.entropy = shannon_entropy_from_log(log_q);
  record.relative_entropy_to_de =
      relative_entropy_from_log(de.probabilities, log_q);
  record.trace_distance = trace_distance_commuting(de.probabilities, q);
  record.pinsker_bound =
      std::sqrt(0.5 * std::max(record.relative_entropy_to_de, 0.0));
  return record;
}

namespace {

std::complex<double> characteristic_function(const Eigen::VectorXd& weights,
                                             const Eigen::VectorXd& energies,
                                             double t) {
  std::complex<double> value(0.0, 0.0);
  for (Eigen::Index j = 0; j < weights.size(); ++j) {
    value += weights(j) * std::polar(1.0, energies(j) * t);
  }
  return value;
}

}  // namespace

std::vector<double> fidelity_series(const DiagonalEnsemble& de,
                                    std::span<const double> times,
                                    bool rescaled_energy_units) {
  const Eigen::VectorXd energies =
      rescaled_energy_units ? de.rescale().apply(de.energies) : de.energies;
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    if (!std::isfinite(t)) throw DomainError("fidelity_series: non-finite t");
    out.push_back(std::abs(characteristic_function(de.probabilities, energies, t)));
  }
  return out;
}

std::vector<double> mgf_gap_series(const MaxEntEnsemble& ensemble,
                                   const DiagonalEnsemble& de,
                                   std::span<const double> times,
                                   bool rescaled_energy_units) {
  if (ensemble.dimension() != de.dimension()) {
    throw DimensionError("mgf_gap_series: dimension mismatch");
  }
  const Eigen::VectorXd energies =
      rescaled_energy_units ? de.rescale().apply(de.energies) : de.energies;
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    if (!std::isfinite(t)) throw DomainError("mgf_gap_series: non-finite t");
    const std::complex<double> gap =
        characteristic_function(ensemble.probabilities, energies, t) -
        characteristic_function(de.probabilities, energies, t);
    out.push_back(std::abs(gap));
  }
  return out;
}

double loglog_slope(std::span<const double> t, std::span<const double> y) {
  if (t.size() != y.size()) {
    throw DimensionError("loglog_slope: length mismatch");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(t[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count < 2) {
    throw DomainError("loglog_slope: need at least two positive points");
  }
  const double n = static_cast<double>(count);
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace maxent
