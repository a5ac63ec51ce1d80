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

#ifndef MAXENT_REPORT_IO_HPP
#define MAXENT_REPORT_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxent/hierarchy.hpp"

namespace maxent::io {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& name);  // "csv" | "json"

/// Strict config parsing: unknown keys are rejected at every level.
/// Schema:
///   {"chain":{"L":int,"g":num,"h":num,"J":num},
///    "initial_state":"neel_z"|"neel_x",
///    "n_max":int,                      // optional, default min(D-1, 30)
///    "snapshot_levels":[int],          // optional, default []
///    "solver":{"grad_tol":num,"max_newton_iters":int,"basis":str},  // optional
///    "time_grid":[num]}                // optional
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical serialization of a config (fixed key order, 17 significant
/// digits); the manifest hash is computed over exactly this string.
std::string canonical_config_json(const ExperimentConfig& config);
std::string config_hash(const ExperimentConfig& config);  // fnv1a-64, hex

/// Files written for one report, plus the manifest bookkeeping.
struct OutputBundle {
  std::filesystem::path directory;
  std::filesystem::path manifest_path;
  std::optional<std::filesystem::path> hierarchy_path;
  std::vector<std::pair<int, std::filesystem::path>> distribution_paths;
  std::optional<std::filesystem::path> fidelity_path;
  std::string config_hash;
};

/// Writes hierarchy.<ext>, distribution_<n>.<ext> per snapshot level,
/// fidelity.<ext> when a time grid was run, and manifest.json. Columns:
///   hierarchy:    n,entropy_nats,dkl_nats,trace_distance,pinsker_bound,converged,iters
///   distribution: index,energy,p_de,p_gamma
///   fidelity:     t,f_de,f_gamma_<n>...
/// Energies and times are in rescaled units; the affine map is recorded in
/// the manifest. Floats are serialized with 17 significant digits, so a
/// write/read round trip is bit-exact and repeated runs are byte-identical.
OutputBundle write_report(const HierarchyReport& report,
                          const std::filesystem::path& directory,
                          OutputFormat format);

/// Readers for the written tables (regression tests and downstream reuse).
struct HierarchyTable {
  std::vector<int> level;
  std::vector<double> entropy_nats;
  std::vector<double> dkl_nats;
  std::vector<double> trace_distance;
  std::vector<double> pinsker_bound;
  std::vector<bool> converged;
  std::vector<int> iters;
};
HierarchyTable read_hierarchy(const std::filesystem::path& path,
                              OutputFormat format);

struct DistributionTable {
  std::vector<int> index;
  std::vector<double> energy;
  std::vector<double> p_de;
  std::vector<double> p_gamma;
};
DistributionTable read_distribution(const std::filesystem::path& path,
                                    OutputFormat format);

struct FidelityFileTable {
  std::vector<int> gamma_levels;             // column order
  std::vector<double> t;
  std::vector<double> f_de;
  std::vector<std::vector<double>> f_gamma;  // one row per time
};
FidelityFileTable read_fidelity(const std::filesystem::path& path,
                                OutputFormat format);

}  // namespace maxent::io

#endif  // MAXENT_REPORT_IO_HPP
