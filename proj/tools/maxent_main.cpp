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

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxent/errors.hpp"
#include "maxent/hierarchy.hpp"
#include "maxent/logging.hpp"
#include "maxent/metrics.hpp"
#include "maxent/report_io.hpp"
#include "maxent/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

std::vector<double> default_time_grid() {
  // t in [0, 10] rescaled-energy units, 201 points.
  std::vector<double> grid;
  grid.reserve(201);
  for (int i = 0; i <= 200; ++i) grid.push_back(0.05 * i);
  return grid;
}

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::string format = "csv";
  int level = -1;
  int n_max_override = -1;
};

int run_hierarchy_cmd(const CommonArgs& args) {
  maxent::ExperimentConfig config = maxent::io::load_config(args.config_path);
  if (args.n_max_override >= 0) config.n_max = args.n_max_override;
  const maxent::HierarchyReport report = maxent::run_hierarchy(config);
  const maxent::io::OutputBundle bundle = maxent::io::write_report(
      report, args.out_dir, maxent::io::parse_format(args.format));
  maxent::log::info("wrote bundle " + bundle.directory.string() +
                    " (config " + bundle.config_hash + ")");
  return kExitOk;
}

int run_distribution_cmd(const CommonArgs& args) {
  if (args.level < 0) {
    std::fprintf(stderr, "distribution: --level <n> is required\n");
    return kExitUsage;
  }
  maxent::ExperimentConfig config = maxent::io::load_config(args.config_path);
  config.n_max = (args.n_max_override >= 0)
                     ? args.n_max_override
                     : std::max(config.resolved_n_max(), args.level);
  if (args.level > config.n_max) config.n_max = args.level;
  config.snapshot_levels = {args.level};
  config.time_grid.reset();
  const maxent::HierarchyReport report = maxent::run_hierarchy(config);
  maxent::io::write_report(report, args.out_dir,
                           maxent::io::parse_format(args.format));
  return kExitOk;
}

int run_fidelity_cmd(const CommonArgs& args) {
  maxent::ExperimentConfig config = maxent::io::load_config(args.config_path);
  if (args.n_max_override >= 0) config.n_max = args.n_max_override;
  if (!config.time_grid) config.time_grid = default_time_grid();
  const maxent::HierarchyReport report = maxent::run_hierarchy(config);
  maxent::io::write_report(report, args.out_dir,
                           maxent::io::parse_format(args.format));
  return kExitOk;
}

int run_moments_cmd(const CommonArgs& args) {
  maxent::ExperimentConfig config = maxent::io::load_config(args.config_path);
  const int n_max = (args.n_max_override >= 0) ? args.n_max_override : 8;
  if (n_max < 1) {
    std::fprintf(stderr, "moments: --nmax must be >= 1\n");
    return kExitUsage;
  }

  const Eigen::MatrixXd hamiltonian = maxent::build_hamiltonian(config.chain);
  const maxent::SpectralData spectral = maxent::diagonalize(hamiltonian);
  const maxent::InitialState psi0 =
      maxent::neel_state(config.chain.sites, config.initial_state);
  const maxent::DiagonalEnsemble de = maxent::diagonal_ensemble(spectral, psi0);

  const maxent::MomentVector via_operator =
      maxent::moments_operator(hamiltonian, psi0, n_max);
  const maxent::MomentVector via_spectrum = maxent::moments_spectral(
      de, n_max,
      maxent::BasisSpec{maxent::MomentBasis::monomial_raw,
                        maxent::RescaleMap::identity()});

  std::printf("k,mu_operator,mu_spectral,rel_diff\n");
  for (int k = 1; k <= n_max; ++k) {
    const double a = via_operator.values[k - 1];
    const double b = via_spectrum.values[k - 1];
    const double rel = std::abs(a - b) / std::max(1.0, std::abs(a));
    std::printf("%d,%.17g,%.17g,%.3e\n", k, a, b, rel);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("maximum-entropy hierarchy of equilibrium "
                           "ensembles for isolated spin chains (v") +
               std::string(maxent::kLibraryVersion) + ")"};
  app.require_subcommand(1);

  CommonArgs args;
  bool quiet = false;
  app.add_flag("--quiet", quiet, "silence informational output");

  auto add_common = [&](CLI::App* cmd, bool needs_out) {
    cmd->add_option("--config", args.config_path, "experiment config JSON")
        ->required();
    if (needs_out) {
      cmd->add_option("--out", args.out_dir, "output directory");
      cmd->add_option("--format", args.format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
    }
    cmd->add_option("--nmax", args.n_max_override, "override n_max");
    cmd->add_flag("--quiet", quiet, "silence informational output");
  };

  CLI::App* hierarchy =
      app.add_subcommand("hierarchy", "full sweep: gamma_0..gamma_nmax");
  add_common(hierarchy, true);

  CLI::App* distribution =
      app.add_subcommand("distribution", "single-level snapshot");
  add_common(distribution, true);
  distribution->add_option("--level", args.level, "hierarchy level n");

  CLI::App* fidelity =
      app.add_subcommand("fidelity", "F(t) table for DE and snapshots");
  add_common(fidelity, true);

  CLI::App* moments =
      app.add_subcommand("moments", "print mu_k by operator and spectral routes");
  add_common(moments, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return (app.exit(e) == 0) ? kExitOk : kExitUsage;
  }

  if (quiet) maxent::log::set_threshold(maxent::log::Level::error);

  try {
    if (hierarchy->parsed()) return run_hierarchy_cmd(args);
    if (distribution->parsed()) return run_distribution_cmd(args);
    if (fidelity->parsed()) return run_fidelity_cmd(args);
    if (moments->parsed()) return run_moments_cmd(args);
  } catch (const maxent::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const maxent::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitUsage;
  } catch (const maxent::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitUsage;
}
