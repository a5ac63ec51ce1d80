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

#include "maxent/report_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "maxent/errors.hpp"
#include "maxent/version.hpp"

namespace maxent::io {

namespace {

using nlohmann::json;

// 17 significant digits: enough for a bit-exact double round trip, and a
// fixed formatting so identical runs produce identical bytes.
std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buffer[20];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(value));
  return buffer;
}

void reject_unknown_keys(const json& object, const char* where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(std::string("unknown key \"") + item.key() + "\" in " +
                        where);
    }
  }
}

double require_number(const json& object, const char* key, const char* where) {
  if (!object.contains(key)) {
    throw ConfigError(std::string("missing \"") + key + "\" in " + where);
  }
  const json& value = object.at(key);
  if (!value.is_number()) {
    throw ConfigError(std::string("\"") + key + "\" in " + where +
                      " must be a number");
  }
  return value.get<double>();
}

int require_int(const json& object, const char* key, const char* where) {
  if (!object.contains(key)) {
    throw ConfigError(std::string("missing \"") + key + "\" in " + where);
  }
  const json& value = object.at(key);
  if (!value.is_number_integer()) {
    throw ConfigError(std::string("\"") + key + "\" in " + where +
                      " must be an integer");
  }
  return value.get<int>();
}

MomentBasis parse_basis_name(const std::string& name) {
  if (name == "chebyshev_rescaled") return MomentBasis::chebyshev_rescaled;
  if (name == "monomial_rescaled") return MomentBasis::monomial_rescaled;
  if (name == "monomial_raw") return MomentBasis::monomial_raw;
  throw ConfigError("unknown solver basis \"" + name + "\"");
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("unknown output format \"" + name + "\" (csv|json)");
}

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& error) {
    throw ConfigError(std::string("config is not valid JSON: ") + error.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(root, "config",
                      {"chain", "initial_state", "n_max", "snapshot_levels",
                       "solver", "time_grid"});

  ExperimentConfig config;

  if (!root.contains("chain") || !root.at("chain").is_object()) {
    throw ConfigError("config needs a \"chain\" object");
  }
  const json& chain = root.at("chain");
  reject_unknown_keys(chain, "chain", {"L", "g", "h", "J"});
  config.chain.sites = require_int(chain, "L", "chain");
  config.chain.transverse_field = require_number(chain, "g", "chain");
  config.chain.longitudinal_field = require_number(chain, "h", "chain");
  config.chain.coupling = require_number(chain, "J", "chain");

  if (!root.contains("initial_state") || !root.at("initial_state").is_string()) {
    throw ConfigError("config needs \"initial_state\": \"neel_z\"|\"neel_x\"");
  }
  const std::string state = root.at("initial_state").get<std::string>();
  if (state == "neel_z") {
    config.initial_state = InitialStateKind::neel_z;
  } else if (state == "neel_x") {
    config.initial_state = InitialStateKind::neel_x;
  } else {
    throw ConfigError("initial_state must be \"neel_z\" or \"neel_x\"");
  }

  if (root.contains("n_max")) {
    config.n_max = require_int(root, "n_max", "config");
    if (config.n_max < 0) throw ConfigError("n_max must be non-negative");
  }

  if (root.contains("snapshot_levels")) {
    const json& levels = root.at("snapshot_levels");
    if (!levels.is_array()) {
      throw ConfigError("snapshot_levels must be an array of integers");
    }
    for (const json& level : levels) {
      if (!level.is_number_integer()) {
        throw ConfigError("snapshot_levels entries must be integers");
      }
      config.snapshot_levels.push_back(level.get<int>());
    }
  }

  if (root.contains("solver")) {
    const json& solver = root.at("solver");
    if (!solver.is_object()) throw ConfigError("solver must be an object");
    reject_unknown_keys(solver, "solver",
                        {"grad_tol", "max_newton_iters", "basis"});
    if (solver.contains("grad_tol")) {
      config.solver.grad_tol = require_number(solver, "grad_tol", "solver");
    }
    if (solver.contains("max_newton_iters")) {
      config.solver.max_newton_iters =
          require_int(solver, "max_newton_iters", "solver");
    }
    if (solver.contains("basis")) {
      if (!solver.at("basis").is_string()) {
        throw ConfigError("solver basis must be a string");
      }
      config.solver.basis = parse_basis_name(solver.at("basis").get<std::string>());
    }
  }

  if (root.contains("time_grid")) {
    const json& grid = root.at("time_grid");
    if (!grid.is_array()) throw ConfigError("time_grid must be an array");
    std::vector<double> times;
    for (const json& t : grid) {
      if (!t.is_number()) throw ConfigError("time_grid entries must be numbers");
      times.push_back(t.get<double>());
    }
    config.time_grid = std::move(times);
  }

  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string canonical_config_json(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "{\"chain\":{\"L\":" << config.chain.sites
      << ",\"g\":" << format_double(config.chain.transverse_field)
      << ",\"h\":" << format_double(config.chain.longitudinal_field)
      << ",\"J\":" << format_double(config.chain.coupling) << "}"
      << ",\"initial_state\":\"" << to_string(config.initial_state) << "\""
      << ",\"n_max\":" << config.resolved_n_max() << ",\"snapshot_levels\":[";
  for (std::size_t i = 0; i < config.snapshot_levels.size(); ++i) {
    if (i > 0) out << ",";
    out << config.snapshot_levels[i];
  }
  out << "],\"solver\":{\"grad_tol\":" << format_double(config.solver.grad_tol)
      << ",\"max_newton_iters\":" << config.solver.max_newton_iters
      << ",\"basis\":\"" << to_string(config.solver.basis) << "\"}";
  if (config.time_grid) {
    out << ",\"time_grid\":[";
    for (std::size_t i = 0; i < config.time_grid->size(); ++i) {
      if (i > 0) out << ",";
      out << format_double((*config.time_grid)[i]);
    }
    out << "]";
  }
  out << "}";
  return out.str();
}

std::string config_hash(const ExperimentConfig& config) {
  return hex64(fnv1a64(canonical_config_json(config)));
}

namespace {

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

std::string hierarchy_csv(const HierarchyReport& report) {
  std::ostringstream out;
  out << "n,entropy_nats,dkl_nats,trace_distance,pinsker_bound,converged,iters\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const ConvergenceRecord& r = report.records[i];
    const LevelTelemetry& t = report.telemetry[i];
    out << r.level << ',' << format_double(r.entropy) << ','
        << format_double(r.relative_entropy_to_de) << ','
        << format_double(r.trace_distance) << ','
        << format_double(r.pinsker_bound) << ',' << (t.converged ? 1 : 0)
        << ',' << t.iterations << '\n';
  }
  return out.str();
}

std::string hierarchy_json(const HierarchyReport& report) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const ConvergenceRecord& r = report.records[i];
    const LevelTelemetry& t = report.telemetry[i];
    out << "{\"n\":" << r.level
        << ",\"entropy_nats\":" << format_double(r.entropy)
        << ",\"dkl_nats\":" << format_double(r.relative_entropy_to_de)
        << ",\"trace_distance\":" << format_double(r.trace_distance)
        << ",\"pinsker_bound\":" << format_double(r.pinsker_bound)
        << ",\"converged\":" << (t.converged ? "true" : "false")
        << ",\"iters\":" << t.iterations << "}"
        << (i + 1 < report.records.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return out.str();
}

std::string distribution_csv(const HierarchyReport& report,
                             const Eigen::VectorXd& q) {
  std::ostringstream out;
  out << "index,energy,p_de,p_gamma\n";
  for (Eigen::Index j = 0; j < q.size(); ++j) {
    out << j << ',' << format_double(report.energies_rescaled(j)) << ','
        << format_double(report.de.probabilities(j)) << ','
        << format_double(q(j)) << '\n';
  }
  return out.str();
}

std::string distribution_json(const HierarchyReport& report,
                              const Eigen::VectorXd& q) {
  std::ostringstream out;
  out << "[\n";
  for (Eigen::Index j = 0; j < q.size(); ++j) {
    out << "{\"index\":" << j
        << ",\"energy\":" << format_double(report.energies_rescaled(j))
        << ",\"p_de\":" << format_double(report.de.probabilities(j))
        << ",\"p_gamma\":" << format_double(q(j)) << "}"
        << (j + 1 < q.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return out.str();
}

std::string fidelity_csv(const FidelityTable& table) {
  std::ostringstream out;
  out << "t,f_de";
  for (const auto& [level, values] : table.f_gamma) {
    out << ",f_gamma_" << level;
  }
  out << '\n';
  for (std::size_t i = 0; i < table.times.size(); ++i) {
    out << format_double(table.times[i]) << ',' << format_double(table.f_de[i]);
    for (const auto& [level, values] : table.f_gamma) {
      out << ',' << format_double(values[i]);
    }
    out << '\n';
  }
  return out.str();
}

std::string fidelity_json(const FidelityTable& table) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < table.times.size(); ++i) {
    out << "{\"t\":" << format_double(table.times[i])
        << ",\"f_de\":" << format_double(table.f_de[i]);
    for (const auto& [level, values] : table.f_gamma) {
      out << ",\"f_gamma_" << level << "\":" << format_double(values[i]);
    }
    out << "}" << (i + 1 < table.times.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return out.str();
}

}  // namespace

OutputBundle write_report(const HierarchyReport& report,
                          const std::filesystem::path& directory,
                          OutputFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    throw IoError("cannot create output directory " + directory.string() +
                  ": " + ec.message());
  }
  const char* ext = (format == OutputFormat::csv) ? "csv" : "json";

  OutputBundle bundle;
  bundle.directory = directory;
  bundle.config_hash = config_hash(report.config);

  const std::filesystem::path hierarchy_path =
      directory / (std::string("hierarchy.") + ext);
  write_text_file(hierarchy_path, format == OutputFormat::csv
                                      ? hierarchy_csv(report)
                                      : hierarchy_json(report));
  bundle.hierarchy_path = hierarchy_path;

  std::vector<const DistributionSnapshot*> snapshots;
  for (const DistributionSnapshot& s : report.snapshots) snapshots.push_back(&s);
  std::sort(snapshots.begin(), snapshots.end(),
            [](const auto* a, const auto* b) { return a->level < b->level; });
  for (const DistributionSnapshot* snapshot : snapshots) {
    const std::filesystem::path path =
        directory /
        ("distribution_" + std::to_string(snapshot->level) + "." + ext);
    write_text_file(path, format == OutputFormat::csv
                              ? distribution_csv(report, snapshot->q)
                              : distribution_json(report, snapshot->q));
    bundle.distribution_paths.emplace_back(snapshot->level, path);
  }

  if (report.fidelity) {
    const std::filesystem::path path =
        directory / (std::string("fidelity.") + ext);
    write_text_file(path, format == OutputFormat::csv
                              ? fidelity_csv(*report.fidelity)
                              : fidelity_json(*report.fidelity));
    bundle.fidelity_path = path;
  }

  // Manifest: config echo, its hash, the affine map, and row counts.
  std::ostringstream manifest;
  manifest << "{\n"
           << "\"library\":\"" << kLibraryName << "\",\n"
           << "\"version\":\"" << kLibraryVersion << "\",\n"
           << "\"config_hash\":\"" << bundle.config_hash << "\",\n"
           << "\"config\":" << canonical_config_json(report.config) << ",\n"
           << "\"rescale\":{\"scale\":" << format_double(report.rescale.scale)
           << ",\"offset\":" << format_double(report.rescale.offset) << "},\n"
           << "\"energy_bounds\":{\"min\":" << format_double(report.energies(0))
           << ",\"max\":"
           << format_double(report.energies(report.energies.size() - 1))
           << "},\n"
           << "\"format\":\"" << ext << "\",\n"
           << "\"files\":{\"hierarchy\":\"hierarchy." << ext << "\"";
  manifest << ",\"distributions\":[";
  for (std::size_t i = 0; i < bundle.distribution_paths.size(); ++i) {
    if (i > 0) manifest << ",";
    manifest << "{\"level\":" << bundle.distribution_paths[i].first
             << ",\"path\":\""
             << bundle.distribution_paths[i].second.filename().string()
             << "\"}";
  }
  manifest << "]";
  if (bundle.fidelity_path) {
    manifest << ",\"fidelity\":\"fidelity." << ext << "\"";
  }
  manifest << "},\n"
           << "\"rows\":{\"hierarchy\":" << report.records.size()
           << ",\"distribution\":" << report.de.dimension();
  if (report.fidelity) {
    manifest << ",\"fidelity\":" << report.fidelity->times.size();
  }
  manifest << "}\n}\n";

  bundle.manifest_path = directory / "manifest.json";
  write_text_file(bundle.manifest_path, manifest.str());
  return bundle;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  return fields;
}

std::vector<std::vector<std::string>> read_csv(
    const std::filesystem::path& path, std::vector<std::string>& header) {
  std::istringstream in(slurp(path));
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty csv: " + path.string());
  header = split_csv_line(line);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  return rows;
}

}  // namespace

HierarchyTable read_hierarchy(const std::filesystem::path& path,
                              OutputFormat format) {
  HierarchyTable table;
  if (format == OutputFormat::csv) {
    std::vector<std::string> header;
    for (const auto& row : read_csv(path, header)) {
      table.level.push_back(std::stoi(row.at(0)));
      table.entropy_nats.push_back(std::stod(row.at(1)));
      table.dkl_nats.push_back(std::stod(row.at(2)));
      table.trace_distance.push_back(std::stod(row.at(3)));
      table.pinsker_bound.push_back(std::stod(row.at(4)));
      table.converged.push_back(row.at(5) == "1");
      table.iters.push_back(std::stoi(row.at(6)));
    }
    return table;
  }
  const json rows = json::parse(slurp(path));
  for (const json& row : rows) {
    table.level.push_back(row.at("n").get<int>());
    table.entropy_nats.push_back(row.at("entropy_nats").get<double>());
    table.dkl_nats.push_back(row.at("dkl_nats").get<double>());
    table.trace_distance.push_back(row.at("trace_distance").get<double>());
    table.pinsker_bound.push_back(row.at("pinsker_bound").get<double>());
    table.converged.push_back(row.at("converged").get<bool>());
    table.iters.push_back(row.at("iters").get<int>());
  }
  return table;
}

DistributionTable read_distribution(const std::filesystem::path& path,
                                    OutputFormat format) {
  DistributionTable table;
  if (format == OutputFormat::csv) {
    std::vector<std::string> header;
    for (const auto& row : read_csv(path, header)) {
      table.index.push_back(std::stoi(row.at(0)));
      table.energy.push_back(std::stod(row.at(1)));
      table.p_de.push_back(std::stod(row.at(2)));
      table.p_gamma.push_back(std::stod(row.at(3)));
    }
    return table;
  }
  const json rows = json::parse(slurp(path));
  for (const json& row : rows) {
    table.index.push_back(row.at("index").get<int>());
    table.energy.push_back(row.at("energy").get<double>());
    table.p_de.push_back(row.at("p_de").get<double>());
    table.p_gamma.push_back(row.at("p_gamma").get<double>());
  }
  return table;
}

FidelityFileTable read_fidelity(const std::filesystem::path& path,
                                OutputFormat format) {
  FidelityFileTable table;
  if (format == OutputFormat::csv) {
    std::vector<std::string> header;
    const auto rows = read_csv(path, header);
    for (std::size_t c = 2; c < header.size(); ++c) {
      const std::string prefix = "f_gamma_";
      if (header[c].rfind(prefix, 0) != 0) {
        throw IoError("unexpected fidelity column: " + header[c]);
      }
      table.gamma_levels.push_back(std::stoi(header[c].substr(prefix.size())));
    }
    for (const auto& row : rows) {
      table.t.push_back(std::stod(row.at(0)));
      table.f_de.push_back(std::stod(row.at(1)));
      std::vector<double> gamma;
      for (std::size_t c = 2; c < row.size(); ++c) {
        gamma.push_back(std::stod(row[c]));
      }
      table.f_gamma.push_back(std::move(gamma));
    }
    return table;
  }
  const json rows = json::parse(slurp(path));
  bool first = true;
  for (const json& row : rows) {
    if (first) {
      for (const auto& item : row.items()) {
        const std::string prefix = "f_gamma_";
        if (item.key().rfind(prefix, 0) == 0) {
          table.gamma_levels.push_back(std::stoi(item.key().substr(prefix.size())));
        }
      }
      std::sort(table.gamma_levels.begin(), table.gamma_levels.end());
      first = false;
    }
    table.t.push_back(row.at("t").get<double>());
    table.f_de.push_back(row.at("f_de").get<double>());
    std::vector<double> gamma;
    for (int level : table.gamma_levels) {
      gamma.push_back(row.at("f_gamma_" + std::to_string(level)).get<double>());
    }
    table.f_gamma.push_back(std::move(gamma));
  }
  return table;
}

}  // namespace maxent::io
