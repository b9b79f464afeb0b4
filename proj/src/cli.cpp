#include "qrv/cli.hpp"

#include "qrv/report_io.hpp"
#include "qrv/version.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace qrv {

namespace {

namespace fs = std::filesystem;

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t consumed = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &consumed);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' needs a number, got '" + value + "'");
  }
  if (consumed != value.size()) {
    throw ConfigError("config: key '" + key + "' needs a number, got '" + value + "'");
  }
  return parsed;
}

/// Accepts `auto` as the sentinel for scale-aware defaults.
double parse_tolerance(const std::string& key, const std::string& value, bool allows_auto) {
  if (allows_auto && value == "auto") return -1.0;
  return parse_double(key, value);
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  if (value.find('-') != std::string::npos) {
    throw ConfigError("config: key '" + key + "' needs a nonnegative integer, got '" + value +
                      "'");
  }
  std::size_t consumed = 0;
  std::uint64_t parsed = 0;
  try {
    parsed = std::stoull(value, &consumed);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' needs a nonnegative integer, got '" + value +
                      "'");
  }
  if (consumed != value.size()) {
    throw ConfigError("config: key '" + key + "' needs a nonnegative integer, got '" + value +
                      "'");
  }
  return parsed;
}

std::vector<std::string> parse_scenario_list(const std::string& value) {
  if (value == "all") {
    std::vector<std::string> ids;
    for (const auto& info : scenario_registry()) ids.push_back(info.id);
    return ids;
  }
  std::vector<std::string> ids;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::string id = trim(item);
    if (id.empty()) throw ConfigError("config: empty entry in 'scenarios' list");
    ids.push_back(id);
  }
  if (ids.empty()) throw ConfigError("config: 'scenarios' list is empty");
  return ids;
}

std::string join(const std::vector<std::string>& parts, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += separator;
    out += parts[i];
  }
  return out;
}

std::string tolerance_text(double value) {
  return value < 0.0 ? "auto" : format_full_precision(value);
}

std::vector<std::pair<std::string, std::string>> echo_config(const RunConfig& config) {
  const ScenarioConfig& base = config.base;
  return {
      {"scenarios", join(config.scenario_ids, ", ")},
      {"dim", std::to_string(base.dim)},
      {"t_over_m", format_full_precision(base.t_over_m)},
      {"alpha", format_full_precision(base.alpha)},
      {"squeeze", format_full_precision(base.squeeze)},
      {"rotation", format_full_precision(base.rotation)},
      {"grid_length", format_full_precision(base.grid_length)},
      {"seed", std::to_string(base.seed)},
      {"samples", std::to_string(base.samples)},
      {"tol_commutator_rel", format_full_precision(base.tol.commutator_rel)},
      {"tol_eig", tolerance_text(base.tol.eig)},
      {"tol_bin", tolerance_text(base.tol.bin)},
      {"tol_snap", tolerance_text(base.tol.snap)},
      {"tol_equal_w1", format_full_precision(base.tol.equal_w1)},
      {"tol_functional", format_full_precision(base.tol.functional)},
      {"tol_eigvec", format_full_precision(base.tol.eigvec)},
      {"tol_c_check", format_full_precision(base.tol.c_check)},
  };
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);  // binary keeps LF endings
  if (!stream) throw IoError("cannot open '" + path.string() + "' for writing");
  stream << content;
  stream.flush();
  if (!stream) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig config;
  bool scenarios_given = false;
  std::set<std::string> seen;

  std::stringstream stream(text);
  std::string raw_line;
  int line_number = 0;
  while (std::getline(stream, raw_line)) {
    ++line_number;
    const auto comment = raw_line.find('#');
    if (comment != std::string::npos) raw_line.erase(comment);
    const std::string line = trim(raw_line);
    if (line.empty()) continue;

    const auto equals = line.find('=');
    if (equals == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_number) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, equals));
    const std::string value = trim(line.substr(equals + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config line " + std::to_string(line_number) +
                        ": expected 'key = value'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("config line " + std::to_string(line_number) + ": duplicate key '" + key +
                        "'");
    }

    ScenarioConfig& base = config.base;
    if (key == "scenarios") {
      config.scenario_ids = parse_scenario_list(value);
      scenarios_given = true;
    } else if (key == "dim") {
      const std::uint64_t dim = parse_unsigned(key, value);
      if (dim < 2 || dim > 4096) {
        throw ConfigError("config: 'dim' must be between 2 and 4096");
      }
      base.dim = int(dim);
    } else if (key == "t_over_m") {
      base.t_over_m = parse_double(key, value);
    } else if (key == "alpha") {
      base.alpha = parse_double(key, value);
    } else if (key == "squeeze") {
      base.squeeze = parse_double(key, value);
    } else if (key == "rotation") {
      base.rotation = parse_double(key, value);
    } else if (key == "grid_length") {
      base.grid_length = parse_double(key, value);
    } else if (key == "seed") {
      base.seed = parse_unsigned(key, value);
    } else if (key == "samples") {
      const std::uint64_t samples = parse_unsigned(key, value);
      if (samples == 0) throw ConfigError("config: 'samples' must be positive");
      base.samples = std::size_t(samples);
    } else if (key == "tol_commutator_rel") {
      base.tol.commutator_rel = parse_tolerance(key, value, false);
    } else if (key == "tol_eig") {
      base.tol.eig = parse_tolerance(key, value, true);
    } else if (key == "tol_bin") {
      base.tol.bin = parse_tolerance(key, value, true);
    } else if (key == "tol_snap") {
      base.tol.snap = parse_tolerance(key, value, true);
    } else if (key == "tol_equal_w1") {
      base.tol.equal_w1 = parse_tolerance(key, value, false);
    } else if (key == "tol_functional") {
      base.tol.functional = parse_tolerance(key, value, false);
    } else if (key == "tol_eigvec") {
      base.tol.eigvec = parse_tolerance(key, value, false);
    } else if (key == "tol_c_check") {
      base.tol.c_check = parse_tolerance(key, value, false);
    } else {
      throw ConfigError("config line " + std::to_string(line_number) + ": unknown key '" + key +
                        "'");
    }
  }

  if (!scenarios_given) {
    config.scenario_ids = parse_scenario_list("all");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream content;
  content << stream.rdbuf();
  if (stream.bad()) throw IoError("read failed for config file '" + path + "'");
  return parse_config_text(content.str());
}

nlohmann::ordered_json manifest_to_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["tool"] = manifest.tool;
  j["version"] = manifest.version;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : manifest.config_echo) config[key] = value;
  j["config"] = std::move(config);
  nlohmann::ordered_json scenarios = nlohmann::ordered_json::array();
  for (const auto& record : manifest.scenarios) {
    nlohmann::ordered_json entry;
    entry["id"] = record.id;
    entry["seed"] = record.seed;
    entry["samples"] = record.samples;
    entry["report"] = record.report_path;
    entry["distributions"] = record.distributions_path;
    entry["verdict_consistent"] = record.verdict_consistent;
    entry["wall_ms"] = record.wall_ms;
    scenarios.push_back(std::move(entry));
  }
  j["scenarios"] = std::move(scenarios);
  j["all_consistent"] = manifest.all_consistent;
  return j;
}

int run_command(const std::string& config_path, const std::string& out_dir,
                std::optional<std::uint64_t> seed_override,
                std::optional<std::size_t> samples_override, std::ostream& out,
                std::ostream& err) {
  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const IoError& error) {
    err << "error: " << error.what() << "\n";
    return kExitIoFailure;
  } catch (const ConfigError& error) {
    err << "error: " << error.what() << "\n";
    return kExitBadRequest;
  }

  if (seed_override) config.base.seed = *seed_override;
  if (samples_override) config.base.samples = *samples_override;

  // Reject the whole request before touching the filesystem: a run with an
  // unknown id must leave no partial outputs behind.
  for (const std::string& id : config.scenario_ids) {
    if (!is_known_scenario(id)) {
      err << "error: unknown scenario id '" << id << "'\n";
      return kExitBadRequest;
    }
  }
  try {
    validate(config.base);
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return kExitBadRequest;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    err << "error: cannot create output directory '" << out_dir << "': " << ec.message() << "\n";
    return kExitIoFailure;
  }

  RunManifest manifest;
  manifest.tool = kToolName;
  manifest.version = kVersion;
  manifest.config_echo = echo_config(config);
  manifest.all_consistent = true;

  for (const std::string& id : config.scenario_ids) {
    ScenarioConfig scenario = config.base;
    scenario.id = id;

    std::optional<ComparisonReport> report;
    const auto started = std::chrono::steady_clock::now();
    try {
      report = run_scenario(scenario);
    } catch (const std::exception& error) {
      err << "error: scenario '" << id << "': " << error.what() << "\n";
      return kExitBadRequest;
    }
    const auto finished = std::chrono::steady_clock::now();
    const double wall_ms =
        std::chrono::duration<double, std::milli>(finished - started).count();

    const std::string report_name = id + "_report.json";
    const std::string csv_name = id + "_distributions.csv";
    try {
      write_file(fs::path(out_dir) / report_name, report_to_json(*report).dump(2) + "\n");
      write_file(fs::path(out_dir) / csv_name,
                 distributions_csv(report->sigma_qm, report->sigma_rv, report->tolerances.snap));
    } catch (const IoError& error) {
      err << "error: " << error.what() << "\n";
      return kExitIoFailure;
    }

    manifest.scenarios.push_back(ScenarioRunRecord{id, scenario.seed, scenario.samples,
                                                   report_name, csv_name,
                                                   report->verdict_consistent, wall_ms});
    manifest.all_consistent = manifest.all_consistent && report->verdict_consistent;
    out << id << ": " << (report->verdict_consistent ? "consistent" : "INCONSISTENT")
        << " (case " << to_string(report->label.branch) << ", w1 = "
        << format_full_precision(report->w1) << ")\n";
  }

  try {
    write_file(fs::path(out_dir) / "manifest.json", manifest_to_json(manifest).dump(2) + "\n");
  } catch (const IoError& error) {
    err << "error: " << error.what() << "\n";
    return kExitIoFailure;
  }

  return manifest.all_consistent ? kExitOk : kExitInconsistent;
}

std::string list_scenarios_text() {
  const auto& registry = scenario_registry();
  std::size_t id_width = 2;          // "id"
  std::size_t params_width = 10;     // "parameters"
  for (const auto& info : registry) {
    id_width = std::max(id_width, info.id.size());
    params_width = std::max(params_width, info.parameters.size());
  }

  std::string out;
  const auto append_row = [&](const std::string& id, const std::string& params,
                              const std::string& summary) {
    out += id;
    out.append(id_width - id.size() + 2, ' ');
    out += params;
    out.append(params_width - params.size() + 2, ' ');
    out += summary;
    out += '\n';
  };
  append_row("id", "parameters", "summary");
  for (const auto& info : registry) append_row(info.id, info.parameters, info.summary);
  return out;
}

}  // namespace qrv
