#pragma once

#include "qrv/scenarios.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrv {

/// Malformed or semantically invalid config text (exit 2 at the CLI).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem trouble: unreadable config, unwritable outputs (exit 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;            // all verdicts consistent
inline constexpr int kExitInconsistent = 1;  // some verdict inconsistent
inline constexpr int kExitBadRequest = 2;    // parse error or unknown scenario
inline constexpr int kExitIoFailure = 3;     // I/O failure

/// A parsed run request: which scenarios, with which shared parameters.
struct RunConfig {
  std::vector<std::string> scenario_ids;  // defaults to every registered id
  ScenarioConfig base;                    // id field unused here
};

/// Parses the flat `key = value` config dialect: one pair per line, `#`
/// comments, blank lines ignored, `scenarios` takes a comma-separated list
/// (or `all`), tolerance keys accept `auto` where a scale-aware default
/// exists. Unknown and duplicate keys are errors.
RunConfig parse_config_text(const std::string& text);

/// Reads and parses a config file; ConfigError on bad content, IoError if
/// the file cannot be read.
RunConfig load_config(const std::string& path);

struct ScenarioRunRecord {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string report_path;
  std::string distributions_path;
  bool verdict_consistent = false;
  double wall_ms = 0.0;
};

struct RunManifest {
  std::string tool;
  std::string version;
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<ScenarioRunRecord> scenarios;
  bool all_consistent = false;
};

nlohmann::ordered_json manifest_to_json(const RunManifest& manifest);

/// Executes `run`: loads the config, applies overrides, validates every
/// scenario id before writing anything, then emits per-scenario report JSON
/// and distribution CSV plus a final manifest.json. Progress goes to `out`,
/// errors to `err`. Returns one of the kExit* codes.
int run_command(const std::string& config_path, const std::string& out_dir,
                std::optional<std::uint64_t> seed_override,
                std::optional<std::size_t> samples_override, std::ostream& out,
                std::ostream& err);

/// Stable, run-independent table of registered scenarios and their defaults.
std::string list_scenarios_text();

}  // namespace qrv
