#include "qrv/cli.hpp"
#include "qrv/version.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Compare quantum and classical random-variable laws of F(A, B)", "qrvlab"};
  app.set_version_flag("--version", std::string(qrv::kToolName) + " " + qrv::kVersion);
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::size_t> samples_override;

  CLI::App* run = app.add_subcommand("run", "Run scenarios from a config file");
  run->add_option("--config", config_path, "Path to a key = value config file")->required();
  run->add_option("--out", out_dir, "Directory for reports, CSV tables and the manifest")
      ->required();
  run->add_option("--seed", seed_override, "Override the sampling-oracle seed");
  run->add_option("--samples", samples_override, "Override the sampling-oracle draw count");

  CLI::App* list = app.add_subcommand("list-scenarios", "Print the registered scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : qrv::kExitBadRequest;
  }

  if (run->parsed()) {
    return qrv::run_command(config_path, out_dir, seed_override, samples_override, std::cout,
                            std::cerr);
  }
  if (list->parsed()) {
    std::cout << qrv::list_scenarios_text();
    return 0;
  }

  std::cout << app.help();
  return qrv::kExitBadRequest;
}
