#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adicergo/cli/config.hpp"
#include "adicergo/cli/report.hpp"

namespace adicergo::cli {

/// Builds a config from command-line arguments (without the program name).
/// Precedence: flags, then ADICERGO_MAX_N (`env_max_n`), then --config file,
/// then defaults. Returns nullopt after printing help.
std::optional<ExperimentConfig> parse_config(const std::vector<std::string>& args,
                                             std::optional<std::string> env_max_n,
                                             std::ostream& out);

/// Runs a validated config. Notices go to `notices`.
Report run_command(const ExperimentConfig& config, std::ostream& notices);

/// Full front end: parse, validate, run, print, write files.
/// Exit status 0 on success, 1 on validation or budget errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adicergo::cli
