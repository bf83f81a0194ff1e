#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adicergo/budget.hpp"

namespace adicergo::cli {

/// Everything a subcommand needs. Strings keep the user's spelling so the
/// JSON echo reproduces the invocation.
struct ExperimentConfig {
  std::string command;
  std::string basis = "const:2";
  std::string rho = "0,0,1";
  std::optional<int> r;                  // defaults to the highest character level, else 2
  std::vector<std::string> characters;   // "l/A" or "l@level:r"
  std::vector<std::uint64_t> N;
  Source source = Source::primes;        // also the multiplier kind
  unsigned threads = 1;
  Budgets budgets;

  std::optional<std::string> out;        // base name of <out>.csv / <out>.json
  std::string out_dir = ".";

  std::uint64_t q = 5;                   // gauss
  std::string psi = "0,1";               // gauss, a_1 first
  int r_max = 6;                         // wiener
  std::optional<std::string> f;          // cylinder function file
  std::vector<std::string> beta;         // torus, one polynomial per component
  std::vector<std::string> terms;        // torus, "m1,...,md:re,im"
  std::string x;                         // torus shift, empty means 0

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"gauss",   "multiplier", "weyl",  "average",
                                              "limit",   "compare",    "torus", "wiener"};
  return names;
}

nlohmann::json to_json(const ExperimentConfig& c);
/// Missing fields keep the values already in `base`.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});
ExperimentConfig read_config(const std::filesystem::path& path, ExperimentConfig base = {});

/// Parses a count such as 1000000, 1e6 or 10^6.
std::uint64_t parse_count(std::string_view text);
/// Comma-separated counts.
std::vector<std::uint64_t> parse_counts(std::string_view text);
/// Comma-separated reals; entries may be sqrt(k), -sqrt(k) or pi.
std::vector<double> parse_reals(std::string_view text);

/// Checks every field against the engines' preconditions. Errors name the field.
void validate(const ExperimentConfig& c);

/// Precision used by the run: r, else the highest character level, else 2.
int working_precision(const ExperimentConfig& c);

/// Thrown for malformed or inconsistent configuration. The message starts with
/// the field name.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace adicergo::cli
