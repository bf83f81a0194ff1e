#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace adicergo::cli {

/// Output of one subcommand: a CSV table, a JSON summary and console lines.
struct Report {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  nlohmann::json summary;
  std::vector<std::string> text;
};

/// %.17g with negative zero printed as 0.
std::string format_double(double v);
/// "re+imi", e.g. "1+0i".
std::string format_complex(std::complex<double> z);
nlohmann::json complex_json(std::complex<double> z);

std::string to_csv(const Report& report);

/// Writes <dir>/<report.name>.csv and .json. Throws std::runtime_error on I/O failure.
void emit_report(const Report& report, const std::filesystem::path& dir);

}  // namespace adicergo::cli
