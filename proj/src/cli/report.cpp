#include "adicergo/cli/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace adicergo::cli {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string out = format_double(z.real());
  if (!(im < 0.0)) out += '+';
  return out + format_double(im) + 'i';
}

nlohmann::json complex_json(std::complex<double> z) {
  return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}};
}

std::string to_csv(const Report& report) {
  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
      if (!quote) {
        out += cells[i];
        continue;
      }
      out += '"';
      for (char ch : cells[i]) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    }
    out += '\n';
  };
  line(report.header);
  for (const auto& row : report.rows) line(row);
  return out;
}

void emit_report(const Report& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  const auto write = [&](const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    out.close();
    if (!out) throw std::runtime_error("cannot write " + path.string());
  };
  write(dir / (report.name + ".csv"), to_csv(report));
  write(dir / (report.name + ".json"), report.summary.dump(2) + "\n");
}

}  // namespace adicergo::cli
