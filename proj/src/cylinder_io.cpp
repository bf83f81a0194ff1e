#include "adicergo/cylinder_io.hpp"

#include <fstream>
#include <stdexcept>

namespace adicergo {

namespace {

nlohmann::json encode(const std::vector<Complex>& values) {
  auto arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back({v.real(), v.imag()});
  return arr;
}

std::vector<Complex> decode(const nlohmann::json& arr, std::string_view field) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(field) + ": expected an array");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument(std::string(field) + ": entries must be [re, im] pairs");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const CylinderFunction& f) {
  return {{"basis", f.basis.to_string()}, {"r", f.precision}, {"values", encode(f.values)}};
}

CylinderFunction cylinder_from_json(const nlohmann::json& j) {
  CylinderFunction f{Basis::parse(j.at("basis").get<std::string>()), j.at("r").get<int>(),
                     decode(j.at("values"), "values")};
  f.validate();
  return f;
}

nlohmann::json to_json(const Spectrum& s) {
  return {{"basis", s.basis.to_string()},
          {"r", s.precision},
          {"coefficients", encode(s.coefficients)}};
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
  Spectrum s{Basis::parse(j.at("basis").get<std::string>()), j.at("r").get<int>(),
             decode(j.at("coefficients"), "coefficients")};
  if (s.basis.modulus(s.precision) != s.coefficients.size()) {
    throw std::invalid_argument("spectrum: coefficient count is not A(r)");
  }
  return s;
}

CylinderFunction read_cylinder(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return cylinder_from_json(nlohmann::json::parse(in));
}

void write_cylinder(const std::filesystem::path& path, const CylinderFunction& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(f).dump(1) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace adicergo
