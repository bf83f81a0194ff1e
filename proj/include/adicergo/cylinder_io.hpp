#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "adicergo/ergodic.hpp"

namespace adicergo {

/// {"basis": "<spec>", "r": <int>, "values": [[re, im], ...]}
nlohmann::json to_json(const CylinderFunction& f);
CylinderFunction cylinder_from_json(const nlohmann::json& j);

/// Same layout with "coefficients" in place of "values".
nlohmann::json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);

CylinderFunction read_cylinder(const std::filesystem::path& path);
void write_cylinder(const std::filesystem::path& path, const CylinderFunction& f);

}  // namespace adicergo
