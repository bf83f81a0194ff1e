#include "adicergo/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>

#include "adicergo/adic_int.hpp"
#include "adicergo/duality.hpp"
#include "adicergo/errors.hpp"

namespace adicergo::cli {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void fail(std::string_view field, const std::string& what) {
  throw ConfigError(std::string(field) + ": " + what);
}

template <class T>
void take(const nlohmann::json& j, const char* key, T& target) {
  if (!j.contains(key) || j[key].is_null()) return;
  try {
    target = j[key].get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(key, std::string("wrong type in config (") + e.what() + ")");
  }
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  const std::string s = trim(text);
  const auto bad = [&] { throw std::invalid_argument("not a count: '" + s + "'"); };
  if (s.empty() || s[0] == '-') bad();
  const auto digits = [&](std::string_view d) {
    if (d.empty()) bad();
    for (char ch : d)
      if (ch < '0' || ch > '9') bad();
    return std::stoull(std::string(d));
  };
  const auto power = [&](std::uint64_t base, std::uint64_t exp, std::uint64_t mantissa) {
    long double v = mantissa;
    for (std::uint64_t i = 0; i < exp; ++i) {
      v *= base;
      if (v > 1.8e19L) bad();
    }
    return static_cast<std::uint64_t>(v);
  };
  if (const auto caret = s.find('^'); caret != std::string::npos)
    return power(digits(std::string_view(s).substr(0, caret)),
                 digits(std::string_view(s).substr(caret + 1)), 1);
  if (const auto e = s.find_first_of("eE"); e != std::string::npos)
    return power(10, digits(std::string_view(s).substr(e + 1)), digits(std::string_view(s).substr(0, e)));
  return digits(s);
}

std::vector<std::uint64_t> parse_counts(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_count(part));
  return out;
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) {
    double sign = 1.0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) {
      if (part[0] == '-') sign = -1.0;
      part = trim(std::string_view(part).substr(1));
    }
    if (part == "pi") {
      out.push_back(sign * std::numbers::pi);
    } else if (part.rfind("sqrt(", 0) == 0 && part.back() == ')') {
      const double k = std::stod(part.substr(5, part.size() - 6));
      if (k < 0) throw std::invalid_argument("sqrt of a negative number: '" + part + "'");
      out.push_back(sign * std::sqrt(k));
    } else {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(part, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != part.size() || !std::isfinite(v))
        throw std::invalid_argument("not a real number: '" + part + "'");
      out.push_back(sign * v);
    }
  }
  return out;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["command"] = c.command;
  j["basis"] = c.basis;
  j["rho"] = c.rho;
  j["r"] = c.r ? nlohmann::json(*c.r) : nlohmann::json(nullptr);
  j["characters"] = c.characters;
  j["N"] = c.N;
  j["source"] = std::string(to_string(c.source));
  j["threads"] = c.threads;
  j["max_n"] = c.budgets.max_n;
  j["max_modulus"] = c.budgets.max_modulus;
  j["wiener_evals"] = c.budgets.wiener_evals;
  j["out"] = c.out ? nlohmann::json(*c.out) : nlohmann::json(nullptr);
  j["out_dir"] = c.out_dir;
  j["q"] = c.q;
  j["psi"] = c.psi;
  j["r_max"] = c.r_max;
  j["f"] = c.f ? nlohmann::json(*c.f) : nlohmann::json(nullptr);
  j["beta"] = c.beta;
  j["terms"] = c.terms;
  j["x"] = c.x;
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig c) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  take(j, "command", c.command);
  take(j, "basis", c.basis);
  take(j, "rho", c.rho);
  if (j.contains("r")) c.r = j["r"].is_null() ? std::nullopt : std::optional<int>(j["r"].get<int>());
  take(j, "characters", c.characters);
  take(j, "N", c.N);
  if (j.contains("source")) {
    try {
      c.source = parse_source(j["source"].get<std::string>());
    } catch (const std::exception& e) {
      fail("source", e.what());
    }
  }
  take(j, "threads", c.threads);
  take(j, "max_n", c.budgets.max_n);
  take(j, "max_modulus", c.budgets.max_modulus);
  take(j, "wiener_evals", c.budgets.wiener_evals);
  if (j.contains("out")) c.out = j["out"].is_null() ? std::nullopt : std::optional(j["out"].get<std::string>());
  take(j, "out_dir", c.out_dir);
  take(j, "q", c.q);
  take(j, "psi", c.psi);
  take(j, "r_max", c.r_max);
  if (j.contains("f")) c.f = j["f"].is_null() ? std::nullopt : std::optional(j["f"].get<std::string>());
  take(j, "beta", c.beta);
  take(j, "terms", c.terms);
  take(j, "x", c.x);
  return c;
}

ExperimentConfig read_config(const std::filesystem::path& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config: " + path.string() + " is not valid JSON (" + e.what() + ")");
  }
  // The JSON summary nests the echo under "config".
  if (j.contains("config") && j["config"].is_object()) j = j["config"];
  return config_from_json(j, std::move(base));
}

int working_precision(const ExperimentConfig& c) {
  if (c.r) return *c.r;
  Basis basis = Basis::parse(c.basis);
  std::optional<int> level;
  for (const auto& s : c.characters) {
    const int l = Character::parse(s, basis).level();
    level = level ? std::max(*level, l) : l;
  }
  return level.value_or(std::max(2, basis.offset()));
}

void validate(const ExperimentConfig& c) {
  if (std::find(subcommands().begin(), subcommands().end(), c.command) == subcommands().end())
    fail("command", "unknown subcommand '" + c.command + "'");

  std::optional<Basis> basis;
  try {
    basis = Basis::parse(c.basis);
  } catch (const std::exception& e) {
    fail("basis", e.what());
  }

  std::vector<Character> chars;
  for (const auto& s : c.characters) {
    try {
      chars.push_back(Character::parse(s, *basis));
    } catch (const std::exception& e) {
      fail("char", e.what());
    }
  }

  const int r = working_precision(c);
  if (r < basis->offset())
    fail("r", "precision " + std::to_string(r) + " is below the basis offset " +
                  std::to_string(basis->offset()));
  if (auto top = basis->max_index(); top && r > *top)
    fail("r", "precision " + std::to_string(r) + " exceeds the explicit basis list");
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (chars[i].level() > r)
      fail("char", "'" + c.characters[i] + "' has level " + std::to_string(chars[i].level()) +
                       " above r = " + std::to_string(r));

  try {
    AdicPoly::parse(c.rho, *basis, r);
  } catch (const std::exception& e) {
    fail("rho", e.what());
  }

  for (auto n : c.N)
    if (n > c.budgets.max_n)
      fail("N", std::to_string(n) + " exceeds max_n " + std::to_string(c.budgets.max_n));

  if (c.threads == 0) fail("threads", "must be at least 1");
  if (c.q == 0) fail("q", "must be at least 1");
  if (c.q > c.budgets.max_n) fail("q", std::to_string(c.q) + " exceeds max_n");
  try {
    for (const auto& part : split(c.psi, ',')) parse_bigint(part);
  } catch (const std::exception& e) {
    fail("psi", e.what());
  }
  if (c.r_max < basis->offset()) fail("r_max", "below the basis offset");

  std::size_t dim = 0;
  for (const auto& b : c.beta) {
    try {
      parse_reals(b);
    } catch (const std::exception& e) {
      fail("beta", e.what());
    }
    ++dim;
  }
  for (const auto& t : c.terms) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) fail("term", "expected 'm1,...,md:re,im', got '" + t + "'");
    std::vector<std::string> freq = split(std::string_view(t).substr(0, colon), ',');
    if (dim != 0 && freq.size() != dim)
      fail("term", "'" + t + "' has " + std::to_string(freq.size()) + " frequencies for " +
                       std::to_string(dim) + " beta components");
    try {
      for (const auto& m : freq) parse_bigint(m);
      const auto coef = parse_reals(std::string_view(t).substr(colon + 1));
      if (coef.size() != 2) throw std::invalid_argument("coefficient needs re,im");
    } catch (const std::exception& e) {
      fail("term", e.what());
    }
  }
  if (!c.x.empty()) {
    try {
      const auto x = parse_reals(c.x);
      if (dim != 0 && x.size() != dim) throw std::invalid_argument("dimension differs from beta");
    } catch (const std::exception& e) {
      fail("x", e.what());
    }
  }
}

}  // namespace adicergo::cli
