#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace adicergo {

using BigInt = boost::multiprecision::cpp_int;

/// Least non-negative residue of n modulo m (m > 0).
inline BigInt mod_floor(const BigInt& n, const BigInt& m) {
  BigInt r = n % m;
  if (r < 0) r += m;
  return r;
}

inline std::optional<std::uint64_t> to_u64(const BigInt& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return n.convert_to<std::uint64_t>();
}

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace adicergo
