#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "adicergo/bigint.hpp"

namespace adicergo {

/// e(t) = exp(2 pi i t) for a fraction t already reduced to [-1/2, 1/2].
inline std::complex<double> unit_phase(long double t) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> * t;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

/// e(num / den) with the argument reduced exactly before conversion.
inline std::complex<double> unit_root(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if (num == 0) return {1.0, 0.0};
  using u128 = unsigned __int128;
  const u128 n = num, d = den;
  if (4 * n == d) return {0.0, 1.0};
  if (2 * n == d) return {-1.0, 0.0};
  if (4 * n == 3 * d) return {0.0, -1.0};
  // Centre the angle on (-1/2, 1/2] so cos/sin see the smallest argument.
  const long double t = 2 * n > d ? -static_cast<long double>(den - num) / den
                                      : static_cast<long double>(num) / den;
  return unit_phase(t);
}

inline std::complex<double> unit_root(const BigInt& num, const BigInt& den) {
  const BigInt n = mod_floor(num, den);
  if (auto d = to_u64(den); d && *d < (std::uint64_t{1} << 63)) {
    return unit_root(n.convert_to<std::uint64_t>(), *d);
  }
  BigInt centred = 2 * n > den ? BigInt(n - den) : n;
  // Keep 64 significant bits of the quotient before going to floating point.
  const long double t = centred.convert_to<long double>() / den.convert_to<long double>();
  return unit_phase(t);
}

}  // namespace adicergo
