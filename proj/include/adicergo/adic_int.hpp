#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "adicergo/basis.hpp"
#include "adicergo/bigint.hpp"

namespace adicergo {

/// Mixed-radix digit expansion, least significant first: digits[i - offset] is
/// the digit at position i, with 0 <= digit < a(i).
struct Digits {
  Basis basis;
  int precision;
  std::vector<std::uint64_t> digits;

  int offset() const { return basis.offset(); }
  friend bool operator==(const Digits&, const Digits&) = default;
};

/// An element of Z_a (or of a window Lambda_k when the basis offset is k < 0),
/// truncated to digit positions offset..precision. Stored canonically as the
/// residue v modulo A(precision).
class AdicInt {
 public:
  /// Throws std::invalid_argument unless 0 <= v < A(precision).
  AdicInt(Basis basis, int precision, BigInt v);

  /// n * u reduced to precision r, i.e. n mod A(r). Negative n wraps.
  static AdicInt embed(const BigInt& n, const Basis& basis, int r);

  /// Throws std::invalid_argument for a digit outside [0, a(i)).
  static AdicInt from_digits(const Digits& d);
  Digits to_digits() const;

  const Basis& basis() const { return basis_; }
  int precision() const { return precision_; }
  const BigInt& residue() const { return v_; }
  const BigInt& modulus() const { return modulus_; }

  /// Truncation to a coarser precision s <= precision (v mod A(s)).
  AdicInt reduced(int s) const;

  friend bool operator==(const AdicInt&, const AdicInt&) = default;

 private:
  Basis basis_;
  int precision_;
  BigInt modulus_;
  BigInt v_;
};

/// Literal carry addition on digit sequences; the carry out of the top digit
/// is dropped.
Digits add_carry(const Digits& x, const Digits& y);

AdicInt add_mod(const AdicInt& x, const AdicInt& y);
AdicInt negate(const AdicInt& x);
AdicInt mul(const AdicInt& x, const AdicInt& y);
AdicInt scale(const BigInt& n, const AdicInt& x);

/// True iff gcd(v, A(r)) == 1. At every precision this is the unit test for a
/// topological generator of Z_a (x generates iff x mod A(s) generates Z/A(s)Z
/// for all s), so a truncation that passes here passes at all s <= r.
bool is_generator(const AdicInt& x);

/// Reindex a window element onto the offset-0 basis b_i = a_{i+k}.
AdicInt rebase(const AdicInt& x);
/// Inverse of rebase for a window starting at `offset`.
AdicInt unrebase(const AdicInt& x, int offset);

/// The element of Z_a given by `x` seen inside a window basis (offset <= 0)
/// containing Z_a: digits below position 0 are zero.
AdicInt lift_to_window(const AdicInt& x, const Basis& window);

/// Polynomial rho(n) = alpha_0 + alpha_1 n + ... + alpha_k n^k with a-adic
/// coefficients sharing one basis and precision.
class AdicPoly {
 public:
  explicit AdicPoly(std::vector<AdicInt> coeffs);

  /// Integer coefficients alpha_0..alpha_k embedded at precision r.
  static AdicPoly embed(std::span<const BigInt> coeffs, const Basis& basis, int r);
  /// Comma-separated integers, constant term first.
  static AdicPoly parse(std::string_view coeffs, const Basis& basis, int r);

  const Basis& basis() const { return coeffs_.front().basis(); }
  int precision() const { return coeffs_.front().precision(); }
  /// Index of the highest nonzero coefficient (0 for constants).
  int degree() const;
  const std::vector<AdicInt>& coefficients() const { return coeffs_; }

  AdicPoly reduced(int s) const;
  std::string to_string() const;

  /// Residues of the coefficients modulo A(s) as machine words. Requires
  /// A(s) < 2^63 and s <= precision.
  std::vector<std::uint64_t> residues_u64(int s) const;

 private:
  std::vector<AdicInt> coeffs_;
};

/// Horner evaluation in residues mod A(r). Throws std::invalid_argument on an
/// empty coefficient list and BasisMismatch on mixed bases.
AdicInt eval_poly(std::span<const AdicInt> rho, const BigInt& n);
inline AdicInt eval_poly(const AdicPoly& rho, const BigInt& n) {
  return eval_poly(std::span<const AdicInt>(rho.coefficients()), n);
}

/// rho(n) mod m for word-size residues; coefficients constant term first.
inline std::uint64_t horner_mod(std::span<const std::uint64_t> coeffs, std::uint64_t n,
                                std::uint64_t m) {
  const std::uint64_t x = n % m;
  if (m <= (std::uint64_t{1} << 31)) {
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it % m) % m;
    return acc;
  }
  using u128 = unsigned __int128;
  u128 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % m;
  return static_cast<std::uint64_t>(acc);
}

}  // namespace adicergo
