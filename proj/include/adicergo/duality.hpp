#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "adicergo/adic_int.hpp"
#include "adicergo/basis.hpp"
#include "adicergo/bigint.hpp"

namespace adicergo {

/// The dual-group element chi_{l / A(r)} over a basis. On a window basis
/// (offset k < 0) it is a character of Lambda_k, i.e. an element of Q_{a*}
/// seen modulo the annihilator of Lambda_k.
class Character {
 public:
  /// Throws std::invalid_argument unless 0 <= ell < A(level).
  Character(Basis basis, int level, BigInt ell);

  static Character trivial(const Basis& basis);

  /// `<l>/<A>` (A must equal A(r) for some r) or `<l>@level:<r>`.
  static Character parse(std::string_view spec, const Basis& basis);
  std::string to_string() const;

  const Basis& basis() const { return basis_; }
  int level() const { return level_; }
  const BigInt& numerator() const { return ell_; }
  const BigInt& modulus() const { return modulus_; }

  /// The same character written at a finer level s >= level.
  Character raised(int s) const;

  bool is_trivial() const { return ell_ == 0; }

  friend bool operator==(const Character&, const Character&) = default;

 private:
  Basis basis_;
  int level_;
  BigInt modulus_;
  BigInt ell_;
};

/// chi(x) = e((l * v mod A(r)) / A(r)) where v is x reduced to the character's
/// level. Throws BasisMismatch, or std::invalid_argument if x is coarser than chi.
std::complex<double> char_eval(const Character& chi, const AdicInt& x);

/// Restriction of a window character to Z_a (the quotient map Psi).
/// Satisfies char_eval(chi, lift_to_window(x)) == char_eval(psi_restrict(chi), x).
Character psi_restrict(const Character& chi);

struct Fraction {
  BigInt num;
  BigInt den;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// The data from which the Weyl limits G and H are computed: a modulus D and
/// gamma(x) = sum_j g_j x^j (mod D) with chi(rho(n)) = e(c) * e(gamma(n) / D)
/// for every integer n, where c is the constant-term phase.
class ReducedPhase {
 public:
  /// g holds g_1..g_k (g[0] is the linear coefficient).
  ReducedPhase(BigInt modulus, std::vector<BigInt> g, Fraction constant = {0, 1},
               std::vector<Fraction> fractions = {});

  const BigInt& modulus() const { return modulus_; }
  const std::vector<BigInt>& gamma_coefficients() const { return g_; }
  const Fraction& constant_phase() const { return constant_; }
  /// m_j / B_j in lowest terms, j = 1..k.
  const std::vector<Fraction>& fractions() const { return fractions_; }

  /// gamma(x) mod D.
  BigInt gamma(const BigInt& x) const;
  /// e(c) * e(gamma(n) / D).
  std::complex<double> eval(const BigInt& n) const;

  friend bool operator==(const ReducedPhase&, const ReducedPhase&) = default;

 private:
  BigInt modulus_;
  std::vector<BigInt> g_;
  Fraction constant_;
  std::vector<Fraction> fractions_;
};

/// Builds l_j = l * v_j mod A(r), reduces l_j / A(r) to m_j / B_j, D = lcm(B_j),
/// g_j = m_j * D / B_j. Degree-0 rho gives D = 1 with only the constant phase.
ReducedPhase reduce_phase(const Character& chi, const AdicPoly& rho);

}  // namespace adicergo
