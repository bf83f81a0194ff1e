#include "adicergo/duality.hpp"

#include <stdexcept>
#include <string>

#include "adicergo/errors.hpp"
#include "adicergo/phase.hpp"

namespace adicergo {

namespace {

Fraction reduce_fraction(const BigInt& num, const BigInt& den) {
  const BigInt n = mod_floor(num, den);
  if (n == 0) return {0, 1};
  const BigInt g = boost::multiprecision::gcd(n, den);
  return {n / g, den / g};
}

BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace

Character::Character(Basis basis, int level, BigInt ell)
    : basis_(std::move(basis)), level_(level), ell_(std::move(ell)) {
  if (level_ < basis_.offset()) throw std::invalid_argument("character level below basis offset");
  modulus_ = basis_.modulus(level_);
  if (ell_ < 0 || ell_ >= modulus_) {
    throw std::invalid_argument("character numerator must satisfy 0 ≤ ℓ < A(r) = " +
                                modulus_.str());
  }
}

Character Character::trivial(const Basis& basis) { return Character(basis, basis.offset(), 0); }

Character Character::parse(std::string_view spec, const Basis& basis) {
  if (const auto at = spec.find("@level:"); at != std::string_view::npos) {
    const BigInt ell = parse_bigint(spec.substr(0, at));
    const BigInt level = parse_bigint(spec.substr(at + 7));
    if (level < basis.offset() || level > 10000) {
      throw std::invalid_argument("character level out of range in '" + std::string(spec) + "'");
    }
    return Character(basis, level.convert_to<int>(), ell);
  }
  const auto slash = spec.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("character must be '<l>/<A>' or '<l>@level:<r>', got '" +
                                std::string(spec) + "'");
  }
  const BigInt ell = parse_bigint(spec.substr(0, slash));
  const BigInt den = parse_bigint(spec.substr(slash + 1));
  const auto level = basis.level_of(den);
  if (!level) {
    throw std::invalid_argument("character denominator " + den.str() + " is not A(r) for " +
                                basis.to_string());
  }
  return Character(basis, *level, ell);
}

std::string Character::to_string() const { return ell_.str() + "/" + modulus_.str(); }

Character Character::raised(int s) const {
  if (s < level_) throw std::invalid_argument("cannot lower a character's level");
  const BigInt m = basis_.modulus(s);
  return Character(basis_, s, ell_ * (m / modulus_));
}

std::complex<double> char_eval(const Character& chi, const AdicInt& x) {
  if (chi.basis() != x.basis()) {
    throw BasisMismatch("char_eval: character over " + chi.basis().to_string() +
                        ", element over " + x.basis().to_string());
  }
  if (x.precision() < chi.level()) {
    throw std::invalid_argument("char_eval: element precision below character level");
  }
  const BigInt v = x.residue() % chi.modulus();
  return unit_root(BigInt((chi.numerator() * v) % chi.modulus()), chi.modulus());
}

Character psi_restrict(const Character& chi) {
  const Basis& basis = chi.basis();
  if (basis.offset() == 0) return chi;
  const Basis integers = basis.from_index(0);
  if (chi.level() < 0) return Character::trivial(integers);
  // An element w of Z_a sits in the window as w * A(-1); chi sends it to
  // e(l * A(-1) * w / A(r)) = e(l * w / A_0(r)).
  const BigInt m = integers.modulus(chi.level());
  return Character(integers, chi.level(), chi.numerator() % m);
}

ReducedPhase::ReducedPhase(BigInt modulus, std::vector<BigInt> g, Fraction constant,
                           std::vector<Fraction> fractions)
    : modulus_(std::move(modulus)),
      g_(std::move(g)),
      constant_(std::move(constant)),
      fractions_(std::move(fractions)) {
  if (modulus_ < 1) throw std::invalid_argument("reduced phase modulus must be ≥ 1");
  for (auto& gj : g_) gj = mod_floor(gj, modulus_);
  constant_ = reduce_fraction(constant_.num, constant_.den);
}

BigInt ReducedPhase::gamma(const BigInt& x) const {
  const BigInt xm = mod_floor(x, modulus_);
  BigInt acc = 0;
  for (auto it = g_.rbegin(); it != g_.rend(); ++it) acc = (acc + *it) * xm % modulus_;
  return acc;
}

std::complex<double> ReducedPhase::eval(const BigInt& n) const {
  // e(c + gamma(n)/D), combined over the common denominator before rounding.
  const BigInt den = lcm(constant_.den, modulus_);
  const BigInt num = constant_.num * (den / constant_.den) + gamma(n) * (den / modulus_);
  return unit_root(num, den);
}

ReducedPhase reduce_phase(const Character& chi, const AdicPoly& rho) {
  if (chi.basis() != rho.basis()) {
    throw BasisMismatch("reduce_phase: character over " + chi.basis().to_string() +
                        ", polynomial over " + rho.basis().to_string());
  }
  if (rho.precision() < chi.level()) {
    throw std::invalid_argument("reduce_phase: polynomial precision below character level");
  }
  const BigInt& A = chi.modulus();
  const auto& alpha = rho.coefficients();

  auto fraction_of = [&](const AdicInt& a) {
    // l_j = l * (alpha_j mod A(r)) mod A(r), then l_j / A(r) in lowest terms.
    return reduce_fraction(chi.numerator() * (a.residue() % A), A);
  };

  std::vector<Fraction> fractions;
  BigInt D = 1;
  for (std::size_t j = 1; j < alpha.size(); ++j) {
    fractions.push_back(fraction_of(alpha[j]));
    D = lcm(D, fractions.back().den);
  }
  std::vector<BigInt> g;
  g.reserve(fractions.size());
  for (const auto& f : fractions) g.push_back(f.num * (D / f.den));
  while (!g.empty() && g.back() == 0) g.pop_back();

  return ReducedPhase(D, std::move(g), fraction_of(alpha[0]), std::move(fractions));
}

}  // namespace adicergo
