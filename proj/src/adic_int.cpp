#include "adicergo/adic_int.hpp"

#include <stdexcept>
#include <string>

#include "adicergo/errors.hpp"

namespace adicergo {

namespace {

void require_same(const AdicInt& x, const AdicInt& y) {
  if (x.basis() != y.basis() || x.precision() != y.precision()) {
    throw BasisMismatch("a-adic operands differ in basis or precision: " + x.basis().to_string() +
                        "/r=" + std::to_string(x.precision()) + " vs " + y.basis().to_string() +
                        "/r=" + std::to_string(y.precision()));
  }
}

}  // namespace

AdicInt::AdicInt(Basis basis, int precision, BigInt v)
    : basis_(std::move(basis)), precision_(precision), v_(std::move(v)) {
  if (precision_ < basis_.offset()) {
    throw std::invalid_argument("precision " + std::to_string(precision_) +
                                " below basis offset " + std::to_string(basis_.offset()));
  }
  modulus_ = basis_.modulus(precision_);
  if (v_ < 0 || v_ >= modulus_) {
    throw std::invalid_argument("residue out of range [0, A(r))");
  }
}

AdicInt AdicInt::embed(const BigInt& n, const Basis& basis, int r) {
  if (r < basis.offset()) throw std::invalid_argument("precision below basis offset");
  return AdicInt(basis, r, mod_floor(n, basis.modulus(r)));
}

AdicInt AdicInt::from_digits(const Digits& d) {
  const int count = d.precision - d.offset() + 1;
  if (count < 0 || static_cast<int>(d.digits.size()) != count) {
    throw std::invalid_argument("digit count does not match precision");
  }
  BigInt v = 0;
  for (int i = d.precision; i >= d.offset(); --i) {
    const auto digit = d.digits[static_cast<std::size_t>(i - d.offset())];
    const auto radix = d.basis.a(i);
    if (digit >= radix) {
      throw std::invalid_argument("digit " + std::to_string(digit) + " at position " +
                                  std::to_string(i) + " not in [0, " + std::to_string(radix) + ")");
    }
    v = v * radix + digit;
  }
  return AdicInt(d.basis, d.precision, std::move(v));
}

Digits AdicInt::to_digits() const {
  Digits d{basis_, precision_, {}};
  BigInt rest = v_;
  for (int i = basis_.offset(); i <= precision_; ++i) {
    const auto radix = basis_.a(i);
    d.digits.push_back((rest % radix).convert_to<std::uint64_t>());
    rest /= radix;
  }
  return d;
}

AdicInt AdicInt::reduced(int s) const {
  if (s > precision_) throw std::invalid_argument("cannot raise precision by reduction");
  return embed(v_, basis_, s);
}

Digits add_carry(const Digits& x, const Digits& y) {
  if (x.basis != y.basis || x.precision != y.precision || x.digits.size() != y.digits.size()) {
    throw BasisMismatch("add_carry: digit sequences over different bases");
  }
  Digits z{x.basis, x.precision, std::vector<std::uint64_t>(x.digits.size())};
  // x_i + y_i + t_{i-1} = t_i a_i + z_i, with t_{-1} = 0.
  std::uint64_t carry = 0;
  for (std::size_t j = 0; j < x.digits.size(); ++j) {
    const auto radix = x.basis.a(x.offset() + static_cast<int>(j));
    const auto sum = static_cast<unsigned __int128>(x.digits[j]) + y.digits[j] + carry;
    z.digits[j] = static_cast<std::uint64_t>(sum % radix);
    carry = static_cast<std::uint64_t>(sum / radix);
  }
  return z;
}

AdicInt add_mod(const AdicInt& x, const AdicInt& y) {
  require_same(x, y);
  BigInt v = x.residue() + y.residue();
  if (v >= x.modulus()) v -= x.modulus();
  return AdicInt(x.basis(), x.precision(), std::move(v));
}

AdicInt negate(const AdicInt& x) {
  if (x.residue() == 0) return x;
  return AdicInt(x.basis(), x.precision(), x.modulus() - x.residue());
}

AdicInt mul(const AdicInt& x, const AdicInt& y) {
  require_same(x, y);
  return AdicInt(x.basis(), x.precision(), (x.residue() * y.residue()) % x.modulus());
}

AdicInt scale(const BigInt& n, const AdicInt& x) {
  return AdicInt(x.basis(), x.precision(), mod_floor(n * x.residue(), x.modulus()));
}

bool is_generator(const AdicInt& x) { return boost::multiprecision::gcd(x.residue(), x.modulus()) == 1; }

AdicInt rebase(const AdicInt& x) {
  const int k = x.basis().offset();
  return AdicInt(x.basis().shifted(0), x.precision() - k, x.residue());
}

AdicInt unrebase(const AdicInt& x, int offset) {
  if (x.basis().offset() != 0) throw std::invalid_argument("unrebase expects an offset-0 basis");
  return AdicInt(x.basis().shifted(offset), x.precision() + offset, x.residue());
}

AdicInt lift_to_window(const AdicInt& x, const Basis& window) {
  if (x.basis().offset() != 0) throw std::invalid_argument("lift_to_window expects Z_a input");
  if (window.offset() > 0 || window.from_index(0) != x.basis()) {
    throw BasisMismatch("window basis does not contain " + x.basis().to_string());
  }
  return AdicInt(window, x.precision(), x.residue() * window.modulus(-1));
}

AdicPoly::AdicPoly(std::vector<AdicInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (c.basis() != coeffs_.front().basis() || c.precision() != coeffs_.front().precision()) {
      throw BasisMismatch("polynomial coefficients over different bases");
    }
  }
}

AdicPoly AdicPoly::embed(std::span<const BigInt> coeffs, const Basis& basis, int r) {
  std::vector<AdicInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(AdicInt::embed(c, basis, r));
  return AdicPoly(std::move(out));
}

AdicPoly AdicPoly::parse(std::string_view coeffs, const Basis& basis, int r) {
  std::vector<BigInt> ints;
  while (true) {
    const auto comma = coeffs.find(',');
    ints.push_back(parse_bigint(coeffs.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    coeffs.remove_prefix(comma + 1);
  }
  return embed(ints, basis, r);
}

int AdicPoly::degree() const {
  for (int j = static_cast<int>(coeffs_.size()) - 1; j > 0; --j) {
    if (coeffs_[static_cast<std::size_t>(j)].residue() != 0) return j;
  }
  return 0;
}

AdicPoly AdicPoly::reduced(int s) const {
  std::vector<AdicInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.reduced(s));
  return AdicPoly(std::move(out));
}

std::string AdicPoly::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ',';
    out += coeffs_[j].residue().str();
  }
  return out;
}

std::vector<std::uint64_t> AdicPoly::residues_u64(int s) const {
  if (s > precision()) throw std::invalid_argument("residues requested above polynomial precision");
  const BigInt m = basis().modulus(s);
  if (m >= (BigInt(1) << 63)) throw std::invalid_argument("A(r) does not fit in a machine word");
  std::vector<std::uint64_t> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(BigInt(c.residue() % m).convert_to<std::uint64_t>());
  return out;
}

AdicInt eval_poly(std::span<const AdicInt> rho, const BigInt& n) {
  if (rho.empty()) throw std::invalid_argument("eval_poly: empty coefficient list");
  const auto& m = rho.front().modulus();
  const BigInt x = mod_floor(n, m);
  BigInt acc = 0;
  for (auto it = rho.rbegin(); it != rho.rend(); ++it) {
    require_same(*it, rho.front());
    acc = (acc * x + it->residue()) % m;
  }
  return AdicInt(rho.front().basis(), rho.front().precision(), std::move(acc));
}

}  // namespace adicergo
