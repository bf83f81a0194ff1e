#include <doctest.h>

#include <random>

#include "adicergo/duality.hpp"
#include "adicergo/errors.hpp"
#include "oracles.hpp"

using namespace adicergo;

namespace {

bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("character evaluation examples") {
  const auto two = Basis::constant(2);
  CHECK(near(char_eval(Character(two, 2, 1), AdicInt::embed(3, two, 2)), oracle::e_frac(3, 8)));
  CHECK(char_eval(Character(two, 2, 0), AdicInt::embed(5, two, 2)) == std::complex<double>(1, 0));
  CHECK(near(char_eval(Character(two, 2, 2), AdicInt::embed(5, two, 2)), oracle::e_frac(2, 8)));
  // A finer element is reduced to the character's level first.
  CHECK(near(char_eval(Character(two, 2, 1), AdicInt::embed(11, two, 5)), oracle::e_frac(3, 8)));
  CHECK_THROWS_AS(char_eval(Character(two, 2, 1), AdicInt::embed(1, two, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(char_eval(Character(two, 2, 1), AdicInt::embed(1, Basis::constant(3), 2)),
                  BasisMismatch);
}

TEST_CASE("character parsing and validation") {
  const auto b = Basis::parse("cycle:2,3,5");
  const auto chi = Character::parse("7/30", b);
  CHECK(chi.level() == 2);
  CHECK(chi.numerator() == 7);
  CHECK(Character::parse("7@level:2", b) == chi);
  CHECK(chi.to_string() == "7/30");
  CHECK_THROWS_AS(Character::parse("30/30", b), std::invalid_argument);
  CHECK_THROWS_AS(Character::parse("1/15", b), std::invalid_argument);
  CHECK_THROWS_AS(Character::parse("1", b), std::invalid_argument);
  CHECK_THROWS_AS(Character(b, 1, -1), std::invalid_argument);
}

TEST_CASE("property: evaluation on embedded integers, multiplicativity, level raising") {
  std::mt19937_64 rng(9);
  for (const auto* spec : {"const:2", "cycle:2,3,5", "list:3,2,7,2,11"}) {
    const auto b = Basis::parse(spec);
    for (int r = 0; r <= 3; ++r) {
      const auto A = b.modulus(r).convert_to<std::int64_t>();
      for (int t = 0; t < 40; ++t) {
        const auto ell = static_cast<std::int64_t>(rng() % A);
        const Character chi(b, r, ell);
        const auto n = static_cast<std::int64_t>(rng() % 1000000) - 500000;
        CHECK(near(char_eval(chi, AdicInt::embed(n, b, r)), oracle::e_frac(ell * (n % A), A)));

        const AdicInt x = AdicInt::embed(static_cast<std::int64_t>(rng() >> 4), b, 4);
        const AdicInt y = AdicInt::embed(static_cast<std::int64_t>(rng() >> 4), b, 4);
        CHECK(near(char_eval(chi, add_mod(x, y)), char_eval(chi, x) * char_eval(chi, y)));
        CHECK(near(char_eval(chi.raised(4), x), char_eval(chi, x)));
      }
    }
  }
}

TEST_CASE("reduce_phase examples") {
  const auto two = Basis::constant(2);
  SUBCASE("l = 2, rho(n) = n: 2/8 reduces to 1/4") {
    const auto phase = reduce_phase(Character(two, 2, 2), AdicPoly::parse("0,1", two, 2));
    CHECK(phase.modulus() == 4);
    CHECK(phase.gamma_coefficients() == std::vector<BigInt>{1});
    CHECK(phase.fractions().front() == Fraction{1, 4});
  }
  SUBCASE("l = 1, rho(n) = n^2 is already reduced") {
    const auto phase = reduce_phase(Character(two, 2, 1), AdicPoly::parse("0,0,1", two, 2));
    CHECK(phase.modulus() == 8);
    CHECK(phase.gamma_coefficients() == std::vector<BigInt>{0, 1});
  }
  SUBCASE("trivial character") {
    const auto phase = reduce_phase(Character(two, 2, 0), AdicPoly::parse("3,5,1", two, 2));
    CHECK(phase.modulus() == 1);
    CHECK(phase.gamma_coefficients().empty());
    CHECK(phase.constant_phase() == Fraction{0, 1});
  }
  SUBCASE("degree zero keeps only the constant phase") {
    const auto phase = reduce_phase(Character(two, 2, 3), AdicPoly::parse("2", two, 2));
    CHECK(phase.modulus() == 1);
    CHECK(phase.constant_phase() == Fraction{3, 4});
  }
  SUBCASE("constant phase need not divide D") {
    const auto phase = reduce_phase(Character(two, 2, 2), AdicPoly::parse("1,1", two, 2));
    CHECK(phase.modulus() == 4);
    CHECK(phase.constant_phase() == Fraction{1, 4});
    const auto odd = reduce_phase(Character(two, 2, 1), AdicPoly::parse("1,2", two, 2));
    CHECK(odd.modulus() == 4);
    CHECK(odd.constant_phase() == Fraction{1, 8});
  }
  CHECK_THROWS_AS(reduce_phase(Character(two, 2, 1), AdicPoly::parse("0,1", Basis::constant(3), 2)),
                  BasisMismatch);
  CHECK_THROWS_AS(reduce_phase(Character(two, 3, 1), AdicPoly::parse("0,1", two, 2)),
                  std::invalid_argument);
}

TEST_CASE("property: reduced phase reproduces chi(rho(n))") {
  std::mt19937_64 rng(21);
  for (const auto* spec : {"const:2", "cycle:2,3,5", "list:3,2,7,2,11", "const:6"}) {
    const auto b = Basis::parse(spec);
    for (int r = 0; r <= 3; ++r) {
      const BigInt A = b.modulus(r);
      for (int t = 0; t < 30; ++t) {
        const Character chi(b, r, oracle::random_below(A, rng));
        std::vector<BigInt> ints;
        const int k = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j <= k; ++j) ints.push_back(oracle::random_below(A * 7, rng) - A * 3);
        const auto rho = AdicPoly::embed(ints, b, r);
        const auto phase = reduce_phase(chi, rho);

        // Structural invariants.
        BigInt lcm = 1;
        for (std::size_t j = 0; j < phase.fractions().size(); ++j) {
          const auto& f = phase.fractions()[j];
          CHECK(boost::multiprecision::gcd(f.num, f.den) == 1);
          CHECK(A % f.den == 0);
          lcm = lcm / boost::multiprecision::gcd(lcm, f.den) * f.den;
          const BigInt g = j < phase.gamma_coefficients().size() ? phase.gamma_coefficients()[j] : 0;
          CHECK(g == f.num * (phase.modulus() / f.den) % phase.modulus());
        }
        CHECK(phase.modulus() == lcm);

        for (int s = 0; s < 10; ++s) {
          const auto n = static_cast<std::int64_t>(rng() % 200000) - 100000;
          // prod_j chi(alpha_j)^{n^j}, each factor as chi(n^j alpha_j).
          std::complex<double> product{1.0, 0.0};
          BigInt power = 1;
          for (const auto& alpha : rho.coefficients()) {
            product *= char_eval(chi, scale(power, alpha));
            power *= n;
          }
          CHECK(near(phase.eval(n), product, 1e-11));
          CHECK(near(phase.eval(n), char_eval(chi, eval_poly(rho, n)), 1e-11));
        }
      }
    }
  }
}

TEST_CASE("psi restriction") {
  const auto two = Basis::constant(2);
  const Character chi(two, 3, 5);
  CHECK(psi_restrict(chi) == chi);

  const auto window = Basis::parse("const:2@offset:-2");
  // A(2) over the window is 2^5; l = 8 annihilates Z_a = multiples of 4.
  const Character annihilator(window, 2, 8);
  CHECK(psi_restrict(annihilator).is_trivial());
  CHECK(psi_restrict(Character(window, -1, 3)).is_trivial());

  std::mt19937_64 rng(17);
  for (const auto* spec : {"const:2@offset:-2", "cycle:2,3,5@offset:-1", "list:3,2,7,2,5@offset:-2"}) {
    const auto w = Basis::parse(spec);
    const auto integers = w.from_index(0);
    for (int r = 0; r <= w.max_index().value_or(3); ++r) {
      const BigInt Aw = w.modulus(r);
      const auto A0 = integers.modulus(r).convert_to<std::int64_t>();
      for (int t = 0; t < 10; ++t) {
        const Character c(w, r, oracle::random_below(Aw, rng));
        const Character psi = psi_restrict(c);
        CHECK(psi.basis() == integers);
        // Enumerate every x in Z_a / Lambda_{r+1}.
        for (std::int64_t x = 0; x < A0; ++x) {
          const auto xi = AdicInt::embed(x, integers, r);
          CHECK(near(char_eval(c, lift_to_window(xi, w)), char_eval(psi, xi)));
        }
      }
    }
  }
}
