#include <doctest.h>

#include <random>

#include "adicergo/adic_int.hpp"
#include "adicergo/errors.hpp"
#include "oracles.hpp"

using namespace adicergo;

namespace {

Digits digits(const Basis& b, int r, std::vector<std::uint64_t> d) { return {b, r, std::move(d)}; }

}  // namespace

TEST_CASE("basis grammar") {
  const auto b = Basis::parse("cycle:2,3,5");
  CHECK(b.kind() == Basis::Kind::cycle);
  CHECK(b.a(0) == 2);
  CHECK(b.a(3) == 2);
  CHECK(b.a(5) == 5);
  CHECK(b.modulus(2) == 30);
  CHECK(b.modulus(-1) == 1);
  CHECK(b.to_string() == "cycle:2,3,5");

  const auto w = Basis::parse("list:3,2,7,2@offset:-2");
  CHECK(w.offset() == -2);
  CHECK(w.a(-2) == 3);
  CHECK(w.a(1) == 2);
  CHECK(w.max_index() == 1);
  CHECK_THROWS_AS(w.a(2), std::out_of_range);
  CHECK(w.to_string() == "list:3,2,7,2@offset:-2");
  CHECK(Basis::parse(w.to_string()) == w);
  CHECK(w.from_index(0) == Basis::list({7, 2}));
  CHECK(Basis::parse("cycle:2,3,5@offset:-1").from_index(0) == Basis::cycle({3, 5, 2}));

  CHECK(b.level_of(30) == 2);
  CHECK_FALSE(b.level_of(15).has_value());

  CHECK_THROWS_WITH(Basis::parse("const:1"), "basis entries must be ≥ 2");
  CHECK_THROWS_AS(Basis::parse("list:2,x"), std::invalid_argument);
  CHECK_THROWS_AS(Basis::parse("fib:2"), std::invalid_argument);
  CHECK_THROWS_AS(Basis::parse("const:2@offset:1"), std::invalid_argument);
}

TEST_CASE("A(r) is strictly increasing with A(r) = A(r-1) a(r)") {
  for (const auto* spec : {"const:2", "cycle:2,3,5", "list:3,2,7,2", "const:7@offset:-3"}) {
    const auto b = Basis::parse(spec);
    const int top = b.max_index().value_or(12);
    for (int r = b.offset(); r <= top; ++r) {
      CHECK(b.modulus(r) == b.modulus(r - 1) * b.a(r));
      CHECK(b.modulus(r) > b.modulus(r - 1));
    }
  }
}

TEST_CASE("embed") {
  const auto two = Basis::constant(2);
  CHECK(AdicInt::embed(11, two, 2).residue() == 3);
  CHECK(AdicInt::embed(0, two, 2).residue() == 0);
  CHECK(AdicInt::embed(0, Basis::parse("cycle:2,3,5"), 4).residue() == 0);
  CHECK(AdicInt::embed(-1, two, 2).residue() == 7);
  CHECK_THROWS_AS(AdicInt(two, 2, 8), std::invalid_argument);
}

TEST_CASE("digit codec") {
  const auto two = Basis::constant(2);
  const auto b235 = Basis::list({2, 3, 5});
  CHECK(AdicInt::embed(3, two, 2).to_digits().digits == std::vector<std::uint64_t>{1, 1, 0});
  // 26 = 0 + 2*1 + 6*4
  CHECK(AdicInt::embed(26, b235, 2).to_digits().digits == std::vector<std::uint64_t>{0, 1, 4});
  CHECK(oracle::digits_top_down(26, {2, 3, 5}) == std::vector<std::uint64_t>{0, 1, 4});
  CHECK(AdicInt::from_digits(digits(b235, 2, {0, 0, 0})).residue() == 0);
  CHECK_THROWS_AS(AdicInt::from_digits(digits(b235, 2, {0, 3, 0})), std::invalid_argument);
  CHECK_THROWS_AS(AdicInt::from_digits(digits(b235, 2, {0, 0})), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (const auto* spec : {"const:2", "cycle:2,3,5", "list:3,2,7,2", "const:3@offset:-2"}) {
    const auto b = Basis::parse(spec);
    const int r = b.max_index().value_or(40);
    const auto radices = b.radices(r);
    for (int t = 0; t < 200; ++t) {
      const BigInt v = oracle::random_below(b.modulus(r), rng);
      const AdicInt x(b, r, v);
      const auto d = x.to_digits();
      CHECK(d.digits == oracle::digits_top_down(v, radices));
      CHECK(AdicInt::from_digits(d) == x);
    }
  }
}

TEST_CASE("carry addition") {
  const auto two = Basis::constant(2);
  const auto b235 = Basis::list({2, 3, 5});
  CHECK(add_carry(digits(two, 2, {1, 1, 0}), digits(two, 2, {1, 0, 0})).digits ==
        std::vector<std::uint64_t>{0, 0, 1});
  // 29 + 1 = 30 = A(2): everything carries out of the top digit.
  CHECK(add_carry(digits(b235, 2, {1, 2, 4}), digits(b235, 2, {1, 0, 0})).digits ==
        std::vector<std::uint64_t>{0, 0, 0});
  CHECK(AdicInt::from_digits(digits(b235, 2, {1, 2, 4})).residue() == 29);
  const auto x = digits(b235, 2, {1, 2, 3});
  CHECK(add_carry(x, digits(b235, 2, {0, 0, 0})) == x);
  CHECK_THROWS_AS(add_carry(x, digits(two, 2, {0, 0, 0})), BasisMismatch);
}

TEST_CASE("ring operations") {
  const auto two = Basis::constant(2);
  const auto b235 = Basis::list({2, 3, 5});
  CHECK(add_mod(AdicInt::embed(3, two, 2), AdicInt::embed(1, two, 2)) == AdicInt::embed(4, two, 2));
  CHECK(mul(AdicInt::embed(7, b235, 2), AdicInt::embed(8, b235, 2)) == AdicInt::embed(26, b235, 2));
  CHECK(scale(5, AdicInt::embed(3, two, 2)) == AdicInt::embed(7, two, 2));
  CHECK(add_mod(AdicInt::embed(5, two, 2), negate(AdicInt::embed(5, two, 2))).residue() == 0);
  CHECK_THROWS_AS(add_mod(AdicInt::embed(1, two, 2), AdicInt::embed(1, two, 3)), BasisMismatch);
  CHECK_THROWS_AS(mul(AdicInt::embed(1, two, 2), AdicInt::embed(1, b235, 2)), BasisMismatch);
}

TEST_CASE("polynomial evaluation") {
  const auto two = Basis::constant(2);
  const auto b235 = Basis::list({2, 3, 5});
  const BigInt square[] = {0, 0, 1};
  CHECK(eval_poly(AdicPoly::embed(square, two, 2), 3) == AdicInt::embed(1, two, 2));
  const BigInt identity[] = {0, 1};
  for (int p : {2, 3, 5, 7, 11, 13}) {
    CHECK(eval_poly(AdicPoly::embed(identity, two, 2), p) == AdicInt::embed(p, two, 2));
  }
  const BigInt quad[] = {1, 2, 3};
  // 1 + 2*4 + 3*16 = 57
  CHECK(eval_poly(AdicPoly::embed(quad, b235, 2), 4) == AdicInt::embed(27, b235, 2));
  CHECK_THROWS_AS(eval_poly(std::span<const AdicInt>{}, 1), std::invalid_argument);
  CHECK(AdicPoly::parse("0,0,1", two, 3).degree() == 2);
  CHECK(AdicPoly::parse("5,0,0", two, 3).degree() == 0);
  CHECK(AdicPoly::parse("-1,2", two, 3).to_string() == "15,2");
}

TEST_CASE("generator test") {
  const auto two = Basis::constant(2);
  CHECK(is_generator(AdicInt::embed(3, two, 2)));
  CHECK_FALSE(is_generator(AdicInt::embed(2, two, 2)));
  CHECK(is_generator(AdicInt::embed(1, Basis::parse("cycle:2,3,5"), 5)));
  CHECK(is_generator(AdicInt::embed(1, two, 0)));
  CHECK_FALSE(is_generator(AdicInt::embed(10, Basis::parse("cycle:2,3,5"), 5)));
  // The unit condition at r implies it at every coarser s.
  std::mt19937_64 rng(3);
  const auto b = Basis::parse("cycle:2,3,5");
  for (int t = 0; t < 300; ++t) {
    const AdicInt x(b, 6, oracle::random_below(b.modulus(6), rng));
    if (!is_generator(x)) continue;
    for (int s = 0; s < 6; ++s) CHECK(is_generator(x.reduced(s)));
  }
}

TEST_CASE("rebase windows") {
  const auto two = Basis::constant(2);
  const auto x = AdicInt::embed(5, two, 3);
  CHECK(rebase(x) == x);

  const auto window = Basis::parse("const:2@offset:-1");
  const auto w = AdicInt::from_digits(digits(window, 1, {1, 0, 1}));
  const auto z = rebase(w);
  CHECK(z.basis() == two);
  CHECK(z.precision() == 2);
  CHECK(z.to_digits().digits == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(unrebase(z, -1) == w);

  std::mt19937_64 rng(11);
  const auto lw = Basis::parse("list:3,2,7,2,5@offset:-2");
  for (int t = 0; t < 50; ++t) {
    const AdicInt y(lw, 2, oracle::random_below(lw.modulus(2), rng));
    CHECK(unrebase(rebase(y), -2) == y);
    CHECK(rebase(y).to_digits().digits == y.to_digits().digits);
  }
}

TEST_CASE("lift into a window keeps the lower digits zero") {
  const auto window = Basis::parse("list:3,2,7,2,5@offset:-2");
  const auto integers = window.from_index(0);
  const auto x = AdicInt::embed(23, integers, 2);
  const auto lifted = lift_to_window(x, window);
  const auto d = lifted.to_digits().digits;
  CHECK(d[0] == 0);
  CHECK(d[1] == 0);
  CHECK(std::vector<std::uint64_t>(d.begin() + 2, d.end()) == x.to_digits().digits);
}

TEST_CASE("property: carry addition agrees with residue addition") {
  std::mt19937_64 rng(42);
  for (const auto* spec : {"const:2", "cycle:2,3,5", "list:3,2,7,2", "const:10@offset:-3"}) {
    const auto b = Basis::parse(spec);
    for (int r = b.offset(); r <= b.max_index().value_or(6); ++r) {
      const BigInt A = b.modulus(r);
      for (int t = 0; t < 100; ++t) {
        const AdicInt x(b, r, oracle::random_below(A, rng));
        const AdicInt y(b, r, oracle::random_below(A, rng));
        CHECK(AdicInt::from_digits(add_carry(x.to_digits(), y.to_digits())) == add_mod(x, y));
      }
    }
  }
}

TEST_CASE("property: ring laws, homomorphism and precision compatibility") {
  std::mt19937_64 rng(5);
  const auto b = Basis::parse("cycle:2,3,5");
  const int r = 40;  // A(r) far beyond 64 bits
  const BigInt A = b.modulus(r);
  for (int t = 0; t < 200; ++t) {
    const AdicInt x(b, r, oracle::random_below(A, rng));
    const AdicInt y(b, r, oracle::random_below(A, rng));
    const AdicInt z(b, r, oracle::random_below(A, rng));
    CHECK(add_mod(x, y) == add_mod(y, x));
    CHECK(mul(x, y) == mul(y, x));
    CHECK(add_mod(add_mod(x, y), z) == add_mod(x, add_mod(y, z)));
    CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    CHECK(mul(x, add_mod(y, z)) == add_mod(mul(x, y), mul(x, z)));
    CHECK(add_mod(x, negate(x)).residue() == 0);

    const int s = static_cast<int>(rng() % r);
    CHECK(add_mod(x, y).reduced(s) == add_mod(x.reduced(s), y.reduced(s)));
    CHECK(mul(x, y).reduced(s) == mul(x.reduced(s), y.reduced(s)));
    const std::vector<AdicInt> rho{x, y, z};
    const std::vector<AdicInt> rho_s{x.reduced(s), y.reduced(s), z.reduced(s)};
    const auto n = static_cast<std::int64_t>(rng() % 100000) - 50000;
    CHECK(eval_poly(rho, n).reduced(s) == eval_poly(rho_s, n));

    const auto m = static_cast<std::int64_t>(rng() >> 2);
    const auto k = static_cast<std::int64_t>(rng() >> 2);
    CHECK(AdicInt::embed(BigInt(m) + k, b, r) ==
          add_mod(AdicInt::embed(m, b, r), AdicInt::embed(k, b, r)));
    CHECK(AdicInt::embed(BigInt(m) * k, b, r) ==
          mul(AdicInt::embed(m, b, r), AdicInt::embed(k, b, r)));
  }
}
