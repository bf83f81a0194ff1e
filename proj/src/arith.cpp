#include "adicergo/arith.hpp"

#include <limits>
#include <stdexcept>

namespace adicergo::arith {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const auto q = a / gcd(a, b);
  if (q > std::numeric_limits<std::uint64_t>::max() / b) throw std::overflow_error("lcm overflow");
  return q * b;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  Factorization out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel.
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : f) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

int mobius(const Factorization& f) {
  for (const auto& pe : f) {
    if (pe.exponent > 1) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

const Factorization& FactorCache::factorize(std::uint64_t n) {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, arith::factorize(n)).first;
  return it->second;
}

FactorCache& FactorCache::global() {
  static FactorCache cache;
  return cache;
}

}  // namespace adicergo::arith
