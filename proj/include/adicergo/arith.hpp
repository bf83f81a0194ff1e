#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace adicergo::arith {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Throws std::overflow_error if the result does not fit.
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Trial division; n >= 1. factorize(1) is empty.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(const Factorization& f);
int mobius(const Factorization& f);

/// Memoized factorizations. Thread-safe.
class FactorCache {
 public:
  const Factorization& factorize(std::uint64_t n);
  std::uint64_t euler_phi(std::uint64_t n) { return arith::euler_phi(factorize(n)); }
  int mobius(std::uint64_t n) { return arith::mobius(factorize(n)); }

  static FactorCache& global();

 private:
  std::mutex mutex_;
  std::map<std::uint64_t, Factorization> cache_;
};

inline std::uint64_t euler_phi(std::uint64_t n) { return FactorCache::global().euler_phi(n); }
inline int mobius(std::uint64_t n) { return FactorCache::global().mobius(n); }

}  // namespace adicergo::arith
