#pragma once

#include <cstdint>
#include <string_view>

namespace adicergo {

/// Which sequence drives a sum: primes p <= N, or naturals 1 <= n <= N.
/// The same tag selects the matching multiplier (G for primes, H for naturals).
enum class Source { primes, naturals };

std::string_view to_string(Source s);
Source parse_source(std::string_view text);

struct Budgets {
  std::uint64_t max_n = 100'000'000;         // sieve and summation length
  std::uint64_t max_modulus = 1u << 20;      // vector length A(r)
  std::uint64_t wiener_evals = 1u << 16;     // characters per level

  friend bool operator==(const Budgets&, const Budgets&) = default;
};

void check_sum_length(std::uint64_t n, const Budgets& budgets, std::string_view what);
void check_vector_length(std::uint64_t n, const Budgets& budgets, std::string_view what);

}  // namespace adicergo
