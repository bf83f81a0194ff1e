#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "adicergo/adic_int.hpp"
#include "adicergo/budget.hpp"
#include "adicergo/duality.hpp"

namespace adicergo {

/// counts[c] = #{n in source, n <= N : rho(n) == c mod A(r)}.
struct OrbitHistogram {
  Basis basis;
  int precision;
  Source source;
  std::uint64_t N;
  std::vector<std::uint64_t> counts;
  std::uint64_t total;
};

/// Histogram of rho(n) mod A(r) over the source up to N.
/// Throws BudgetExceeded for A(r) > max_modulus or N > max_n.
OrbitHistogram orbit_histogram(const AdicPoly& rho, int r, std::uint64_t N, Source source,
                               const Budgets& budgets = {}, unsigned threads = 1);

/// One histogram per entry of `schedule` from a single pass over [1, max N].
/// The returned histograms are in the order of `schedule`.
std::vector<OrbitHistogram> orbit_histograms(const AdicPoly& rho, int r,
                                             std::span<const std::uint64_t> schedule,
                                             Source source, const Budgets& budgets = {},
                                             unsigned threads = 1);

/// sum_c counts[c] * chi(c) / total. The histogram level must be >= chi's level.
/// Throws std::domain_error when total == 0.
std::complex<double> weyl_sum(const OrbitHistogram& hist, const Character& chi,
                              unsigned threads = 1);

/// (1/pi_N) sum_{p<=N} chi(rho(p)) or (1/N) sum_{n<=N} chi(rho(n)).
std::complex<double> adic_weyl_sum(const Character& chi, const AdicPoly& rho, std::uint64_t N,
                                   Source source, const Budgets& budgets = {},
                                   unsigned threads = 1);

}  // namespace adicergo
