#pragma once

#include <cstdint>
#include <vector>

#include "adicergo/budget.hpp"

namespace adicergo {

/// Segmented sieve of Eratosthenes over [lo, hi].
///
/// Segments are numbered from lo in fixed-size blocks, so a caller can farm
/// them out to threads and merge per-segment results in any order.
class SegmentedSieve {
 public:
  static constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 18;

  SegmentedSieve(std::uint64_t lo, std::uint64_t hi);

  std::size_t segment_count() const { return segments_; }

  /// Appends the primes of segment `index` to `out` in ascending order.
  /// `scratch` is reused between calls on the same thread.
  void primes_in_segment(std::size_t index, std::vector<std::uint64_t>& out,
                         std::vector<std::uint8_t>& scratch) const;

 private:
  std::uint64_t lo_;
  std::uint64_t hi_;
  std::size_t segments_;
  std::vector<std::uint32_t> base_primes_;
};

/// Ascending primes in [lo, hi]. Throws BudgetExceeded if hi > budgets.max_n.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                           const Budgets& budgets = {}, unsigned threads = 1);

/// pi(n).
std::uint64_t prime_count(std::uint64_t n, const Budgets& budgets = {}, unsigned threads = 1);

}  // namespace adicergo
