#include "adicergo/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adicergo/summation.hpp"

namespace adicergo {

namespace {

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint8_t> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

SegmentedSieve::SegmentedSieve(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {
  if (hi_ >= (std::uint64_t{1} << 62)) throw std::invalid_argument("sieve bound too large");
  segments_ = hi_ < lo_ ? 0 : static_cast<std::size_t>((hi_ - lo_) / kSegmentSize + 1);
  base_primes_ = small_primes(isqrt(hi_));
}

void SegmentedSieve::primes_in_segment(std::size_t index, std::vector<std::uint64_t>& out,
                                       std::vector<std::uint8_t>& scratch) const {
  const std::uint64_t seg_lo = lo_ + index * kSegmentSize;
  const std::uint64_t seg_hi = std::min(hi_, seg_lo + kSegmentSize - 1);
  const std::size_t len = static_cast<std::size_t>(seg_hi - seg_lo + 1);
  scratch.assign(len, 1);
  for (std::uint64_t n = seg_lo; n < 2 && n <= seg_hi; ++n) scratch[n - seg_lo] = 0;
  for (const std::uint64_t p : base_primes_) {
    if (p * p > seg_hi) break;
    std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
    for (std::uint64_t m = start; m <= seg_hi; m += p) scratch[m - seg_lo] = 0;
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (scratch[i]) out.push_back(seg_lo + i);
  }
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                           const Budgets& budgets, unsigned threads) {
  check_sum_length(hi, budgets, "prime sieve bound");
  if (hi < lo || hi < 2) return {};
  const SegmentedSieve sieve(lo, hi);
  std::vector<std::vector<std::uint64_t>> parts(sieve.segment_count());
  parallel_for(parts.size(), threads, [&](std::size_t i) {
    std::vector<std::uint8_t> scratch;
    sieve.primes_in_segment(i, parts[i], scratch);
  });
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::uint64_t prime_count(std::uint64_t n, const Budgets& budgets, unsigned threads) {
  check_sum_length(n, budgets, "prime sieve bound");
  if (n < 2) return 0;
  const SegmentedSieve sieve(1, n);
  std::vector<std::uint64_t> counts(sieve.segment_count());
  parallel_for(counts.size(), threads, [&](std::size_t i) {
    std::vector<std::uint64_t> primes;
    std::vector<std::uint8_t> scratch;
    sieve.primes_in_segment(i, primes, scratch);
    counts[i] = primes.size();
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace adicergo
