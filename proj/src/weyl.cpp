#include "adicergo/weyl.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "adicergo/errors.hpp"
#include "adicergo/phase.hpp"
#include "adicergo/primes.hpp"
#include "adicergo/summation.hpp"

namespace adicergo {

namespace {

constexpr std::uint64_t kNaturalBlock = SegmentedSieve::kSegmentSize;

}  // namespace

std::vector<OrbitHistogram> orbit_histograms(const AdicPoly& rho, int r,
                                             std::span<const std::uint64_t> schedule,
                                             Source source, const Budgets& budgets,
                                             unsigned threads) {
  const Basis& basis = rho.basis();
  const std::uint64_t A = basis.modulus_u64(r);
  check_vector_length(A, budgets, "orbit histogram");
  for (auto N : schedule) check_sum_length(N, budgets, "summation bound N");
  const auto coeffs = rho.residues_u64(r);

  std::vector<std::uint64_t> bounds(schedule.begin(), schedule.end());
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  const std::uint64_t top = bounds.empty() ? 0 : bounds.back();
  const std::size_t B = bounds.size();

  // bucket b collects n in (bounds[b-1], bounds[b]]; prefix sums give each N.
  auto bucket_of = [&](std::uint64_t n) {
    return static_cast<std::size_t>(std::lower_bound(bounds.begin(), bounds.end(), n) -
                                    bounds.begin());
  };

  std::optional<SegmentedSieve> sieve;
  std::size_t tasks = 0;
  if (top >= 1) {
    if (source == Source::primes) {
      sieve.emplace(1, top);
      tasks = sieve->segment_count();
    } else {
      tasks = static_cast<std::size_t>((top - 1) / kNaturalBlock + 1);
    }
  }

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, tasks));
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(B * A, 0));
  parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t w) {
    auto& acc = partial[w];
    std::vector<std::uint64_t> primes;
    std::vector<std::uint8_t> scratch;
    for (std::size_t t = w; t < tasks; t += workers) {
      if (sieve) {
        primes.clear();
        sieve->primes_in_segment(t, primes, scratch);
        for (auto p : primes) acc[bucket_of(p) * A + horner_mod(coeffs, p, A)]++;
      } else {
        const std::uint64_t lo = 1 + t * kNaturalBlock;
        const std::uint64_t hi = std::min(top, lo + kNaturalBlock - 1);
        for (std::uint64_t n = lo; n <= hi; ++n) acc[bucket_of(n) * A + horner_mod(coeffs, n, A)]++;
      }
    }
  });

  std::vector<std::uint64_t> merged(B * A, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += part[i];
  }

  std::vector<OrbitHistogram> cumulative;
  std::vector<std::uint64_t> running(A, 0);
  for (std::size_t b = 0; b < B; ++b) {
    std::uint64_t total = 0;
    for (std::uint64_t c = 0; c < A; ++c) {
      running[c] += merged[b * A + c];
      total += running[c];
    }
    cumulative.push_back({basis, r, source, bounds[b], running, total});
  }

  std::vector<OrbitHistogram> out;
  out.reserve(schedule.size());
  for (auto N : schedule) out.push_back(cumulative[bucket_of(N)]);
  return out;
}

OrbitHistogram orbit_histogram(const AdicPoly& rho, int r, std::uint64_t N, Source source,
                               const Budgets& budgets, unsigned threads) {
  const std::uint64_t schedule[] = {N};
  return std::move(orbit_histograms(rho, r, schedule, source, budgets, threads).front());
}

std::complex<double> weyl_sum(const OrbitHistogram& hist, const Character& chi,
                              unsigned threads) {
  if (hist.basis != chi.basis()) {
    throw BasisMismatch("weyl_sum: histogram over " + hist.basis.to_string() +
                        ", character over " + chi.basis().to_string());
  }
  if (hist.precision < chi.level()) {
    throw std::invalid_argument("weyl_sum: histogram coarser than the character");
  }
  if (hist.total == 0) {
    throw std::domain_error("weyl_sum: empty source up to N = " + std::to_string(hist.N));
  }
  const std::uint64_t A = chi.modulus().convert_to<std::uint64_t>();
  const std::uint64_t ell = chi.numerator().convert_to<std::uint64_t>();
  auto term = [&](std::size_t c) -> std::complex<double> {
    if (hist.counts[c] == 0) return {0.0, 0.0};
    const auto phase = static_cast<std::uint64_t>(static_cast<unsigned __int128>(ell) * (c % A) % A);
    return static_cast<double>(hist.counts[c]) * unit_root(phase, A);
  };
  return pairwise_sum(hist.counts.size(), term, threads) / static_cast<double>(hist.total);
}

std::complex<double> adic_weyl_sum(const Character& chi, const AdicPoly& rho, std::uint64_t N,
                                   Source source, const Budgets& budgets, unsigned threads) {
  const auto hist = orbit_histogram(rho, chi.level(), N, source, budgets, threads);
  return weyl_sum(hist, chi, threads);
}

}  // namespace adicergo
