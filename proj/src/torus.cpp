#include "adicergo/torus.hpp"

#include <cmath>
#include <stdexcept>

#include "adicergo/phase.hpp"
#include "adicergo/primes.hpp"
#include "adicergo/summation.hpp"

namespace adicergo {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr int kMaxScaleBits = 127;

// beta == M * 2^-s with M odd (or s == 0).
struct Dyadic {
  std::int64_t mantissa;
  int scale;
};

Dyadic decompose(double beta) {
  int e = 0;
  const double f = std::frexp(beta, &e);
  auto m = static_cast<std::int64_t>(std::ldexp(f, 53));
  int s = 53 - e;
  while (s > 0 && (m % 2) == 0) {
    m /= 2;
    --s;
  }
  return {m, s};
}

long double centred(long double t) {
  t -= std::floor(t);
  if (t > 0.5L) t -= 1.0L;
  return t;
}

// Sums term(n) over the source values n <= N, divided by their count.
template <class F>
std::complex<double> source_average(std::span<const std::uint64_t> primes, std::uint64_t N,
                                    Source source, unsigned threads, F&& term) {
  const std::size_t count = source == Source::primes ? primes.size() : N;
  if (count == 0) throw std::domain_error("torus sum over an empty source");
  auto at = [&](std::size_t i) {
    return term(source == Source::primes ? primes[i] : static_cast<std::uint64_t>(i + 1));
  };
  return pairwise_sum(count, at, threads) / static_cast<double>(count);
}

std::vector<std::uint64_t> source_primes(std::uint64_t N, Source source, const Budgets& budgets,
                                         unsigned threads) {
  check_sum_length(N, budgets, "summation bound N");
  if (source == Source::naturals) return {};
  return primes_in_range(2, N, budgets, threads);
}

}  // namespace

TorusPhase::TorusPhase(std::span<const std::vector<double>> components,
                       std::span<const std::int64_t> frequency) {
  build(components, frequency);
}

TorusPhase::TorusPhase(std::span<const double> beta) {
  const std::vector<double> one(beta.begin(), beta.end());
  const std::int64_t unit = 1;
  build(std::span<const std::vector<double>>(&one, 1), std::span<const std::int64_t>(&unit, 1));
}

void TorusPhase::build(std::span<const std::vector<double>> components,
                       std::span<const std::int64_t> frequency) {
  if (components.size() != frequency.size()) {
    throw std::invalid_argument("torus: frequency dimension does not match the polynomial");
  }
  std::size_t degree = 0;
  for (const auto& c : components) degree = std::max(degree, c.size());
  numerators_.assign(degree, 0);
  residual_.assign(degree, 0.0L);

  for (const auto& c : components) {
    for (double beta : c) {
      if (!std::isfinite(beta)) throw std::invalid_argument("torus: non-finite coefficient");
    }
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (double beta : components[i]) {
      if (beta == 0.0) continue;
      const Dyadic d = decompose(beta);
      if (d.scale <= kMaxScaleBits) scale_bits_ = std::max<unsigned>(scale_bits_, std::max(d.scale, 0));
    }
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto m = frequency[i];
    for (std::size_t j = 0; j < components[i].size(); ++j) {
      const double beta = components[i][j];
      if (beta == 0.0 || m == 0) continue;
      const Dyadic d = decompose(beta);
      if (d.scale <= 0) continue;  // integer coefficient: e(integer * n^j) == 1
      if (d.scale > kMaxScaleBits) {
        residual_[j] += static_cast<long double>(beta) * static_cast<long double>(m);
        continue;
      }
      // Wrapping arithmetic is exact modulo 2^scale_bits_.
      const auto product = static_cast<u128>(static_cast<i128>(d.mantissa) * m);
      numerators_[j] += product << (scale_bits_ - static_cast<unsigned>(d.scale));
    }
  }
}

long double TorusPhase::fraction(std::uint64_t n) const {
  long double t = 0.0L;
  if (scale_bits_ > 0) {
    u128 acc = 0;
    for (auto it = numerators_.rbegin(); it != numerators_.rend(); ++it) acc = acc * n + *it;
    if (scale_bits_ < 128) acc &= (u128{1} << scale_bits_) - 1;
    t = std::ldexp(static_cast<long double>(acc), -static_cast<int>(scale_bits_));
  }
  long double power = 1.0L;
  for (std::size_t j = 0; j < residual_.size(); ++j) {
    if (residual_[j] != 0.0L) t += centred(residual_[j] * power);
    power *= static_cast<long double>(n);
  }
  return centred(t);
}

std::complex<double> torus_weyl_sum(std::span<const double> beta, std::uint64_t N, Source source,
                                    const Budgets& budgets, unsigned threads) {
  const TorusPhase phase(beta);
  const auto primes = source_primes(N, source, budgets, threads);
  return source_average(primes, N, source, threads,
                        [&](std::uint64_t n) { return unit_phase(phase.fraction(n)); });
}

std::complex<double> torus_weyl_sum(std::span<const std::vector<double>> components,
                                    std::span<const std::int64_t> frequency, std::uint64_t N,
                                    Source source, const Budgets& budgets, unsigned threads) {
  const TorusPhase phase(components, frequency);
  const auto primes = source_primes(N, source, budgets, threads);
  return source_average(primes, N, source, threads,
                        [&](std::uint64_t n) { return unit_phase(phase.fraction(n)); });
}

std::complex<double> torus_average(std::span<const TrigTerm> f,
                                   std::span<const std::vector<double>> components,
                                   std::span<const double> x, std::uint64_t N, Source source,
                                   const Budgets& budgets, unsigned threads) {
  if (!x.empty() && x.size() != components.size()) {
    throw std::invalid_argument("torus: point dimension does not match the polynomial");
  }
  const auto primes = source_primes(N, source, budgets, threads);
  std::complex<double> out{0.0, 0.0};
  for (const auto& term : f) {
    if (term.frequency.size() != components.size()) {
      throw std::invalid_argument("torus: frequency dimension does not match the polynomial");
    }
    long double shift = 0.0L;
    bool zero = true;
    for (std::size_t i = 0; i < term.frequency.size(); ++i) {
      if (term.frequency[i] != 0) zero = false;
      if (!x.empty()) {
        shift += centred(static_cast<long double>(term.frequency[i]) * x[i]);
      }
    }
    if (zero) {
      out += term.coefficient;
      continue;
    }
    const TorusPhase phase(components, term.frequency);
    const auto sum = source_average(primes, N, source, threads,
                                    [&](std::uint64_t n) { return unit_phase(phase.fraction(n)); });
    out += term.coefficient * unit_phase(centred(shift)) * sum;
  }
  return out;
}

}  // namespace adicergo
