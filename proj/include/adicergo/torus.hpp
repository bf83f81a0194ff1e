#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "adicergo/budget.hpp"

namespace adicergo {

/// A real polynomial rho_*(n) = beta_0 + beta_1 n + ... evaluated modulo 1.
///
/// Each double coefficient is exactly M * 2^-s, so a frequency-weighted sum
/// of such polynomials can be evaluated modulo 1 in integer arithmetic modulo
/// 2^S. Coefficients needing S > 128 are carried in long double instead.
class TorusPhase {
 public:
  /// Phase of the character with integer `frequency` applied to the vector
  /// polynomial whose i-th component has coefficients `components[i]`.
  TorusPhase(std::span<const std::vector<double>> components,
             std::span<const std::int64_t> frequency);
  explicit TorusPhase(std::span<const double> beta);

  /// frac(rho(n)) centred on [-1/2, 1/2].
  long double fraction(std::uint64_t n) const;

 private:
  void build(std::span<const std::vector<double>> components,
             std::span<const std::int64_t> frequency);

  unsigned scale_bits_ = 0;
  std::vector<unsigned __int128> numerators_;  // exact part, constant term first
  std::vector<long double> residual_;          // tiny coefficients, constant term first
};

/// (1/total) sum_{n in source, n <= N} e(rho_*(n)) with beta constant term first.
std::complex<double> torus_weyl_sum(std::span<const double> beta, std::uint64_t N, Source source,
                                    const Budgets& budgets = {}, unsigned threads = 1);

/// Weyl sum of the character `frequency` along a d-dimensional polynomial.
std::complex<double> torus_weyl_sum(std::span<const std::vector<double>> components,
                                    std::span<const std::int64_t> frequency, std::uint64_t N,
                                    Source source, const Budgets& budgets = {},
                                    unsigned threads = 1);

struct TrigTerm {
  std::vector<std::int64_t> frequency;
  std::complex<double> coefficient;
};

/// (1/total) sum_{n in source, n <= N} f(x + rho_*(n)) for the trig polynomial
/// f(t) = sum_m c_m e(m . t) on R^d / Z^d, evaluated term by term through
/// torus_weyl_sum.
std::complex<double> torus_average(std::span<const TrigTerm> f,
                                   std::span<const std::vector<double>> components,
                                   std::span<const double> x, std::uint64_t N, Source source,
                                   const Budgets& budgets = {}, unsigned threads = 1);

}  // namespace adicergo
