#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "adicergo/adic_int.hpp"
#include "adicergo/budget.hpp"
#include "adicergo/duality.hpp"
#include "adicergo/multipliers.hpp"
#include "adicergo/weyl.hpp"

namespace adicergo {

using Complex = std::complex<double>;

/// A function on Z_a / Lambda_{r+1} = Z / A(r) Z (or the window analogue),
/// given by its values at the residues c in [0, A(r)).
struct CylinderFunction {
  Basis basis;
  int precision;
  std::vector<Complex> values;

  /// Throws std::invalid_argument if the length is not A(precision).
  void validate() const;

  static CylinderFunction constant(const Basis& basis, int r, Complex value);
  /// x -> chi(x) at precision r >= chi.level().
  static CylinderFunction character(const Character& chi, int r);

  /// x -> f(x + y).
  CylinderFunction translated(std::uint64_t y) const;

  friend bool operator==(const CylinderFunction&, const CylinderFunction&) = default;
};

/// Fourier coefficients indexed by l in [0, A(r)) (character chi_{l/A(r)}).
struct Spectrum {
  Basis basis;
  int precision;
  std::vector<Complex> coefficients;
};

/// F(l) = (1/A) sum_c f(c) conj(chi_l(c)), via a mixed-radix transform over
/// the basis digits. Throws BudgetExceeded for A(r) > max_modulus.
Spectrum dft(const CylinderFunction& f, const Budgets& budgets = {});
/// f(c) = sum_l F(l) chi_l(c).
CylinderFunction idft(const Spectrum& s, const Budgets& budgets = {});

/// A_N f(x) = sum_c w(c) f(x + c) with w = counts / total.
CylinderFunction empirical_average(const CylinderFunction& f, const OrbitHistogram& hist,
                                   unsigned threads = 1);
CylinderFunction empirical_average(const CylinderFunction& f, const AdicPoly& rho,
                                   std::uint64_t N, Source source, const Budgets& budgets = {},
                                   unsigned threads = 1);

/// idft of l -> multiplier(reduce_phase(chi_l, rho)) * F(f)(l).
CylinderFunction predicted_limit(const CylinderFunction& f, const AdicPoly& rho, Source kind,
                                 const Budgets& budgets = {}, unsigned threads = 1);
/// Same, reusing a multiplier table from multiplier_table().
CylinderFunction predicted_limit(const CylinderFunction& f,
                                 std::span<const MultiplierValue> multipliers,
                                 const Budgets& budgets = {});

struct ComparisonReport {
  std::vector<std::uint64_t> N;
  std::vector<double> sup_norm;  // max_x |A_N f(x) - limit(x)|
  std::vector<double> l2_norm;   // ((1/A) sum_x |A_N f(x) - limit(x)|^2)^(1/2)
  bool sup_non_increasing = true;
  bool l2_non_increasing = true;
  std::vector<MultiplierValue> multipliers;  // indexed by l
};

/// Empirical averages along `schedule` against the multiplier-predicted limit.
/// kind selects both the summation source and the multiplier.
ComparisonReport compare(const CylinderFunction& f, const AdicPoly& rho,
                         std::span<const std::uint64_t> schedule, Source kind,
                         const Budgets& budgets = {}, unsigned threads = 1);

}  // namespace adicergo
