#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "adicergo/adic_int.hpp"
#include "adicergo/budget.hpp"
#include "adicergo/duality.hpp"

namespace adicergo {

struct MultiplierValue {
  std::complex<double> value;
  BigInt modulus;
  Source kind;
};

/// G = e(c) * (1/phi(D)) * sum_{1<=m<=D, (m,D)=1} e(gamma(m)/D).
MultiplierValue multiplier_prime(const ReducedPhase& phase, const Budgets& budgets = {},
                                 unsigned threads = 1);

/// H = e(c) * (1/D) * sum_{1<=m<=D} e(gamma(m)/D).
MultiplierValue multiplier_natural(const ReducedPhase& phase, const Budgets& budgets = {},
                                   unsigned threads = 1);

MultiplierValue multiplier(const ReducedPhase& phase, Source kind, const Budgets& budgets = {},
                           unsigned threads = 1);

/// S(psi | q) = sum_{r=0}^{q-1} e(psi(r)/q) for psi(x) = a_1 x + ... + a_d x^d.
/// psi[0] is a_1.
std::complex<double> complete_exp_sum(std::span<const BigInt> psi, std::uint64_t q,
                                      const Budgets& budgets = {}, unsigned threads = 1);

/// Multipliers of every character l in [0, A(r)) at level r, indexed by l.
/// Characters sharing a reduced phase share one evaluation.
std::vector<MultiplierValue> multiplier_table(const AdicPoly& rho, int r, Source kind,
                                              const Budgets& budgets = {}, unsigned threads = 1);

struct WienerPoint {
  int r;
  BigInt modulus;  // A(r)
  double energy;   // W(r)
};

/// W(r) = (1/A(r)) sum_{l in [0, A(r))} |multiplier(chi_{l/A(r)})|^2 for r = offset..r_max.
/// Throws BudgetExceeded once A(r) exceeds budgets.wiener_evals.
std::vector<WienerPoint> wiener_energy(const AdicPoly& rho, int r_max, Source kind,
                                       const Budgets& budgets = {}, unsigned threads = 1);

}  // namespace adicergo
