#include "adicergo/multipliers.hpp"

#include <map>
#include <string>

#include "adicergo/arith.hpp"
#include "adicergo/errors.hpp"
#include "adicergo/phase.hpp"
#include "adicergo/summation.hpp"

namespace adicergo {

namespace {

// gamma as word-size Horner coefficients (constant slot zero) over modulus D.
struct PhaseKernel {
  std::uint64_t modulus;
  std::vector<std::uint64_t> coeffs;

  std::complex<double> term(std::uint64_t m) const {
    return unit_root(horner_mod(coeffs, m, modulus), modulus);
  }
};

PhaseKernel make_kernel(const ReducedPhase& phase, const Budgets& budgets) {
  const auto D = to_u64(phase.modulus());
  if (!D || *D >= (std::uint64_t{1} << 63)) {
    throw BudgetExceeded("multiplier modulus D = " + phase.modulus().str() + " is too large");
  }
  check_sum_length(*D, budgets, "multiplier modulus D");
  PhaseKernel k{*D, {0}};
  for (const auto& g : phase.gamma_coefficients()) k.coeffs.push_back(g.convert_to<std::uint64_t>());
  return k;
}

std::complex<double> constant_factor(const ReducedPhase& phase) {
  return unit_root(phase.constant_phase().num, phase.constant_phase().den);
}

std::string phase_key(const ReducedPhase& phase) {
  std::string key = phase.modulus().str() + "|";
  for (const auto& g : phase.gamma_coefficients()) key += g.str() + ",";
  key += "|" + phase.constant_phase().num.str() + "/" + phase.constant_phase().den.str();
  return key;
}

}  // namespace

MultiplierValue multiplier_prime(const ReducedPhase& phase, const Budgets& budgets,
                                 unsigned threads) {
  const PhaseKernel k = make_kernel(phase, budgets);
  const auto& factors = arith::FactorCache::global().factorize(k.modulus);
  auto term = [&](std::size_t i) -> std::complex<double> {
    const std::uint64_t m = i + 1;
    for (const auto& pe : factors) {
      if (m % pe.prime == 0) return {0.0, 0.0};
    }
    return k.term(m);
  };
  const auto sum = pairwise_sum(k.modulus, term, threads);
  const double phi = static_cast<double>(arith::euler_phi(factors));
  return {constant_factor(phase) * (sum / phi), phase.modulus(), Source::primes};
}

MultiplierValue multiplier_natural(const ReducedPhase& phase, const Budgets& budgets,
                                   unsigned threads) {
  const PhaseKernel k = make_kernel(phase, budgets);
  auto term = [&](std::size_t i) { return k.term(i + 1); };
  const auto sum = pairwise_sum(k.modulus, term, threads);
  return {constant_factor(phase) * (sum / static_cast<double>(k.modulus)), phase.modulus(),
          Source::naturals};
}

MultiplierValue multiplier(const ReducedPhase& phase, Source kind, const Budgets& budgets,
                           unsigned threads) {
  return kind == Source::primes ? multiplier_prime(phase, budgets, threads)
                                : multiplier_natural(phase, budgets, threads);
}

std::complex<double> complete_exp_sum(std::span<const BigInt> psi, std::uint64_t q,
                                      const Budgets& budgets, unsigned threads) {
  if (q == 0) throw std::invalid_argument("complete_exp_sum: q must be ≥ 1");
  if (q >= (std::uint64_t{1} << 63)) throw BudgetExceeded("complete_exp_sum: q too large");
  check_sum_length(q, budgets, "exponential sum modulus q");
  std::vector<std::uint64_t> coeffs{0};
  for (const auto& a : psi) coeffs.push_back(mod_floor(a, q).convert_to<std::uint64_t>());
  auto term = [&](std::size_t r) { return unit_root(horner_mod(coeffs, r, q), q); };
  return pairwise_sum(q, term, threads);
}

std::vector<MultiplierValue> multiplier_table(const AdicPoly& rho, int r, Source kind,
                                              const Budgets& budgets, unsigned threads) {
  const Basis& basis = rho.basis();
  const std::uint64_t A = basis.modulus_u64(r);
  check_vector_length(A, budgets, "multiplier table");
  const AdicPoly reduced = rho.reduced(r);

  std::map<std::string, std::size_t> index;
  std::vector<ReducedPhase> unique;
  std::vector<std::size_t> slot(A);
  for (std::uint64_t l = 0; l < A; ++l) {
    ReducedPhase phase = reduce_phase(Character(basis, r, l), reduced);
    auto [it, fresh] = index.emplace(phase_key(phase), unique.size());
    if (fresh) unique.push_back(std::move(phase));
    slot[l] = it->second;
  }
  std::vector<MultiplierValue> values(unique.size());
  parallel_for(unique.size(), threads,
               [&](std::size_t i) { values[i] = multiplier(unique[i], kind, budgets); });
  std::vector<MultiplierValue> out;
  out.reserve(A);
  for (auto s : slot) out.push_back(values[s]);
  return out;
}

std::vector<WienerPoint> wiener_energy(const AdicPoly& rho, int r_max, Source kind,
                                       const Budgets& budgets, unsigned threads) {
  const Basis& basis = rho.basis();
  if (r_max > rho.precision()) {
    throw std::invalid_argument("wiener_energy: r_max above polynomial precision");
  }
  std::vector<WienerPoint> out;
  for (int r = basis.offset(); r <= r_max; ++r) {
    const BigInt A = basis.modulus(r);
    if (A > budgets.wiener_evals) {
      throw BudgetExceeded("wiener_energy: A(" + std::to_string(r) + ") = " + A.str() +
                           " characters exceeds the per-level budget " +
                           std::to_string(budgets.wiener_evals));
    }
    const auto table = multiplier_table(rho, r, kind, budgets, threads);
    const double energy =
        pairwise_sum(table.size(), [&](std::size_t l) { return std::norm(table[l].value); }) /
        static_cast<double>(table.size());
    out.push_back({r, A, energy});
  }
  return out;
}

}  // namespace adicergo
