#include "adicergo/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "adicergo/errors.hpp"
#include "adicergo/phase.hpp"
#include "adicergo/summation.hpp"

namespace adicergo {

namespace {

std::uint64_t checked_length(const Basis& basis, int r, std::size_t actual, const Budgets& budgets,
                             std::string_view what) {
  const std::uint64_t A = basis.modulus_u64(r);
  check_vector_length(A, budgets, what);
  if (actual != A) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(A) +
                                " values, got " + std::to_string(actual));
  }
  return A;
}

// Mixed-radix decimation in time. c = c0 + p * c' with p the leading (least
// significant) radix; the size-n/p transforms of the p decimated subsequences
// are combined with twiddles e(-+ l * c0 / n).
class MixedRadixTransform {
 public:
  MixedRadixTransform(std::vector<std::uint64_t> radices, bool inverse)
      : radices_(std::move(radices)), inverse_(inverse) {
    size_ = 1;
    for (auto p : radices_) size_ *= p;
    roots_.resize(size_);
    for (std::size_t k = 0; k < size_; ++k) roots_[k] = unit_root(k, size_);
  }

  std::vector<Complex> operator()(const std::vector<Complex>& in) const {
    std::vector<Complex> out(size_);
    run(in.data(), 1, size_, out.data(), 0);
    return out;
  }

 private:
  Complex twiddle(std::size_t k, std::size_t n) const {
    const std::size_t idx = k * (size_ / n);
    return inverse_ ? roots_[idx] : roots_[(size_ - idx) % size_];
  }

  void run(const Complex* in, std::size_t stride, std::size_t n, Complex* out,
           std::size_t level) const {
    if (n == 1) {
      out[0] = in[0];
      return;
    }
    const std::size_t p = radices_[level];
    const std::size_t m = n / p;
    std::vector<Complex> sub(n);
    for (std::size_t c0 = 0; c0 < p; ++c0) {
      run(in + c0 * stride, stride * p, m, sub.data() + c0 * m, level + 1);
    }
    for (std::size_t l = 0; l < n; ++l) {
      Complex acc = sub[l % m];
      for (std::size_t c0 = 1; c0 < p; ++c0) acc += twiddle(l * c0 % n, n) * sub[c0 * m + l % m];
      out[l] = acc;
    }
  }

  std::vector<std::uint64_t> radices_;
  bool inverse_;
  std::size_t size_;
  std::vector<Complex> roots_;
};

}  // namespace

void CylinderFunction::validate() const {
  if (basis.modulus(precision) != values.size()) {
    throw std::invalid_argument("cylinder function: expected A(r) = " +
                                basis.modulus(precision).str() + " values, got " +
                                std::to_string(values.size()));
  }
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("cylinder function has non-finite values");
    }
  }
}

CylinderFunction CylinderFunction::constant(const Basis& basis, int r, Complex value) {
  return {basis, r, std::vector<Complex>(basis.modulus_u64(r), value)};
}

CylinderFunction CylinderFunction::character(const Character& chi, int r) {
  const Character fine = chi.raised(r);
  const std::uint64_t A = fine.modulus().convert_to<std::uint64_t>();
  const std::uint64_t ell = fine.numerator().convert_to<std::uint64_t>();
  CylinderFunction f{chi.basis(), r, std::vector<Complex>(A)};
  for (std::uint64_t c = 0; c < A; ++c) {
    f.values[c] =
        unit_root(static_cast<std::uint64_t>(static_cast<unsigned __int128>(ell) * c % A), A);
  }
  return f;
}

CylinderFunction CylinderFunction::translated(std::uint64_t y) const {
  const std::size_t A = values.size();
  CylinderFunction g{basis, precision, std::vector<Complex>(A)};
  y %= A;
  for (std::size_t x = 0; x < A; ++x) g.values[x] = values[(x + y) % A];
  return g;
}

Spectrum dft(const CylinderFunction& f, const Budgets& budgets) {
  const std::uint64_t A = checked_length(f.basis, f.precision, f.values.size(), budgets, "dft");
  const MixedRadixTransform forward(f.basis.radices(f.precision), false);
  Spectrum s{f.basis, f.precision, forward(f.values)};
  const double scale = 1.0 / static_cast<double>(A);
  for (auto& c : s.coefficients) c *= scale;
  return s;
}

CylinderFunction idft(const Spectrum& s, const Budgets& budgets) {
  checked_length(s.basis, s.precision, s.coefficients.size(), budgets, "idft");
  const MixedRadixTransform inverse(s.basis.radices(s.precision), true);
  return {s.basis, s.precision, inverse(s.coefficients)};
}

CylinderFunction empirical_average(const CylinderFunction& f, const OrbitHistogram& hist,
                                   unsigned threads) {
  if (f.basis != hist.basis || f.precision != hist.precision) {
    throw BasisMismatch("empirical_average: function and histogram differ in basis or precision");
  }
  if (hist.total == 0) {
    throw std::domain_error("empirical_average: empty source up to N = " + std::to_string(hist.N));
  }
  const std::size_t A = f.values.size();
  if (hist.counts.size() != A) throw std::invalid_argument("histogram length mismatch");
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < A; ++c) {
    if (hist.counts[c] != 0) support.push_back(c);
  }
  CylinderFunction out{f.basis, f.precision, std::vector<Complex>(A)};
  const double total = static_cast<double>(hist.total);
  constexpr std::size_t kChunk = 256;
  parallel_for((A + kChunk - 1) / kChunk, threads, [&](std::size_t chunk) {
    const std::size_t end = std::min(A, (chunk + 1) * kChunk);
    for (std::size_t x = chunk * kChunk; x < end; ++x) {
      Complex acc{0.0, 0.0};
      for (auto c : support) {
        acc += static_cast<double>(hist.counts[c]) * f.values[(x + c) % A];
      }
      out.values[x] = acc / total;
    }
  });
  return out;
}

CylinderFunction empirical_average(const CylinderFunction& f, const AdicPoly& rho,
                                   std::uint64_t N, Source source, const Budgets& budgets,
                                   unsigned threads) {
  if (f.basis != rho.basis()) throw BasisMismatch("empirical_average: polynomial basis differs");
  const auto hist = orbit_histogram(rho, f.precision, N, source, budgets, threads);
  return empirical_average(f, hist, threads);
}

CylinderFunction predicted_limit(const CylinderFunction& f,
                                 std::span<const MultiplierValue> multipliers,
                                 const Budgets& budgets) {
  Spectrum s = dft(f, budgets);
  if (multipliers.size() != s.coefficients.size()) {
    throw std::invalid_argument("predicted_limit: multiplier table length mismatch");
  }
  for (std::size_t l = 0; l < s.coefficients.size(); ++l) s.coefficients[l] *= multipliers[l].value;
  return idft(s, budgets);
}

CylinderFunction predicted_limit(const CylinderFunction& f, const AdicPoly& rho, Source kind,
                                 const Budgets& budgets, unsigned threads) {
  if (f.basis != rho.basis()) throw BasisMismatch("predicted_limit: polynomial basis differs");
  const auto table = multiplier_table(rho, f.precision, kind, budgets, threads);
  return predicted_limit(f, table, budgets);
}

ComparisonReport compare(const CylinderFunction& f, const AdicPoly& rho,
                         std::span<const std::uint64_t> schedule, Source kind,
                         const Budgets& budgets, unsigned threads) {
  if (f.basis != rho.basis()) throw BasisMismatch("compare: polynomial basis differs");
  ComparisonReport report;
  report.multipliers = multiplier_table(rho, f.precision, kind, budgets, threads);
  const auto limit = predicted_limit(f, report.multipliers, budgets);
  const auto hists = orbit_histograms(rho, f.precision, schedule, kind, budgets, threads);
  const double A = static_cast<double>(f.values.size());
  for (std::size_t i = 0; i < hists.size(); ++i) {
    const auto avg = empirical_average(f, hists[i], threads);
    double sup = 0.0;
    const double sq = pairwise_sum(avg.values.size(), [&](std::size_t x) {
      const double d = std::abs(avg.values[x] - limit.values[x]);
      sup = std::max(sup, d);
      return d * d;
    });
    report.N.push_back(schedule[i]);
    report.sup_norm.push_back(sup);
    report.l2_norm.push_back(std::sqrt(sq / A));
    if (i > 0) {
      report.sup_non_increasing &= report.sup_norm[i] <= report.sup_norm[i - 1];
      report.l2_non_increasing &= report.l2_norm[i] <= report.l2_norm[i - 1];
    }
  }
  return report;
}

}  // namespace adicergo
