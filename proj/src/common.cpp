#include <stdexcept>
#include <string>

#include "adicergo/bigint.hpp"
#include "adicergo/budget.hpp"
#include "adicergo/errors.hpp"

namespace adicergo {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  if (s[0] == '+') s.erase(s.begin());
  return BigInt(s);
}

std::string_view to_string(Source s) { return s == Source::primes ? "primes" : "naturals"; }

Source parse_source(std::string_view text) {
  if (text == "primes" || text == "prime") return Source::primes;
  if (text == "naturals" || text == "natural") return Source::naturals;
  throw std::invalid_argument("expected primes|naturals, got '" + std::string(text) + "'");
}

void check_sum_length(std::uint64_t n, const Budgets& budgets, std::string_view what) {
  if (n > budgets.max_n) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(n) + " exceeds max-n budget " +
                         std::to_string(budgets.max_n));
  }
}

void check_vector_length(std::uint64_t n, const Budgets& budgets, std::string_view what) {
  if (n > budgets.max_modulus) {
    throw BudgetExceeded(std::string(what) + ": length " + std::to_string(n) +
                         " exceeds max-modulus budget " + std::to_string(budgets.max_modulus));
  }
}

}  // namespace adicergo
