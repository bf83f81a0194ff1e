#pragma once

#include <stdexcept>
#include <string>

namespace adicergo {

/// Operands built over different bases, offsets or precisions.
class BasisMismatch : public std::invalid_argument {
 public:
  explicit BasisMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size limit (sieve length, vector length, character count) was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adicergo
