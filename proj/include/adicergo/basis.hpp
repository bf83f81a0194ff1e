#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adicergo/bigint.hpp"

namespace adicergo {

/// The defining sequence (a_i) of an a-adic group, restricted to indices i >= offset.
///
/// offset == 0 describes Z_a itself; a negative offset k describes the window
/// Lambda_k of Q_a. Entries are stored relative to the offset, so a(offset) is
/// always the first stored entry (constant and cycle kinds repeat from there).
///
/// Spec strings: `const:<c>`, `cycle:<c0>,<c1>,...`, `list:<c0>,...`, each with an
/// optional `@offset:<k>` suffix.
class Basis {
 public:
  enum class Kind { constant, cycle, list };

  static Basis constant(std::uint64_t c, int offset = 0);
  static Basis cycle(std::vector<std::uint64_t> period, int offset = 0);
  static Basis list(std::vector<std::uint64_t> entries, int offset = 0);
  static Basis parse(std::string_view spec);

  std::string to_string() const;

  Kind kind() const { return kind_; }
  int offset() const { return offset_; }
  const std::vector<std::uint64_t>& entries() const { return entries_; }

  /// Largest accessible index, or nullopt for infinite (constant, cycle) bases.
  std::optional<int> max_index() const;

  /// a(i); throws std::out_of_range outside [offset, max_index].
  std::uint64_t a(int i) const;

  /// A(r) = a(offset) * ... * a(r). A(offset - 1) == 1.
  BigInt modulus(int r) const;

  /// A(r) as a machine word; throws BudgetExceeded if it does not fit in 63 bits.
  std::uint64_t modulus_u64(int r) const;

  /// Radices a(offset..r), least significant first.
  std::vector<std::uint64_t> radices(int r) const;

  /// Level r with A(r) == m, if any.
  std::optional<int> level_of(const BigInt& m) const;

  /// Same entries, reindexed so that the first entry sits at `new_offset`.
  Basis shifted(int new_offset) const;

  /// The basis of the subgroup starting at index `start` >= offset:
  /// b(i) = a(i) for i >= start, with offset `start`.
  Basis from_index(int start) const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  Basis(Kind kind, std::vector<std::uint64_t> entries, int offset);

  Kind kind_;
  std::vector<std::uint64_t> entries_;
  int offset_;
};

}  // namespace adicergo
