#include "adicergo/basis.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "adicergo/errors.hpp"

namespace adicergo {

namespace {

std::uint64_t parse_entry(std::string_view text) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("basis: bad entry '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::uint64_t> parse_entries(std::string_view text) {
  std::vector<std::uint64_t> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_entry(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void check_entries(const std::vector<std::uint64_t>& entries) {
  if (entries.empty()) throw std::invalid_argument("basis: no entries");
  for (auto e : entries) {
    if (e < 2) throw std::invalid_argument("basis entries must be ≥ 2");
  }
}

}  // namespace

Basis::Basis(Kind kind, std::vector<std::uint64_t> entries, int offset)
    : kind_(kind), entries_(std::move(entries)), offset_(offset) {
  check_entries(entries_);
  if (offset_ > 0) throw std::invalid_argument("basis offset must be ≤ 0");
}

Basis Basis::constant(std::uint64_t c, int offset) { return Basis(Kind::constant, {c}, offset); }

Basis Basis::cycle(std::vector<std::uint64_t> period, int offset) {
  return Basis(Kind::cycle, std::move(period), offset);
}

Basis Basis::list(std::vector<std::uint64_t> entries, int offset) {
  return Basis(Kind::list, std::move(entries), offset);
}

Basis Basis::parse(std::string_view spec) {
  int offset = 0;
  if (const auto at = spec.find('@'); at != std::string_view::npos) {
    std::string_view tail = spec.substr(at + 1);
    constexpr std::string_view key = "offset:";
    if (!tail.starts_with(key)) {
      throw std::invalid_argument("basis: expected '@offset:<k>' in '" + std::string(spec) + "'");
    }
    tail.remove_prefix(key.size());
    const auto* end = tail.data() + tail.size();
    auto [ptr, ec] = std::from_chars(tail.data(), end, offset);
    if (ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("basis: bad offset in '" + std::string(spec) + "'");
    }
    spec = spec.substr(0, at);
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("basis: expected const:|cycle:|list:, got '" + std::string(spec) +
                                "'");
  }
  const auto kind = spec.substr(0, colon);
  auto entries = parse_entries(spec.substr(colon + 1));
  if (kind == "const") {
    if (entries.size() != 1) throw std::invalid_argument("basis: const takes one entry");
    return constant(entries[0], offset);
  }
  if (kind == "cycle") return cycle(std::move(entries), offset);
  if (kind == "list") return list(std::move(entries), offset);
  throw std::invalid_argument("basis: unknown kind '" + std::string(kind) + "'");
}

std::string Basis::to_string() const {
  std::string out = kind_ == Kind::constant ? "const:" : kind_ == Kind::cycle ? "cycle:" : "list:";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  if (offset_ != 0) out += "@offset:" + std::to_string(offset_);
  return out;
}

std::optional<int> Basis::max_index() const {
  if (kind_ != Kind::list) return std::nullopt;
  return offset_ + static_cast<int>(entries_.size()) - 1;
}

std::uint64_t Basis::a(int i) const {
  if (i < offset_) throw std::out_of_range("basis index " + std::to_string(i) + " below offset");
  const auto j = static_cast<std::size_t>(i - offset_);
  switch (kind_) {
    case Kind::constant:
      return entries_[0];
    case Kind::cycle:
      return entries_[j % entries_.size()];
    case Kind::list:
      if (j >= entries_.size()) {
        throw std::out_of_range("basis index " + std::to_string(i) + " beyond explicit list");
      }
      return entries_[j];
  }
  return 0;
}

BigInt Basis::modulus(int r) const {
  if (r < offset_ - 1) throw std::out_of_range("precision below basis offset");
  BigInt m = 1;
  for (int i = offset_; i <= r; ++i) m *= a(i);
  return m;
}

std::uint64_t Basis::modulus_u64(int r) const {
  const BigInt m = modulus(r);
  if (m >= (BigInt(1) << 63)) {
    throw BudgetExceeded("A(" + std::to_string(r) + ") does not fit in a machine word");
  }
  return m.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> Basis::radices(int r) const {
  std::vector<std::uint64_t> out;
  for (int i = offset_; i <= r; ++i) out.push_back(a(i));
  return out;
}

std::optional<int> Basis::level_of(const BigInt& m) const {
  BigInt acc = 1;
  for (int r = offset_;; ++r) {
    if (auto top = max_index(); top && r > *top) return std::nullopt;
    acc *= a(r);
    if (acc == m) return r;
    if (acc > m) return std::nullopt;
  }
}

Basis Basis::shifted(int new_offset) const { return Basis(kind_, entries_, new_offset); }

Basis Basis::from_index(int start) const {
  if (start < offset_) throw std::out_of_range("from_index below basis offset");
  const auto skip = static_cast<std::size_t>(start - offset_);
  switch (kind_) {
    case Kind::constant:
      return Basis(kind_, entries_, start);
    case Kind::cycle: {
      std::vector<std::uint64_t> rotated(entries_.size());
      for (std::size_t i = 0; i < entries_.size(); ++i) {
        rotated[i] = entries_[(i + skip) % entries_.size()];
      }
      return Basis(kind_, std::move(rotated), start);
    }
    case Kind::list:
      if (skip >= entries_.size()) throw std::out_of_range("from_index beyond explicit list");
      return Basis(kind_, {entries_.begin() + static_cast<std::ptrdiff_t>(skip), entries_.end()},
                   start);
  }
  return *this;
}

}  // namespace adicergo
