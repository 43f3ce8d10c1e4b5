#pragma once

// Radix-2 digit strings over a declared digit set.
//
// Digits are addressed by their weight index i (the digit multiplying 2^i);
// index 0 is the least significant digit. Text forms are written most
// significant digit first.

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paradd/numeric.hpp"

namespace paradd {

class DigitSet {
 public:
  /// Throws std::invalid_argument unless 0 and 1 are members and every member
  /// fits in a signed byte.
  explicit DigitSet(std::span<const int> members);
  DigitSet(std::initializer_list<int> members);

  /// {0, 1}
  static DigitSet binary();
  /// {-1, 0, 1}
  static DigitSet canonical();
  /// {-bound, ..., bound}
  static DigitSet symmetric(int bound);

  bool contains(int digit) const;
  int min() const { return min_; }
  int max() const { return max_; }
  int max_abs() const;
  /// True when every member lies in {-1, 0, 1}.
  bool is_canonical_subset() const;
  std::vector<int> members() const;

  bool operator==(const DigitSet& other) const = default;

 private:
  static constexpr int kOffset = 128;
  std::bitset<256> members_;
  int min_ = 0;
  int max_ = 0;
};

/// Accepts "B", "C", a range "lo..hi", or a comma list "-1,0,1".
DigitSet parse_digit_set(std::string_view text);
std::string format_digit_set(const DigitSet& set);

class Representation {
 public:
  /// `digits[i]` is the digit of weight 2^i. Throws std::invalid_argument if
  /// empty or if a digit is not a member of `set`.
  Representation(std::vector<std::int8_t> digits, DigitSet set);

  /// Builds from a most-significant-first list.
  static Representation from_msb_first(std::span<const int> digits, DigitSet set);

  std::size_t size() const { return digits_.size(); }
  /// Index of the most significant position (size() - 1).
  std::size_t lambda() const { return digits_.size() - 1; }
  int digit(std::size_t index) const { return digits_.at(index); }
  std::span<const std::int8_t> digits() const { return digits_; }
  const DigitSet& digit_set() const { return set_; }

  std::optional<std::size_t> lowest_nonzero() const;
  std::optional<std::size_t> highest_nonzero() const;
  /// Number of nonzero digits.
  std::size_t weight() const;
  /// True when every digit lies in {-1, 0, 1}, whatever the declared set.
  bool has_canonical_digits() const;

  bool operator==(const Representation& other) const = default;

 private:
  std::vector<std::int8_t> digits_;
  DigitSet set_;
};

/// Compact grammar ('1', '0', 'm' for -1) when the set is a subset of
/// {-1, 0, 1}; comma-separated signed integers otherwise. Leading zeros are
/// kept.
Representation parse_repr(std::string_view text, const DigitSet& set);
std::string format_repr(const Representation& r);

/// Sum of digit(i) * 2^i.
BigInt value_of(const Representation& r);

/// Plain base-2 expansion of n >= 0, zero-padded at the top to `min_len`.
Representation binary_of(const BigInt& n, std::optional<std::size_t> min_len = std::nullopt);

/// Non-adjacent rewrite starting at index `start`.
///
/// Digits at indices >= start must be 0 or 1; digits below `start` may be any
/// of {-1, 0, 1} and are copied unchanged. The result has one extra leading
/// position and no two adjacent nonzero digits at indices >= start.
Representation to_naf(const Representation& r, std::size_t start);

/// True iff no two adjacent nonzero digits occur at indices >= from.
bool is_nonadjacent(const Representation& r, std::size_t from = 0);

}  // namespace paradd
