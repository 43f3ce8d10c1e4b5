#pragma once

// Exhaustive search over all representations of n of a fixed length, used to
// certify the generators on small inputs.
//
// Representations are produced by carry recursion from the least significant
// digit upward: with remainder r (initially n), digit d is admissible when
// d == r (mod 2), and the next remainder is (r - d) / 2. A branch is cut as
// soon as the remainder cannot be reached by the digits left.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "paradd/numeric.hpp"
#include "paradd/repr.hpp"
#include "paradd/time_params.hpp"

namespace paradd {

inline constexpr std::size_t kMaxCanonicalSearchLength = 24;
inline constexpr std::size_t kMaxExtendedSearchLength = 12;
inline constexpr int kMaxExtendedDigit = 3;
inline constexpr unsigned kMaxExtendedBits = 10;

struct OracleResult {
  Rational min_time;
  Representation witness;
  std::uint64_t enumerated = 0;
};

/// Calls `visit` with the least-significant-first digits of every length
/// `max_len` string over `set` whose value is n. Throws std::invalid_argument
/// if no such string can exist or the length is beyond the search limit.
void for_each_representation(const BigInt& n, const DigitSet& set, std::size_t max_len,
                             const std::function<void(std::span<const std::int8_t>)>& visit);

/// All strings of length `max_len` over {-1, 0, 1} with value n >= 1.
std::vector<Representation> enumerate_canonical(const BigInt& n, std::size_t max_len);

/// Minimum completion time over {-1, 0, 1} strings of length `max_len`
/// (default bit_length(n) + 2). Ties go to the lexicographically smallest
/// formatted string. Every representation is evaluated.
OracleResult min_time_bruteforce(const BigInt& n, const TimeParams& t,
                                 std::optional<std::size_t> max_len = std::nullopt);

/// The same minimum over a wider digit set. Bounded to n < 2^10, |digit| <= 3
/// and length <= 12. Branches slower than the best string found so far are
/// cut, so `enumerated` counts only the strings evaluated to the end.
OracleResult min_time_extended(const BigInt& n, const TimeParams& t, const DigitSet& set,
                               std::optional<std::size_t> max_len = std::nullopt);

}  // namespace paradd
