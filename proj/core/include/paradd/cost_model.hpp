#pragma once

// Completion-time model of right-to-left parallel double-and-add.
//
// One worker produces 2^i P at time i*D. The other walks the digits from
// index 0 upward: the least significant nonzero digit is copied (no addition),
// every later nonzero digit n_i costs |n_i| additions that may not start
// before 2^i P exists.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paradd/numeric.hpp"
#include "paradd/repr.hpp"
#include "paradd/time_params.hpp"

namespace paradd {

struct CostTrace {
  /// times[i] = completion time after digits 0..i.
  std::vector<Rational> times;
  /// delays[i] = times[i] - i, in units of D. Present when D == 1 or when
  /// produced by delay().
  std::optional<std::vector<Rational>> delays;
  std::size_t peak_buffer = 0;
  Rational total_time;

  const Rational& final_delay() const { return delays.value().back(); }
};

/// Exact completion times for `r`. Requires 0 < D <= A.
CostTrace computation_time(const Representation& r, const TimeParams& t);

/// Delay trace for a representation with digits in {-1, 0, 1}, evaluated on
/// the normalized parameters (1, A/D). `times` and `total_time` are in units
/// of D as well.
CostTrace delay(const Representation& r, const TimeParams& t);

/// Peak number of doubled points held for the addition worker. Point 2^i P
/// (n_i != 0) is resident over [i*D, T(i)); a copied digit with |n_i| = 1
/// is resident for the single instant i*D.
std::size_t buffer_profile(const Representation& r, const TimeParams& t);

/// Total time and peak buffer in ticks of `scale`, without allocation of
/// rationals. This is the hot path used by experiments and searches.
struct TickCost {
  std::int64_t total_ticks = 0;
  std::size_t peak_buffer = 0;
};
TickCost evaluate_ticks(std::span<const std::int8_t> digits, const TickScale& scale);

/// Completion time after each digit, in ticks.
std::vector<std::int64_t> time_ticks(std::span<const std::int8_t> digits, const TickScale& scale);

}  // namespace paradd
