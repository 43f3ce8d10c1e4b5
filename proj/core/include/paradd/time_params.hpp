#pragma once

#include <cstdint>

#include "paradd/numeric.hpp"

namespace paradd {

/// Per-operation costs of the two workers.
struct TimeParams {
  Rational doubling;  // D
  Rational addition;  // A

  /// A / D. Throws std::domain_error when D == 0.
  Rational ratio() const;
};

/// (1, A/D). Throws std::domain_error unless D > 0.
TimeParams normalize_params(const TimeParams& t);

/// Throws std::domain_error unless 0 < D <= A.
void require_model_regime(const TimeParams& t);

/// Integer view of a TimeParams: every model time is k * D + m * A, so with
/// D and A brought to a common denominator all model times are integers
/// ("ticks"), and max() and comparisons are exact and cheap.
class TickScale {
 public:
  /// Enforces 0 < D <= A.
  explicit TickScale(const TimeParams& t);

  std::int64_t doubling() const { return doubling_; }
  std::int64_t addition() const { return addition_; }
  /// Ticks per unit of time.
  std::int64_t per_unit() const { return per_unit_; }

  Rational to_time(std::int64_t ticks) const { return Rational(ticks, per_unit_); }
  /// Exact conversion; throws std::domain_error if `time` is not a whole
  /// number of ticks.
  std::int64_t to_ticks(const Rational& time) const;

  /// Throws std::overflow_error when a string of `length` digits with
  /// magnitudes up to `max_abs_digit` could overflow the tick range.
  void check_capacity(std::size_t length, int max_abs_digit) const;

 private:
  std::int64_t doubling_ = 0;
  std::int64_t addition_ = 0;
  std::int64_t per_unit_ = 1;
};

}  // namespace paradd
