#pragma once

// Closed-form worst-case completion times.

#include <cstddef>

#include "paradd/numeric.hpp"
#include "paradd/time_params.hpp"

namespace paradd {

/// Worst-case time of Nöcker's p-processor workload distribution for a
/// binary scalar of top index `lambda`:
///   lambda*D + (c / ((1 + c)^p - 1) * (lambda + 1) - 1 + ceil(log2 p)) * A,
/// with c = D / A. Requires p >= 2 and 0 < D <= A.
Rational nocker_bound(std::size_t lambda, const TimeParams& t, unsigned processors);

/// Upper bound on the optimal two-worker time for a binary scalar of top
/// index `lambda` (the optimal string has one more position):
///   A/D >= 2:      (lambda/2 + 1) * A + D
///   1 <= A/D < 2:  A + (lambda + 1) * D
Rational our_bound(std::size_t lambda, const TimeParams& t);

/// Threshold on lambda above which our_bound beats the two-processor
/// Nöcker bound: lambda >= max(4A/3 + 4/3, 3 + 3/A), A normalized (A >= 1).
bool nocker_dominance_condition(std::size_t lambda, const Rational& normalized_addition);

enum class BoundWinner { kOurs, kNocker, kTie };

struct BoundReport {
  Rational nocker;
  Rational ours;
  bool condition_met = false;
  BoundWinner winner = BoundWinner::kTie;
};

BoundReport bound_report(std::size_t lambda, const TimeParams& t, unsigned processors = 2);

}  // namespace paradd
