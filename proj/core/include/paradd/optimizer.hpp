#pragma once

// Generators of minimum-time signed-digit representations.
//
// Two regimes (with D normalized to 1):
//   * A >= 2: the optimum does not depend on A. It is the non-adjacent form,
//     except that the position of the second-lowest nonzero digit is chosen
//     by inspecting the low end of the binary expansion.
//   * 1 <= A < 2: scan upward tracking the exact worker lag; when a zero
//     digit leaves the lag above A, the pending run is rewritten
//     ("flipped") from 01..11 into 10..0(-1), which pins the lag to A.
//
// Both generators run in O(length) and produce length lambda + 2 outputs.

#include <cstddef>
#include <optional>
#include <vector>

#include "paradd/numeric.hpp"
#include "paradd/repr.hpp"
#include "paradd/time_params.hpp"

namespace paradd {

enum class Regime { kHighRatio, kLowRatio };

struct OptimizeOutcome {
  Representation repr;
  Regime regime;
  std::size_t flips = 0;
};

/// How the low end of a binary expansion is handled in the A >= 2 regime.
enum class SuffixCase {
  /// Ends 11(01)*010*: rewrite the lowest 01 to 1(-1), then NAF from the 1.
  kBorrowLowest,
  /// Ends 0(01)*0110*: NAF from the second lowest 1.
  kKeepLowest,
  /// Anything else: NAF from the lowest 1.
  kPlainNaf,
};

/// Classifies a binary representation (zero-extended upward as needed).
/// Throws std::invalid_argument if `nb` is not binary or is zero.
SuffixCase classify_suffix(const Representation& nb);

OptimizeOutcome optimize_high_ratio(const Representation& nb);

/// Internal record of the low-ratio scan, for inspection in tests.
struct LowRatioTrace {
  struct Step {
    std::size_t index;
    Rational lag;                   // lag after `index`, before a flip resets it to A
    std::size_t segment_start;      // lowest index still under consideration
    bool flipped;
  };
  std::vector<Step> steps;
  std::vector<std::size_t> segment_starts;  // every value the segment start took
  std::vector<std::size_t> flip_indices;
};

/// Requires 1 <= A/D < 2.
OptimizeOutcome optimize_low_ratio(const Representation& nb, const TimeParams& t,
                                   LowRatioTrace* trace = nullptr);

/// Regime dispatch: A/D >= 2 goes to the high-ratio generator. Requires n >= 1
/// and 0 < D <= A.
OptimizeOutcome optimize(const BigInt& n, const TimeParams& t);

/// Plain non-adjacent form of n >= 1 (length bit_length(n) + 1).
Representation naf_of(const BigInt& n);

}  // namespace paradd
