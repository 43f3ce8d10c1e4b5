#include "paradd/optimizer.hpp"

#include <stdexcept>

#include "paradd/cost_model.hpp"

namespace paradd {

namespace {

std::size_t require_binary_nonzero(const Representation& nb) {
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (nb.digit(i) != 0 && nb.digit(i) != 1) {
      throw std::invalid_argument("expected a binary representation, found digit " +
                                  std::to_string(nb.digit(i)) + " at index " + std::to_string(i));
    }
  }
  auto lowest = nb.lowest_nonzero();
  if (!lowest) throw std::invalid_argument("representation of zero has no optimal form");
  return *lowest;
}

// Bit i of the zero-extended input.
int bit(const Representation& nb, std::size_t i) { return i < nb.size() ? nb.digit(i) : 0; }

}  // namespace

SuffixCase classify_suffix(const Representation& nb) {
  const std::size_t low = require_binary_nonzero(nb);

  // Read upward from the lowest 1. In both patterns the (01)* repetition
  // appears, bottom to top, as pairs (1, 0).
  if (bit(nb, low + 1) == 0) {
    // 11(01)*01 above the 0* tail.
    std::size_t j = low + 2;
    while (bit(nb, j) == 1) {
      if (bit(nb, j + 1) == 1) return SuffixCase::kBorrowLowest;
      j += 2;
    }
    return SuffixCase::kPlainNaf;
  }
  if (bit(nb, low + 2) == 0) {
    // 0(01)*011 above the 0* tail.
    std::size_t j = low + 3;
    while (bit(nb, j) == 1) {
      if (bit(nb, j + 1) == 1) return SuffixCase::kPlainNaf;
      j += 2;
    }
    return SuffixCase::kKeepLowest;
  }
  return SuffixCase::kPlainNaf;
}

OptimizeOutcome optimize_high_ratio(const Representation& nb) {
  const std::size_t low = require_binary_nonzero(nb);
  switch (classify_suffix(nb)) {
    case SuffixCase::kBorrowLowest: {
      std::vector<std::int8_t> digits(nb.digits().begin(), nb.digits().end());
      digits[low] = -1;
      digits[low + 1] = 1;
      Representation borrowed(std::move(digits), DigitSet::canonical());
      return {to_naf(borrowed, low + 1), Regime::kHighRatio, 0};
    }
    case SuffixCase::kKeepLowest:
      return {to_naf(nb, low + 1), Regime::kHighRatio, 0};
    case SuffixCase::kPlainNaf:
      break;
  }
  return {to_naf(nb, low), Regime::kHighRatio, 0};
}

OptimizeOutcome optimize_low_ratio(const Representation& nb, const TimeParams& t,
                                   LowRatioTrace* trace) {
  const TimeParams unit = normalize_params(t);
  if (unit.addition < 1 || unit.addition >= 2) {
    throw std::domain_error("low-ratio generator needs 1 <= A/D < 2, got " +
                            to_string(unit.addition));
  }
  std::size_t seg = require_binary_nonzero(nb);

  const TickScale scale(unit);
  const std::int64_t one = scale.doubling();
  const std::int64_t a = scale.addition();

  std::vector<std::int8_t> out(nb.digits().begin(), nb.digits().end());
  out.push_back(0);
  const std::size_t top = out.size() - 1;

  if (trace) {
    *trace = {};
    trace->segment_starts.push_back(seg);
  }

  std::size_t flips = 0;
  std::int64_t lag = 0;
  for (std::size_t i = seg + 1; i <= top; ++i) {
    bool flipped = false;
    std::int64_t probe = 0;
    if (out[i] == 1) {
      lag = std::max(lag + (a - one), a);
      probe = lag;
    } else {
      lag -= one;
      probe = lag;
      if (lag > a) {
        out[seg] = -1;
        for (std::size_t j = seg + 1; j < i; ++j) --out[j];
        out[i] = 1;
        lag = a;
        seg = i;
        ++flips;
        flipped = true;
        if (trace) {
          trace->flip_indices.push_back(i);
          trace->segment_starts.push_back(seg);
        }
      } else if (lag <= one) {
        seg = i + 1;
        if (trace) trace->segment_starts.push_back(seg);
      }
    }
    if (trace) trace->steps.push_back({i, scale.to_time(probe), seg, flipped});
  }

  return {Representation(std::move(out), DigitSet::canonical()), Regime::kLowRatio, flips};
}

OptimizeOutcome optimize(const BigInt& n, const TimeParams& t) {
  if (n < 1) throw std::invalid_argument("optimize requires n >= 1");
  require_model_regime(t);
  const Representation nb = binary_of(n);
  if (t.ratio() >= 2) return optimize_high_ratio(nb);
  return optimize_low_ratio(nb, t);
}

Representation naf_of(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("naf_of requires n >= 1");
  return to_naf(binary_of(n), 0);
}

}  // namespace paradd
