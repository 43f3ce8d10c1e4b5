#include "paradd/cost_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace paradd {

namespace {

int magnitude(std::int8_t d) { return d < 0 ? -d : d; }

int max_abs_digit(std::span<const std::int8_t> digits) {
  int m = 0;
  for (auto d : digits) m = std::max(m, magnitude(d));
  return m;
}

}  // namespace

std::vector<std::int64_t> time_ticks(std::span<const std::int8_t> digits,
                                     const TickScale& scale) {
  scale.check_capacity(digits.size(), max_abs_digit(digits));
  std::vector<std::int64_t> times(digits.size(), 0);
  std::int64_t t = 0;
  bool started = false;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != 0) {
      const std::int64_t ready = static_cast<std::int64_t>(i) * scale.doubling();
      const std::int64_t adds = magnitude(digits[i]);
      if (!started) {
        t = ready + (adds - 1) * scale.addition();
        started = true;
      } else {
        t = std::max(t, ready) + adds * scale.addition();
      }
    }
    times[i] = t;
  }
  return times;
}

TickCost evaluate_ticks(std::span<const std::int8_t> digits, const TickScale& scale) {
  scale.check_capacity(digits.size(), max_abs_digit(digits));
  // Finish times of resident points, in production order. T is
  // non-decreasing, so the earliest finisher is always at the front.
  std::vector<std::int64_t> resident;
  resident.reserve(digits.size());
  std::size_t front = 0;

  TickCost cost;
  std::int64_t t = 0;
  bool started = false;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    const std::int64_t ready = static_cast<std::int64_t>(i) * scale.doubling();
    const std::int64_t adds = magnitude(digits[i]);
    if (!started) {
      t = ready + (adds - 1) * scale.addition();
      started = true;
    } else {
      t = std::max(t, ready) + adds * scale.addition();
    }
    while (front < resident.size() && resident[front] <= ready) ++front;
    resident.push_back(t);
    cost.peak_buffer = std::max(cost.peak_buffer, resident.size() - front);
  }
  cost.total_ticks = t;
  return cost;
}

CostTrace computation_time(const Representation& r, const TimeParams& t) {
  const TickScale scale(t);
  const auto ticks = time_ticks(r.digits(), scale);

  CostTrace trace;
  trace.times.reserve(ticks.size());
  for (auto k : ticks) trace.times.push_back(scale.to_time(k));
  trace.total_time = trace.times.back();
  trace.peak_buffer = evaluate_ticks(r.digits(), scale).peak_buffer;

  if (t.doubling == 1) {
    std::vector<Rational> delays;
    delays.reserve(ticks.size());
    for (std::size_t i = 0; i < ticks.size(); ++i) {
      delays.push_back(trace.times[i] - static_cast<long long>(i));
    }
    trace.delays = std::move(delays);
  }
  return trace;
}

CostTrace delay(const Representation& r, const TimeParams& t) {
  if (!r.has_canonical_digits()) {
    throw std::invalid_argument("delay is defined for digits in {-1, 0, 1} only");
  }
  const TimeParams unit = normalize_params(t);
  CostTrace trace = computation_time(r, unit);

  // Recurrence on the lag itself rather than T - i.
  const TickScale scale(unit);
  const std::int64_t one = scale.doubling();
  const std::int64_t a = scale.addition();
  auto digits = r.digits();
  std::vector<Rational> delays;
  delays.reserve(digits.size());
  std::int64_t lag = 0;
  bool seen_nonzero = digits[0] != 0;
  delays.push_back(scale.to_time(lag));
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (digits[i] == 0) {
      lag -= one;
    } else if (!seen_nonzero) {
      lag = 0;
      seen_nonzero = true;
    } else {
      lag = std::max(lag + (a - one), a);
    }
    delays.push_back(scale.to_time(lag));
  }
  trace.delays = std::move(delays);
  return trace;
}

std::size_t buffer_profile(const Representation& r, const TimeParams& t) {
  return evaluate_ticks(r.digits(), TickScale(t)).peak_buffer;
}

}  // namespace paradd
