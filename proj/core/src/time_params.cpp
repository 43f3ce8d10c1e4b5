#include "paradd/time_params.hpp"

#include <limits>
#include <stdexcept>

namespace paradd {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr std::int64_t kTickLimit = std::numeric_limits<std::int64_t>::max() / 4;

}  // namespace

Rational TimeParams::ratio() const {
  if (doubling == 0) throw std::domain_error("doubling time is zero");
  return addition / doubling;
}

TimeParams normalize_params(const TimeParams& t) {
  if (t.doubling <= 0) throw std::domain_error("doubling time must be positive");
  return TimeParams{Rational(1), t.addition / t.doubling};
}

void require_model_regime(const TimeParams& t) {
  if (t.doubling <= 0) {
    throw std::domain_error("doubling time must be positive, got " + to_string(t.doubling));
  }
  if (t.addition < t.doubling) {
    throw std::domain_error("addition time " + to_string(t.addition) +
                            " is below doubling time " + to_string(t.doubling));
  }
}

TickScale::TickScale(const TimeParams& t) {
  require_model_regime(t);
  BigInt l = boost::multiprecision::lcm(denominator(t.doubling), denominator(t.addition));
  BigInt d = numerator(t.doubling) * (l / denominator(t.doubling));
  BigInt a = numerator(t.addition) * (l / denominator(t.addition));
  if (l > kTickLimit || d > kTickLimit || a > kTickLimit) {
    throw std::overflow_error("time parameters need more than 61 bits of precision");
  }
  per_unit_ = to_int64(l);
  doubling_ = to_int64(d);
  addition_ = to_int64(a);
}

std::int64_t TickScale::to_ticks(const Rational& time) const {
  Rational scaled = time * per_unit_;
  if (denominator(scaled) != 1) {
    throw std::domain_error("time " + to_string(time) + " is not on the tick grid");
  }
  return to_int64(numerator(scaled));
}

void TickScale::check_capacity(std::size_t length, int max_abs_digit) const {
  BigInt worst = BigInt(length + 1) * (BigInt(max_abs_digit) * addition_ + doubling_);
  if (worst > kTickLimit) {
    throw std::overflow_error("representation too long for the tick range of these parameters");
  }
}

}  // namespace paradd
