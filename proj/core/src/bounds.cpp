#include "paradd/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace paradd {

namespace {

unsigned ceil_log2(unsigned p) {
  unsigned bits = 0;
  while ((1ULL << bits) < p) ++bits;
  return bits;
}

}  // namespace

Rational nocker_bound(std::size_t lambda, const TimeParams& t, unsigned processors) {
  if (processors < 2) throw std::invalid_argument("Nöcker bound needs at least 2 processors");
  require_model_regime(t);
  const Rational c = t.doubling / t.addition;
  Rational grow = 1;
  for (unsigned i = 0; i < processors; ++i) grow *= (1 + c);
  const Rational l(static_cast<long long>(lambda));
  return l * t.doubling +
         (c / (grow - 1) * (l + 1) - 1 + static_cast<long long>(ceil_log2(processors))) *
             t.addition;
}

Rational our_bound(std::size_t lambda, const TimeParams& t) {
  require_model_regime(t);
  const Rational l(static_cast<long long>(lambda));
  if (t.ratio() >= 2) return (l / 2 + 1) * t.addition + t.doubling;
  return t.addition + (l + 1) * t.doubling;
}

bool nocker_dominance_condition(std::size_t lambda, const Rational& normalized_addition) {
  const Rational& a = normalized_addition;
  if (a < 1) throw std::domain_error("normalized addition time must be >= 1");
  const Rational threshold = std::max<Rational>(Rational(4, 3) * a + Rational(4, 3), 3 + 3 / a);
  return Rational(static_cast<long long>(lambda)) >= threshold;
}

BoundReport bound_report(std::size_t lambda, const TimeParams& t, unsigned processors) {
  BoundReport report;
  report.nocker = nocker_bound(lambda, t, processors);
  report.ours = our_bound(lambda, t);
  report.condition_met = nocker_dominance_condition(lambda, t.ratio());
  if (report.ours < report.nocker) {
    report.winner = BoundWinner::kOurs;
  } else if (report.nocker < report.ours) {
    report.winner = BoundWinner::kNocker;
  } else {
    report.winner = BoundWinner::kTie;
  }
  return report;
}

}  // namespace paradd
