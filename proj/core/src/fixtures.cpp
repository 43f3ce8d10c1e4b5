#include "paradd/fixtures.hpp"

#include <functional>
#include <exception>
#include <sstream>

#include "paradd/cost_model.hpp"
#include "paradd/optimizer.hpp"
#include "paradd/oracle.hpp"
#include "paradd/repr.hpp"
#include "paradd/schedule_sim.hpp"

namespace paradd {

namespace {

const DigitSet kC = DigitSet::canonical();

TimeParams params(const char* d, const char* a) {
  return TimeParams{parse_rational(d), parse_rational(a)};
}

std::string low_ratio_trace_13911() {
  LowRatioTrace trace;
  optimize_low_ratio(binary_of(13911), params("1", "1.7"), &trace);
  std::ostringstream out;
  bool first = true;
  for (const auto& step : trace.steps) {
    // The reported checkpoints are the zero digits that do not continue a run
    // of zeros.
    if (step.index != 3 && step.index != 5 && step.index != 7 && step.index != 8 &&
        step.index != 11 && step.index != 14) {
      continue;
    }
    if (!first) out << ' ';
    first = false;
    out << step.index << ':' << to_string(step.lag) << '@' << step.segment_start;
  }
  return out.str();
}

}  // namespace

std::vector<FixtureResult> run_fixtures() {
  struct Case {
    std::string name;
    std::string expected;
    std::function<std::string()> actual;
  };

  const std::vector<Case> cases = {
      {"naf of 371 from index 0", "10m00m010m",
       [] { return format_repr(to_naf(binary_of(371), 0)); }},
      {"naf of 371 from index 5", "10m0m10011",
       [] { return format_repr(to_naf(binary_of(371), 5)); }},
      {"87 as 1010111 with D=A=1 takes 7", "7",
       [] { return to_string(computation_time(parse_repr("1010111", kC), params("1", "1")).total_time); }},
      {"simulated 87 as 1010111 with D=A=1", "87 in 7",
       [] {
         auto log = simulate(parse_repr("1010111", kC), params("1", "1"));
         return log.result.str() + " in " + to_string(log.finish_time);
       }},
      {"value of 2,2,0,-1,-3,1", "87",
       [] { return value_of(parse_repr("2,2,0,-1,-3,1", DigitSet::symmetric(3))).str(); }},
      {"2,2,0,-1,-3,1 with D=2 A=3 takes 26", "26",
       [] {
         return to_string(
             computation_time(parse_repr("2,2,0,-1,-3,1", DigitSet::symmetric(3)), params("2", "3"))
                 .total_time);
       }},
      {"simulated 2,2,0,-1,-3,1 with D=2 A=3", "87 in 26",
       [] {
         auto log = simulate(parse_repr("2,2,0,-1,-3,1", DigitSet::symmetric(3)), params("2", "3"));
         return log.result.str() + " in " + to_string(log.finish_time);
       }},
      {"binary of 29", "11101", [] { return format_repr(binary_of(29)); }},
      {"11101 with A=3 takes 11", "11",
       [] { return to_string(computation_time(parse_repr("11101", kC), params("1", "3")).total_time); }},
      {"1000mm with A=3 takes 8", "8",
       [] { return to_string(computation_time(parse_repr("1000mm", kC), params("1", "3")).total_time); }},
      {"minimum time for 29 with A=3", "8",
       [] { return to_string(min_time_bruteforce(29, params("1", "3")).min_time); }},
      {"delay of 011101 with A=3", "6",
       [] { return to_string(delay(parse_repr("011101", kC), params("1", "3")).final_delay()); }},
      {"delay of 1000mm with A=3", "3",
       [] { return to_string(delay(parse_repr("1000mm", kC), params("1", "3")).final_delay()); }},
      {"high-ratio optimum for 29", "1000mm",
       [] { return format_repr(optimize_high_ratio(binary_of(29)).repr); }},
      {"delay of 011101 with A=1.2", "3/5",
       [] { return to_string(delay(parse_repr("011101", kC), params("1", "1.2")).final_delay()); }},
      {"delay of 1000mm with A=1.2", "6/5",
       [] { return to_string(delay(parse_repr("1000mm", kC), params("1", "1.2")).final_delay()); }},
      {"delay of 100m01 with A=1.2", "6/5",
       [] { return to_string(delay(parse_repr("100m01", kC), params("1", "1.2")).final_delay()); }},
      {"low-ratio optimum for 29 with A=1.2", "011101",
       [] { return format_repr(optimize_low_ratio(binary_of(29), params("1", "1.2")).repr); }},
      {"minimum time for 29 with A=1.2", "28/5",
       [] { return to_string(min_time_bruteforce(29, params("1", "1.2")).min_time); }},
      {"binary of 13911", "11011001010111", [] { return format_repr(binary_of(13911)); }},
      {"low-ratio optimum for 13911 with A=1.7", "100m0m001010111",
       [] { return format_repr(optimize_low_ratio(binary_of(13911), params("1", "1.7")).repr); }},
      {"low-ratio lag checkpoints for 13911 with A=1.7",
       "3:7/5@0 5:11/10@0 7:4/5@8 8:-1/5@9 11:7/5@9 14:9/5@14", low_ratio_trace_13911},
  };

  std::vector<FixtureResult> results;
  results.reserve(cases.size());
  for (const auto& c : cases) {
    FixtureResult r{c.name, c.expected, {}, false};
    try {
      r.actual = c.actual();
      r.passed = r.actual == r.expected;
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace paradd
