#pragma once

// Event-level simulation of the doubling worker and the addition worker over
// a stand-in additive group (the integers, optionally reduced mod m, with
// generator 1). Times are exact rationals and the loop is single-threaded and
// deterministic; it shares no code with the closed-form cost model.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "paradd/numeric.hpp"
#include "paradd/repr.hpp"
#include "paradd/time_params.hpp"

namespace paradd {

enum class EventKind { kProduce, kCopy, kAdd };

std::string_view to_string(EventKind kind);

struct ScheduleEvent {
  EventKind kind;
  std::size_t index;  // digit position
  Rational start;
  Rational finish;
  int operand_sign;  // +1 or -1
};

struct ScheduleLog {
  std::vector<ScheduleEvent> events;  // sorted by (start, kind, index)
  BigInt result;
  Rational finish_time;
  std::size_t peak_buffer = 0;
};

/// Requires 0 < D <= A. When `modulus` is given the group is Z/mZ and
/// `result` is the least non-negative residue.
ScheduleLog simulate(const Representation& r, const TimeParams& t,
                     std::optional<BigInt> modulus = std::nullopt);

/// One event per line: `kind<TAB>index<TAB>start<TAB>finish<TAB>sign`, with
/// times written as p/q.
void write_trace(std::ostream& out, const ScheduleLog& log);

}  // namespace paradd
