// Acceptance suite: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "paradd/bounds.hpp"
#include "paradd/cost_model.hpp"
#include "paradd/experiment.hpp"
#include "paradd/fixtures.hpp"
#include "paradd/optimizer.hpp"
#include "paradd/oracle.hpp"
#include "paradd/schedule_sim.hpp"

namespace paradd {
namespace {

struct Verdict {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

TimeParams unit(const Rational& a) { return TimeParams{Rational(1), a}; }

Verdict golden_fixtures() {
  Verdict v;
  const auto results = run_fixtures();
  for (const auto& r : results) {
    if (!r.passed) v.fail(r.name + ": expected '" + r.expected + "' got '" + r.actual + "'");
  }
  if (v.passed) v.detail = std::to_string(results.size()) + " examples exact";
  return v;
}

Verdict oracle_optimality() {
  Verdict v;
  const char* ratios[] = {"1", "6/5", "3/2", "17/10", "2", "5/2", "3", "5"};
  std::size_t checked = 0;
  for (const char* a : ratios) {
    const auto t = unit(parse_rational(a));
    for (std::uint64_t n = 1; n < 4096; ++n) {
      const auto opt = optimize(n, t);
      const Rational got = computation_time(opt.repr, t).total_time;
      const Rational best = min_time_bruteforce(n, t).min_time;
      ++checked;
      if (got != best) {
        v.fail("n=" + std::to_string(n) + " A=" + a + ": optimizer " + to_string(got) + ", oracle " +
               to_string(best));
      }
    }
  }
  if (v.passed) v.detail = std::to_string(checked) + " (n, A) pairs equal the exhaustive minimum";
  return v;
}

struct TableCell {
  double avg_time[3];    // binary, optimal, naf
  double avg_buffer[3];
};

// Published averages over 100,000 random 256-bit scalars, ratios 1.00 .. 2.75.
constexpr std::array<TableCell, 8> kTable = {{
    {{255.0, 255.0, 255.7}, {1.000, 1.000, 1.000}},
    {{255.5, 255.5, 255.9}, {2.682, 2.000, 1.000}},
    {{256.3, 255.9, 256.2}, {3.854, 2.000, 1.000}},
    {{258.4, 256.3, 256.4}, {5.991, 2.000, 1.000}},
    {{268.2, 256.7, 256.7}, {10.238, 1.000, 1.000}},
    {{292.2, 257.2, 257.2}, {18.817, 2.043, 2.044}},
    {{322.1, 258.0, 258.0}, {28.245, 2.742, 2.745}},
    {{353.3, 260.0, 260.0}, {36.824, 3.974, 3.979}},
}};

struct ExperimentChecks {
  Verdict table;
  Verdict naf;
};

std::string fmt(double x, int places) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(places);
  s << x;
  return s.str();
}

ExperimentChecks table_reproduction() {
  ExperimentChecks out;
  ExperimentConfig cfg;  // seed 1, 100,000 samples, 256 bits, ratios 1.00 .. 2.75
  const auto ratios = cfg.ratios;
  std::size_t per_sample_violations = 0;
  std::string first_violation;
  const auto rows = run_experiment(cfg, [&](const SampleOutcome& o) {
    const std::int64_t gap =
        o.cost(Family::kNaf).total_ticks - o.cost(Family::kOptimal).total_ticks;
    const std::int64_t d = o.scale.doubling();
    const bool ok = ratios[o.ratio_index] >= 2 ? gap <= d : gap < 2 * d;
    if (!ok && per_sample_violations++ == 0) {
      first_violation = "sample " + std::to_string(o.sample) + " ratio " + to_string(ratios[o.ratio_index]) +
                        ": T_NAF - T_opt = " + to_string(o.scale.to_time(gap));
    }
  });

  double worst_time = 0;
  double worst_buffer = 0;
  for (const auto& row : rows) {
    std::size_t ri = 0;
    while (ratios[ri] != row.ratio) ++ri;
    const auto f = static_cast<std::size_t>(row.family);
    const double avg = static_cast<double>(row.avg_time);
    const double buf = static_cast<double>(row.avg_buffer);
    const double dt = std::abs(avg - kTable[ri].avg_time[f]);
    const double db = std::abs(buf - kTable[ri].avg_buffer[f]);
    worst_time = std::max(worst_time, dt);
    worst_buffer = std::max(worst_buffer, db);
    const std::string cell = "ratio " + to_fixed(row.ratio, 2) + " " + std::string(to_string(row.family));
    if (dt > 0.3) {
      out.table.fail(cell + ": avg_time " + fmt(avg, 2) + " vs " + fmt(kTable[ri].avg_time[f], 1));
    }
    if (db > 0.1) {
      out.table.fail(cell + ": avg_buffer " + fmt(buf, 3) + " vs " + fmt(kTable[ri].avg_buffer[f], 3));
    }
    if (row.ratio == 1 && row.family == Family::kBinary && std::abs(avg - 255.0) > 0.05) {
      out.table.fail(cell + ": avg_time " + fmt(avg, 3) + " not within 0.05 of 255.0");
    }
    if (row.family != Family::kBinary) {
      const Rational bound = our_bound(cfg.bits - 1, unit(row.ratio));
      if (row.max_time > bound) {
        out.table.fail(cell + ": max_time " + to_string(row.max_time) + " exceeds " + to_string(bound));
      }
    }
  }
  if (out.table.passed) {
    out.table.detail = "24 cells, worst |d avg_time| " + fmt(worst_time, 3) + ", worst |d avg_buffer| " +
                       fmt(worst_buffer, 3) + ", max_time within bound";
  }

  double worst_gap = 0;
  for (std::size_t i = 0; i + 2 < rows.size(); i += 3) {
    const double opt = static_cast<double>(rows[i + 1].avg_time);
    const double naf = static_cast<double>(rows[i + 2].avg_time);
    const double rel = (naf - opt) / opt;
    worst_gap = std::max(worst_gap, rel);
    if (rel >= 0.01) out.naf.fail("ratio " + to_fixed(rows[i].ratio, 2) + ": relative gap " + fmt(rel, 5));
  }
  if (per_sample_violations > 0) {
    out.naf.fail(std::to_string(per_sample_violations) + " samples over the gap limit, first " + first_violation);
  }
  if (out.naf.passed) out.naf.detail = "worst relative gap " + fmt(100 * worst_gap, 3) + "%, per-sample gaps within limit";
  return out;
}

Verdict extended_digits_do_not_help() {
  Verdict v;
  const auto wide = DigitSet::symmetric(3);
  std::size_t checked = 0;
  for (const char* a : {"3/2", "2", "3"}) {
    const auto t = unit(parse_rational(a));
    for (std::uint64_t n = 1; n < 512; ++n) {
      const Rational ext = min_time_extended(n, t, wide).min_time;
      const Rational canon = min_time_bruteforce(n, t).min_time;
      ++checked;
      if (ext < canon) {
        v.fail("n=" + std::to_string(n) + " A=" + a + ": {-3..3} reaches " + to_string(ext) + " < " +
               to_string(canon));
      }
    }
  }
  if (v.passed) v.detail = std::to_string(checked) + " (n, A) pairs";
  return v;
}

Verdict naf_delay_cap() {
  Verdict v;
  std::size_t checked = 0;
  for (const char* a_text : {"1", "6/5", "3/2", "17/10", "19/10"}) {
    const Rational a = parse_rational(a_text);
    const auto t = unit(a);
    for (std::uint64_t n = 1; n < (1u << 16); ++n) {
      const auto r = naf_of(n);
      const auto lags = delay(r, t).delays.value();
      ++checked;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const Rational cap = r.digit(i) == 0 ? a - 1 : a;
        if (lags[i] > cap) {
          v.fail("n=" + std::to_string(n) + " A=" + a_text + " i=" + std::to_string(i) + ": delay " +
                 to_string(lags[i]) + " > " + to_string(cap));
          break;
        }
      }
    }
  }
  if (v.passed) v.detail = std::to_string(checked) + " NAF strings, every prefix within cap";
  return v;
}

Verdict model_matches_simulation() {
  Verdict v;
  const std::vector<Rational> ratios = {Rational(1),     Rational(6, 5),  Rational(5, 4), Rational(3, 2),
                                        Rational(17, 10), Rational(7, 4),  Rational(2),    Rational(9, 4),
                                        Rational(5, 2),  Rational(11, 4), Rational(3),    Rational(5)};
  SplitMix64 rng(2024);
  const std::size_t cases = 10000;
  for (std::size_t c = 0; c < cases; ++c) {
    BigInt n = 0;
    while (n == 0) n = BigInt(rng.next());
    const Rational ratio = ratios[rng.next() % ratios.size()];
    const TimeParams t{Rational(3), 3 * ratio};
    const Representation reps[3] = {binary_of(n), optimize(n, t).repr, naf_of(n)};
    for (const auto& r : reps) {
      const auto log = simulate(r, t);
      const auto trace = computation_time(r, t);
      const std::size_t buffer = buffer_profile(r, t);
      if (log.finish_time != trace.total_time || log.peak_buffer != buffer || log.result != n) {
        v.fail(format_repr(r) + " at A/D " + to_string(ratio) + ": simulated " + to_string(log.finish_time) +
               "/" + std::to_string(log.peak_buffer) + ", model " + to_string(trace.total_time) + "/" +
               std::to_string(buffer));
      }
    }
  }
  if (v.passed) v.detail = std::to_string(3 * cases) + " strings, times and buffer peaks exact";
  return v;
}

Verdict bound_dominance() {
  Verdict v;
  std::size_t compared = 0;
  for (std::size_t lambda = 10; lambda <= 512; lambda += 10) {
    for (const char* a : {"1", "3/2", "2", "3", "5", "10"}) {
      const auto report = bound_report(lambda, unit(parse_rational(a)));
      if (!report.condition_met) continue;
      ++compared;
      if (report.ours > report.nocker) {
        v.fail("lambda=" + std::to_string(lambda) + " A=" + a + ": " + to_string(report.ours) + " > " +
               to_string(report.nocker));
      }
    }
  }
  if (v.passed) v.detail = std::to_string(compared) + " grid points with the condition met";
  return v;
}

Verdict experiment_determinism() {
  Verdict v;
  const std::vector<std::string> args = {"paradd", "experiment", "--seed", "7", "--samples", "100000"};
  std::string outputs[2];
  for (auto& text : outputs) {
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(args, out, err) != cli::kExitOk) v.fail("experiment failed: " + err.str());
    text = out.str();
  }
  if (outputs[0] != outputs[1]) v.fail("CSV output differs between runs");
  if (outputs[0].empty()) v.fail("empty CSV");
  if (v.passed) v.detail = "two runs, " + std::to_string(outputs[0].size()) + " identical bytes";
  return v;
}

}  // namespace
}  // namespace paradd

int main() {
  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const char* name, const paradd::Verdict& v, double seconds) {
    all = all && v.passed;
    std::printf("[%s] %d %s (%.1fs): %s\n", v.passed ? "PASS" : "FAIL", id, name, seconds, v.detail.c_str());
    std::fflush(stdout);
  };
  auto timed = [&](int id, const char* name, const std::function<paradd::Verdict()>& check) {
    const auto start = Clock::now();
    paradd::Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    report(id, name, v, std::chrono::duration<double>(Clock::now() - start).count());
  };

  timed(1, "golden fixtures", paradd::golden_fixtures);
  timed(2, "optimizer equals exhaustive minimum", paradd::oracle_optimality);

  const auto start = Clock::now();
  paradd::ExperimentChecks exp;
  try {
    exp = paradd::table_reproduction();
  } catch (const std::exception& e) {
    exp.table.fail(std::string("exception: ") + e.what());
    exp.naf.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  report(3, "random 256-bit table reproduction", exp.table, seconds);
  report(4, "NAF near-optimality", exp.naf, 0.0);

  timed(5, "wider digit sets do not help", paradd::extended_digits_do_not_help);
  timed(6, "NAF delay cap", paradd::naf_delay_cap);
  timed(7, "model equals simulation", paradd::model_matches_simulation);
  timed(8, "bound dominance grid", paradd::bound_dominance);
  timed(9, "experiment determinism", paradd::experiment_determinism);

  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
