#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "paradd/bounds.hpp"
#include "paradd/cost_model.hpp"
#include "paradd/experiment.hpp"
#include "paradd/fixtures.hpp"
#include "paradd/optimizer.hpp"
#include "paradd/oracle.hpp"
#include "paradd/repr.hpp"
#include "paradd/schedule_sim.hpp"

namespace paradd::cli {

namespace {

// Comma lists get the smallest symmetric set that holds them; compact strings
// are read over {-1, 0, 1}.
DigitSet infer_digit_set(const std::string& repr, const std::string& digits) {
  if (!digits.empty()) return parse_digit_set(digits);
  if (repr.find(',') == std::string::npos) return DigitSet::canonical();
  int bound = 1;
  std::stringstream ss(repr);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      bound = std::max(bound, std::abs(std::stoi(token)));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed digit '" + token + "'");
    }
  }
  return DigitSet::symmetric(bound);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(token);
  return out;
}

const char* winner_name(BoundWinner w) {
  switch (w) {
    case BoundWinner::kOurs: return "ours";
    case BoundWinner::kNocker: return "nocker";
    case BoundWinner::kTie: return "tie";
  }
  return "?";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-to-left parallel double-and-add: cost model and optimal recodings", "paradd"};
  app.require_subcommand(1);

  int status = kExitOk;

  // convert
  std::string n_text;
  std::string ratio_text;
  std::string family_text = "optimal";
  auto* convert = app.add_subcommand("convert", "Print the representation of n for a ratio A/D");
  convert->add_option("--n", n_text, "Scalar (decimal or 0x hex)")->required();
  convert->add_option("--ratio", ratio_text, "A/D as decimal or fraction")->required();
  convert->add_option("--family", family_text, "naf, optimal or binary");

  // time
  std::string repr_text;
  std::string d_text;
  std::string a_text;
  std::string digits_text;
  auto* time = app.add_subcommand("time", "Evaluate completion time, delay and buffer peak");
  time->add_option("--repr", repr_text, "Digits, most significant first")->required();
  time->add_option("--D", d_text, "Doubling time")->required();
  time->add_option("--A", a_text, "Addition time")->required();
  time->add_option("--digits", digits_text, "Digit set: B, C, lo..hi or a comma list");

  // simulate
  std::string mod_text;
  bool with_trace = false;
  auto* sim = app.add_subcommand("simulate", "Run the two-worker event simulation");
  sim->add_option("--repr", repr_text, "Digits, most significant first")->required();
  sim->add_option("--D", d_text, "Doubling time")->required();
  sim->add_option("--A", a_text, "Addition time")->required();
  sim->add_option("--digits", digits_text, "Digit set: B, C, lo..hi or a comma list");
  sim->add_option("--mod", mod_text, "Reduce the stand-in group modulo this integer");
  sim->add_flag("--trace", with_trace, "Print the event log");

  // certify
  std::size_t max_len = 0;
  auto* certify = app.add_subcommand("certify", "Compare the optimizer against exhaustive search");
  certify->add_option("--n", n_text, "Scalar")->required();
  certify->add_option("--D", d_text, "Doubling time")->required();
  certify->add_option("--A", a_text, "Addition time")->required();
  certify->add_option("--max-len", max_len, "Search length (default bit length + 2)");

  // bounds
  std::size_t lambda = 0;
  unsigned processors = 2;
  bool csv = false;
  auto* bounds = app.add_subcommand("bounds", "Compare worst-case bounds with Nöcker's");
  bounds->add_option("--lambda", lambda, "Top index of the binary scalar")->required();
  bounds->add_option("--D", d_text, "Doubling time")->required();
  bounds->add_option("--A", a_text, "Addition time")->required();
  bounds->add_option("--p", processors, "Processor count for Nöcker's bound");
  bounds->add_flag("--csv", csv, "Emit CSV");

  // experiment
  ExperimentConfig cfg;
  std::string ratios_text;
  std::string families_text;
  std::string out_path;
  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo comparison, CSV output");
  experiment->add_option("--seed", cfg.seed, "PRNG seed");
  experiment->add_option("--samples", cfg.samples, "Number of random scalars");
  experiment->add_option("--bits", cfg.bits, "Scalar size in bits");
  experiment->add_option("--ratios", ratios_text, "Comma-separated A/D values");
  experiment->add_option("--families", families_text, "Comma-separated subset of binary,optimal,naf");
  experiment->add_option("--out", out_path, "Write CSV here instead of standard output");

  auto* fixtures = app.add_subcommand("fixtures", "Check the golden worked examples");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*convert) {
      const BigInt n = parse_bigint(n_text);
      const TimeParams t{Rational(1), parse_rational(ratio_text)};
      require_model_regime(t);
      if (n < 1) throw std::invalid_argument("--n must be >= 1");
      switch (parse_family(family_text)) {
        case Family::kBinary: out << format_repr(binary_of(n)) << '\n'; break;
        case Family::kNaf: out << format_repr(naf_of(n)) << '\n'; break;
        case Family::kOptimal: out << format_repr(optimize(n, t).repr) << '\n'; break;
      }
    } else if (*time) {
      const auto r = parse_repr(repr_text, infer_digit_set(repr_text, digits_text));
      const TimeParams t{parse_rational(d_text), parse_rational(a_text)};
      const auto trace = computation_time(r, t);
      out << "total_time: " << to_string(trace.total_time) << '\n';
      if (r.has_canonical_digits()) {
        out << "final_delay: " << to_string(delay(r, t).final_delay()) << '\n';
      }
      out << "peak_buffer: " << trace.peak_buffer << '\n';
    } else if (*sim) {
      const auto r = parse_repr(repr_text, infer_digit_set(repr_text, digits_text));
      const TimeParams t{parse_rational(d_text), parse_rational(a_text)};
      std::optional<BigInt> modulus;
      if (!mod_text.empty()) modulus = parse_bigint(mod_text);
      const auto log = simulate(r, t, modulus);
      out << "result: " << log.result << '\n';
      out << "finish_time: " << to_string(log.finish_time) << '\n';
      out << "peak_buffer: " << log.peak_buffer << '\n';
      if (with_trace) write_trace(out, log);
    } else if (*certify) {
      const BigInt n = parse_bigint(n_text);
      const TimeParams t{parse_rational(d_text), parse_rational(a_text)};
      require_model_regime(t);
      std::optional<std::size_t> len;
      if (max_len > 0) len = max_len;
      const auto oracle = min_time_bruteforce(n, t, len);
      const auto opt = optimize(n, t);
      const auto opt_time = computation_time(opt.repr, t).total_time;
      const bool match = opt_time == oracle.min_time;
      out << "min_time: " << to_string(oracle.min_time) << '\n';
      out << "witness: " << format_repr(oracle.witness) << '\n';
      out << "enumerated: " << oracle.enumerated << '\n';
      out << "optimizer: " << format_repr(opt.repr) << '\n';
      out << "optimizer_time: " << to_string(opt_time) << '\n';
      out << "match: " << (match ? "yes" : "no") << '\n';
      if (!match) status = kExitFailed;
    } else if (*bounds) {
      const TimeParams t{parse_rational(d_text), parse_rational(a_text)};
      const auto report = bound_report(lambda, t, processors);
      if (csv) {
        out << "lambda,D,A,p,nocker,ours,condition_met,winner\n";
        out << lambda << ',' << to_string(t.doubling) << ',' << to_string(t.addition) << ','
            << processors << ',' << to_string(report.nocker) << ',' << to_string(report.ours)
            << ',' << (report.condition_met ? "true" : "false") << ','
            << winner_name(report.winner) << '\n';
      } else {
        auto line = [&](const char* key, const std::string& value) {
          out << std::left << std::setw(15) << key << value << '\n';
        };
        line("nocker:", to_string(report.nocker) + " (" + to_fixed(report.nocker, 3) + ")");
        line("ours:", to_string(report.ours) + " (" + to_fixed(report.ours, 3) + ")");
        line("condition_met:", report.condition_met ? "true" : "false");
        line("winner:", winner_name(report.winner));
      }
    } else if (*experiment) {
      if (!ratios_text.empty()) {
        cfg.ratios.clear();
        for (const auto& r : split_list(ratios_text)) cfg.ratios.push_back(parse_rational(r));
      }
      if (!families_text.empty()) {
        cfg.families.clear();
        for (const auto& f : split_list(families_text)) cfg.families.push_back(parse_family(f));
      }
      const auto rows = run_experiment(cfg);
      if (out_path.empty()) {
        write_csv(out, rows);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        write_csv(file, rows);
      }
    } else if (*fixtures) {
      for (const auto& r : run_fixtures()) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
        if (!r.passed) out << "  expected '" << r.expected << "' got '" << r.actual << "'";
        out << '\n';
        if (!r.passed) status = kExitFailed;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return status;
}

}  // namespace paradd::cli
