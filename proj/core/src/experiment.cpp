#include "paradd/experiment.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "paradd/optimizer.hpp"
#include "paradd/repr.hpp"

namespace paradd {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kBinary: return "binary";
    case Family::kOptimal: return "optimal";
    case Family::kNaf: return "naf";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (auto f : kAllFamilies) {
    if (to_string(f) == text) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

std::vector<Rational> default_ratios() {
  std::vector<Rational> ratios;
  for (int quarter = 4; quarter <= 11; ++quarter) ratios.emplace_back(quarter, 4);
  return ratios;
}

void ExperimentConfig::validate() const {
  if (scalars.empty() && samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (bits < 2) throw std::invalid_argument("bits must be >= 2");
  if (ratios.empty()) throw std::invalid_argument("at least one ratio is required");
  for (const auto& r : ratios) {
    if (r < 1) throw std::invalid_argument("ratio " + to_string(r) + " is below 1");
  }
  if (families.empty()) throw std::invalid_argument("at least one family is required");
  for (const auto& n : scalars) {
    if (n < 1 || bit_length(n) > bits) {
      throw std::invalid_argument("injected scalar outside [1, 2^bits - 1]");
    }
  }
}

BigInt draw_scalar(std::uint64_t seed, std::size_t sample, std::size_t samples, std::size_t bits) {
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t offset = (sample + attempt * samples) * words;
    auto rng = SplitMix64::at_offset(seed, offset);
    BigInt n = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng.next();
      if (w + 1 == words && top_bits < 64) word &= (std::uint64_t{1} << top_bits) - 1;
      n |= BigInt(word) << (64 * w);
    }
    if (n != 0) return n;
  }
}

namespace {

struct Cell {
  std::int64_t sum_ticks = 0;
  std::int64_t max_ticks = 0;
  std::uint64_t sum_peak = 0;
  std::size_t max_peak = 0;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("time accumulator overflow");
  return out;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg,
                                          const SampleObserver& observer) {
  cfg.validate();

  std::array<bool, 3> wanted{};
  for (auto f : cfg.families) wanted[static_cast<std::size_t>(f)] = true;

  std::vector<TimeParams> params;
  std::vector<TickScale> scales;
  for (const auto& r : cfg.ratios) {
    params.push_back(TimeParams{Rational(1), r});
    scales.emplace_back(params.back());
  }

  const std::size_t samples = cfg.scalars.empty() ? cfg.samples : cfg.scalars.size();
  std::vector<std::array<Cell, 3>> cells(cfg.ratios.size());

  for (std::size_t s = 0; s < samples; ++s) {
    const BigInt n = cfg.scalars.empty() ? draw_scalar(cfg.seed, s, samples, cfg.bits)
                                         : cfg.scalars[s];
    const Representation nb = binary_of(n);
    std::optional<Representation> naf;
    std::optional<Representation> high;
    if (wanted[static_cast<std::size_t>(Family::kNaf)]) naf = to_naf(nb, 0);

    for (std::size_t k = 0; k < cfg.ratios.size(); ++k) {
      const TickScale& scale = scales[k];
      std::array<TickCost, 3> costs{};
      if (wanted[static_cast<std::size_t>(Family::kBinary)]) {
        costs[0] = evaluate_ticks(nb.digits(), scale);
      }
      if (wanted[static_cast<std::size_t>(Family::kOptimal)]) {
        if (cfg.ratios[k] >= 2) {
          if (!high) high = optimize_high_ratio(nb).repr;
          costs[1] = evaluate_ticks(high->digits(), scale);
        } else {
          const auto low = optimize_low_ratio(nb, params[k]);
          costs[1] = evaluate_ticks(low.repr.digits(), scale);
        }
      }
      if (naf) costs[2] = evaluate_ticks(naf->digits(), scale);

      for (std::size_t f = 0; f < 3; ++f) {
        if (!wanted[f]) continue;
        Cell& cell = cells[k][f];
        cell.sum_ticks = checked_add(cell.sum_ticks, costs[f].total_ticks);
        cell.max_ticks = std::max(cell.max_ticks, costs[f].total_ticks);
        cell.sum_peak += costs[f].peak_buffer;
        cell.max_peak = std::max(cell.max_peak, costs[f].peak_buffer);
      }
      if (observer) observer(SampleOutcome{s, k, scale, costs});
    }
  }

  std::vector<ExperimentRow> rows;
  const long long count = static_cast<long long>(samples);
  for (std::size_t k = 0; k < cfg.ratios.size(); ++k) {
    for (auto f : kAllFamilies) {
      if (!wanted[static_cast<std::size_t>(f)]) continue;
      const Cell& cell = cells[k][static_cast<std::size_t>(f)];
      ExperimentRow row;
      row.ratio = cfg.ratios[k];
      row.family = f;
      row.avg_time = Rational(cell.sum_ticks) / (Rational(scales[k].per_unit()) * count);
      row.max_time = scales[k].to_time(cell.max_ticks);
      row.avg_buffer = Rational(BigInt(cell.sum_peak), BigInt(count));
      row.max_buffer = cell.max_peak;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "ratio,family,avg_time,max_time,avg_buffer,max_buffer\n";
  for (const auto& row : rows) {
    out << to_fixed(row.ratio, 2) << ',' << to_string(row.family) << ','
        << to_fixed(row.avg_time, 1) << ',' << to_fixed(row.max_time, 1) << ','
        << to_fixed(row.avg_buffer, 3) << ',' << row.max_buffer << '\n';
  }
}

}  // namespace paradd
