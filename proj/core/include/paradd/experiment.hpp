#pragma once

// Monte-Carlo comparison of binary, optimal and NAF strings over random
// scalars, reporting average and worst completion time and buffer peak per
// (ratio, family) cell.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "paradd/cost_model.hpp"
#include "paradd/numeric.hpp"

namespace paradd {

/// SplitMix64. Word k of the stream seeded with s is what next() returns
/// after seeking to k.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Positions the stream so that next() returns word `offset`.
  static SplitMix64 at_offset(std::uint64_t seed, std::uint64_t offset) {
    return SplitMix64(seed + offset * kGamma);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

enum class Family { kBinary = 0, kOptimal = 1, kNaf = 2 };
inline constexpr std::array<Family, 3> kAllFamilies = {Family::kBinary, Family::kOptimal,
                                                       Family::kNaf};

std::string_view to_string(Family family);
/// "binary", "optimal" or "naf".
Family parse_family(std::string_view text);

std::vector<Rational> default_ratios();

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  std::size_t bits = 256;
  std::vector<Rational> ratios = default_ratios();
  std::vector<Family> families = {kAllFamilies.begin(), kAllFamilies.end()};
  /// When non-empty, these scalars replace the random draws (one sample
  /// each) and `samples` is ignored.
  std::vector<BigInt> scalars;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

struct ExperimentRow {
  Rational ratio;
  Family family;
  Rational avg_time;
  Rational max_time;
  Rational avg_buffer;
  std::size_t max_buffer = 0;
};

/// Costs of every family for one scalar at one ratio. Families not in the
/// configuration are left zeroed.
struct SampleOutcome {
  std::size_t sample;
  std::size_t ratio_index;
  const TickScale& scale;
  std::array<TickCost, 3> costs;

  const TickCost& cost(Family f) const { return costs[static_cast<std::size_t>(f)]; }
};

using SampleObserver = std::function<void(const SampleOutcome&)>;

/// The scalar drawn for `sample`: `bits` random bits from the SplitMix64
/// stream at word offset (sample + attempt * samples) * ceil(bits / 64),
/// redrawn with the next attempt while zero.
BigInt draw_scalar(std::uint64_t seed, std::size_t sample, std::size_t samples, std::size_t bits);

/// Rows ordered by ratio (as configured), then binary, optimal, naf.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg,
                                          const SampleObserver& observer = {});

/// Header `ratio,family,avg_time,max_time,avg_buffer,max_buffer`; ratios with
/// two fractional digits, times with one, average buffer with three.
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace paradd
