#include "paradd/experiment.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "paradd/bounds.hpp"
#include "paradd/optimizer.hpp"
#include "test_support.hpp"

namespace paradd {
namespace {

using testing::reference_time;

ExperimentConfig small_config(std::size_t samples = 200, std::size_t bits = 64) {
  ExperimentConfig cfg;
  cfg.seed = 5;
  cfg.samples = samples;
  cfg.bits = bits;
  return cfg;
}

std::string csv_of(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

TEST(SplitMix64, KnownSequenceAndSeek) {
  // Reference values of SplitMix64 seeded with 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
  SplitMix64 walk(42);
  for (int k = 0; k < 10; ++k) walk.next();
  EXPECT_EQ(SplitMix64::at_offset(42, 10).next(), walk.next());
}

TEST(DrawScalar, RespectsBitsAndIsDeterministic) {
  for (std::size_t bits : {2u, 7u, 64u, 65u, 256u}) {
    for (std::size_t s = 0; s < 50; ++s) {
      const BigInt n = draw_scalar(9, s, 50, bits);
      ASSERT_GE(n, 1);
      ASSERT_LE(bit_length(n), bits);
      ASSERT_EQ(n, draw_scalar(9, s, 50, bits));
    }
  }
  EXPECT_NE(draw_scalar(9, 0, 50, 256), draw_scalar(9, 1, 50, 256));
  EXPECT_NE(draw_scalar(9, 0, 50, 256), draw_scalar(10, 0, 50, 256));
}

TEST(Family, Names) {
  for (auto f : kAllFamilies) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_THROW(parse_family("ternary"), std::invalid_argument);
}

TEST(Experiment, RowsOrderedByRatioThenFamily) {
  const auto rows = run_experiment(small_config(20));
  ASSERT_EQ(rows.size(), 8u * 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].ratio, default_ratios()[i / 3]);
    EXPECT_EQ(rows[i].family, kAllFamilies[i % 3]);
  }
}

TEST(Experiment, Deterministic) {
  EXPECT_EQ(csv_of(run_experiment(small_config())), csv_of(run_experiment(small_config())));
  auto other = small_config();
  other.seed = 6;
  EXPECT_NE(csv_of(run_experiment(small_config())), csv_of(run_experiment(other)));
}

TEST(Experiment, InjectedPowerOfTwo) {
  ExperimentConfig cfg;
  cfg.bits = 256;
  cfg.scalars = {BigInt(1) << 255};
  cfg.ratios = {Rational(1)};
  cfg.families = {Family::kBinary};
  const auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].avg_time, 255);
  EXPECT_EQ(rows[0].max_time, 255);
  EXPECT_EQ(rows[0].avg_buffer, 1);
}

TEST(Experiment, CellsMatchIndependentEvaluation) {
  auto cfg = small_config(60, 48);
  cfg.ratios = {Rational(5, 4), Rational(2), Rational(11, 4)};
  const auto rows = run_experiment(cfg);
  for (std::size_t ri = 0; ri < cfg.ratios.size(); ++ri) {
    const TimeParams t{Rational(1), cfg.ratios[ri]};
    Rational sums[3] = {0, 0, 0};
    Rational maxes[3] = {0, 0, 0};
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      const BigInt n = draw_scalar(cfg.seed, s, cfg.samples, cfg.bits);
      const Representation reps[3] = {binary_of(n), optimize(n, t).repr, naf_of(n)};
      for (int f = 0; f < 3; ++f) {
        const Rational time = reference_time(reps[f], t);
        sums[f] += time;
        if (time > maxes[f]) maxes[f] = time;
      }
    }
    for (int f = 0; f < 3; ++f) {
      const auto& row = rows[ri * 3 + f];
      EXPECT_EQ(row.avg_time, sums[f] / static_cast<long long>(cfg.samples));
      EXPECT_EQ(row.max_time, maxes[f]);
    }
  }
}

TEST(Experiment, ObserverSeesEverySampleAndBoundsHold) {
  auto cfg = small_config(100, 128);
  std::size_t calls = 0;
  run_experiment(cfg, [&](const SampleOutcome& o) {
    ++calls;
    const TimeParams t{Rational(1), cfg.ratios[o.ratio_index]};
    const Rational opt = o.scale.to_time(o.cost(Family::kOptimal).total_ticks);
    const Rational bin = o.scale.to_time(o.cost(Family::kBinary).total_ticks);
    const Rational naf = o.scale.to_time(o.cost(Family::kNaf).total_ticks);
    EXPECT_LE(opt, our_bound(cfg.bits - 1, t));
    EXPECT_LE(opt, bin);
    EXPECT_LE(opt, naf);
  });
  EXPECT_EQ(calls, cfg.samples * cfg.ratios.size());
}

TEST(Experiment, FamilySubset) {
  auto cfg = small_config(10);
  cfg.families = {Family::kNaf};
  cfg.ratios = {Rational(3, 2)};
  const auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].family, Family::kNaf);
}

TEST(Experiment, Validation) {
  auto cfg = small_config();
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.ratios = {Rational(1, 2)};
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.ratios.clear();
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.families.clear();
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.bits = 8;
  cfg.scalars = {BigInt(256)};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(WriteCsv, Format) {
  ExperimentRow row{Rational(5, 4), Family::kOptimal, Rational(5111, 20), Rational(257), Rational(2), 3};
  std::ostringstream out;
  write_csv(out, {row});
  EXPECT_EQ(out.str(),
            "ratio,family,avg_time,max_time,avg_buffer,max_buffer\n"
            "1.25,optimal,255.6,257.0,2.000,3\n");
}

}  // namespace
}  // namespace paradd
