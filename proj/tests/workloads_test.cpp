#include <cmath>
#include <map>
#include <stdexcept>

#include <gtest/gtest.h>

#include "cachelab/workloads.hpp"
#include "test_util.hpp"

namespace cachelab {
namespace {

std::uint64_t Num(const PageId& id) { return std::stoull(id.token()); }

TEST(SplitMix64Test, ReferenceOutputs) {
  // First outputs for seed 0 (published reference values for SplitMix64).
  SplitMix64 rng(0);
  EXPECT_EQ(rng.Next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.Next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.Next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64Test, BelowAndUnitRanges) {
  SplitMix64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LT(rng.Below(7), 7u);
    const double u = rng.Unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(rng.Below(1), 0u);
}

TEST(GenCycleTest, Examples) {
  EXPECT_EQ(GenCycle(3, 7), MakeTrace({0, 1, 2, 0, 1, 2, 0}));
  EXPECT_EQ(GenCycle(1, 3), MakeTrace({0, 0, 0}));
  EXPECT_TRUE(GenCycle(4, 0).empty());
  EXPECT_THROW(GenCycle(0, 3), std::invalid_argument);
}

TEST(GenZipfTest, EmptyAndDeterministic) {
  EXPECT_TRUE(GenZipf(10, 1.0, 0, 1).empty());
  EXPECT_EQ(GenZipf(50, 0.9, 1000, 9), GenZipf(50, 0.9, 1000, 9));
  EXPECT_NE(GenZipf(50, 0.9, 1000, 9), GenZipf(50, 0.9, 1000, 10));
}

TEST(GenZipfTest, AlphaZeroIsUniform) {
  const std::uint64_t universe = 8;
  const std::size_t draws = 100000;
  const Trace trace = GenZipf(universe, 0.0, draws, 5);
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto& p : trace) ++counts[Num(p)];
  const double expected = static_cast<double>(draws) / universe;
  const double sigma = std::sqrt(draws * (1.0 / universe) * (1.0 - 1.0 / universe));
  ASSERT_EQ(counts.size(), universe);
  for (const auto& [page, count] : counts) {
    EXPECT_LT(std::abs(static_cast<double>(count) - expected), 3 * sigma) << page;
  }
}

TEST(GenZipfTest, SkewFavoursLowRanks) {
  const Trace trace = GenZipf(100, 1.2, 20000, 3);
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto& p : trace) {
    ASSERT_LT(Num(p), 100u);
    ++counts[Num(p)];
  }
  EXPECT_GT(counts[0], counts[1]);
  EXPECT_GT(counts[1], counts[10]);
}

TEST(GenScanMixTest, Construction) {
  EXPECT_TRUE(GenScanMix(4, 8, 0, 1).empty());
  const std::uint64_t hot = 16;
  const Trace trace = GenScanMix(hot, 64, 10000, 2);
  ASSERT_EQ(trace.size(), 10000u);
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto& p : trace) ++counts[Num(p)];
  for (const auto& [page, count] : counts) {
    if (page >= hot) {
      EXPECT_EQ(count, 1u) << page;
    } else {
      EXPECT_GE(count, 2u) << page;
    }
  }
  // First burst of hot draws, then the first scan from page `hot` upward.
  for (std::size_t i = 0; i < 64; ++i) EXPECT_LT(Num(trace[i]), hot);
  for (std::size_t i = 64; i < 128; ++i) EXPECT_EQ(Num(trace[i]), hot + (i - 64));
  EXPECT_EQ(trace, GenScanMix(hot, 64, 10000, 2));
}

TEST(GenScanMixTest, CustomBurst) {
  const Trace trace = GenScanMix(3, 2, 10, 1, 3);
  for (std::size_t i : {0u, 1u, 2u, 5u, 6u, 7u}) EXPECT_LT(Num(trace[i]), 3u);
  EXPECT_EQ(Num(trace[3]), 3u);
  EXPECT_EQ(Num(trace[4]), 4u);
  EXPECT_EQ(Num(trace[8]), 5u);
  EXPECT_THROW(GenScanMix(0, 2, 10, 1), std::invalid_argument);
}

TEST(GenFuzzTest, Examples) {
  EXPECT_TRUE(GenFuzz(5, 0, 1).empty());
  const Trace trace = GenFuzz(5, 3000, 11);
  ASSERT_EQ(trace.size(), 3000u);
  for (const auto& p : trace) EXPECT_LT(Num(p), 5u);
  EXPECT_EQ(trace, GenFuzz(5, 3000, 11));
  EXPECT_THROW(GenFuzz(0, 1, 1), std::invalid_argument);
}

TEST(WorkloadSpecTest, ParseAndDescribe) {
  WorkloadSpec s = ParseWorkloadSpec("zipf:universe=100,alpha=0.8,length=5000,seed=3");
  EXPECT_EQ(s.kind, WorkloadKind::kZipf);
  EXPECT_EQ(s.universe, 100u);
  EXPECT_DOUBLE_EQ(s.alpha, 0.8);
  EXPECT_EQ(s.length, 5000u);
  EXPECT_EQ(s.seed, 3u);
  EXPECT_EQ(DescribeWorkload(s), "zipf:universe=100,alpha=0.8,length=5000,seed=3");

  s = ParseWorkloadSpec("scan:hot=16,scan=64,length=10000");
  EXPECT_EQ(s.kind, WorkloadKind::kScanMix);
  EXPECT_EQ(s.hot_set, 16u);
  EXPECT_EQ(s.scan_len, 64u);
  EXPECT_EQ(DescribeWorkload(s), "scan:hot=16,scan=64,burst=64,length=10000,seed=0");

  s = ParseWorkloadSpec("cycle:k=5,len=12");
  EXPECT_EQ(Generate(s), GenCycle(5, 12));
  EXPECT_EQ(DescribeWorkload(s), "cycle:k=5,length=12");

  s = ParseWorkloadSpec("fuzz:universe=9,length=40,seed=2");
  EXPECT_EQ(Generate(s), GenFuzz(9, 40, 2));
}

TEST(WorkloadSpecTest, RejectsMalformed) {
  for (const char* bad : {"", "nope:length=3", "zipf:alpha=abc", "fuzz:universe=x", "fuzz:length=3,bogus=1",
                          "fuzz:universe", "cycle:k=3,length=-1"}) {
    EXPECT_THROW(ParseWorkloadSpec(bad), std::invalid_argument) << bad;
  }
}

}  // namespace
}  // namespace cachelab
