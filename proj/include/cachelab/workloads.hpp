#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "cachelab/page.hpp"

namespace cachelab {

// SplitMix64 (Steele, Lea and Flood). Fixed constants make every generated
// trace bit-identical across platforms:
//   state += 0x9e3779b97f4a7c15
//   z = (state ^ (state >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, bound) via the high 64 bits of a 128-bit product.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 bits of precision.
  double Unit();

 private:
  std::uint64_t state_;
};

enum class WorkloadKind { kCycle, kZipf, kScanMix, kFuzz };

struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::kFuzz;
  std::uint64_t universe = 1;  // distinct pages (cycle length for kCycle)
  std::size_t length = 0;
  double alpha = 0.0;          // kZipf
  std::uint64_t hot_set = 1;   // kScanMix
  std::uint64_t scan_len = 1;  // kScanMix
  std::uint64_t burst_len = 0; // kScanMix; 0 means scan_len
  std::uint64_t seed = 0;
};

// trace[i] = i mod k. Throws std::invalid_argument when k < 1.
Trace GenCycle(std::uint64_t k, std::size_t length);

// I.i.d. draws where page r-1 (rank r) has weight r^-alpha; sampled by
// inverse CDF over the cumulative weights.
Trace GenZipf(std::uint64_t universe, double alpha, std::size_t length, std::uint64_t seed);

// Alternates a burst of `burst_len` uniform draws from pages [0, hot_set)
// with a sequential scan of `scan_len` fresh pages numbered from hot_set
// upward; scan pages never repeat. The trace is truncated to `length`.
Trace GenScanMix(std::uint64_t hot_set, std::uint64_t scan_len, std::size_t length,
                 std::uint64_t seed, std::uint64_t burst_len = 0);

// Uniform i.i.d. pages from [0, universe).
Trace GenFuzz(std::uint64_t universe, std::size_t length, std::uint64_t seed);

Trace Generate(const WorkloadSpec& spec);

// Parses "kind:key=value,..." e.g. "zipf:universe=100,alpha=0.8,length=5000".
// Kinds: cycle (k|universe), zipf (universe, alpha), scan (hot, scan, burst),
// fuzz (universe). Every kind takes length and an optional seed.
// Throws std::invalid_argument on malformed input.
WorkloadSpec ParseWorkloadSpec(std::string_view text);

std::string DescribeWorkload(const WorkloadSpec& spec);

}  // namespace cachelab
