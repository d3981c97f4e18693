#include "cachelab/workloads.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cachelab {

std::uint64_t SplitMix64::Next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Below(std::uint64_t bound) {
  const unsigned __int128 product = static_cast<unsigned __int128>(Next()) * bound;
  return static_cast<std::uint64_t>(product >> 64);
}

double SplitMix64::Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

Trace GenCycle(std::uint64_t k, std::size_t length) {
  if (k < 1) throw std::invalid_argument("cycle needs at least one page");
  Trace trace;
  trace.reserve(length);
  for (std::size_t i = 0; i < length; ++i) trace.push_back(PageId::FromNumber(i % k));
  return trace;
}

Trace GenZipf(std::uint64_t universe, double alpha, std::size_t length, std::uint64_t seed) {
  if (universe < 1) throw std::invalid_argument("zipf universe must be at least 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("zipf alpha must be non-negative");
  std::vector<double> cumulative(universe);
  double total = 0.0;
  for (std::uint64_t r = 1; r <= universe; ++r) {
    total += std::pow(static_cast<double>(r), -alpha);
    cumulative[r - 1] = total;
  }
  SplitMix64 rng(seed);
  Trace trace;
  trace.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const double u = rng.Unit() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    trace.push_back(PageId::FromNumber(static_cast<std::uint64_t>(it - cumulative.begin())));
  }
  return trace;
}

Trace GenScanMix(std::uint64_t hot_set, std::uint64_t scan_len, std::size_t length,
                 std::uint64_t seed, std::uint64_t burst_len) {
  if (hot_set < 1 || scan_len < 1) {
    throw std::invalid_argument("scan mix needs hot_set >= 1 and scan_len >= 1");
  }
  if (burst_len == 0) burst_len = scan_len;
  SplitMix64 rng(seed);
  Trace trace;
  trace.reserve(length);
  std::uint64_t next_fresh = hot_set;
  while (trace.size() < length) {
    for (std::uint64_t i = 0; i < burst_len && trace.size() < length; ++i) {
      trace.push_back(PageId::FromNumber(rng.Below(hot_set)));
    }
    for (std::uint64_t i = 0; i < scan_len && trace.size() < length; ++i) {
      trace.push_back(PageId::FromNumber(next_fresh++));
    }
  }
  return trace;
}

Trace GenFuzz(std::uint64_t universe, std::size_t length, std::uint64_t seed) {
  if (universe < 1) throw std::invalid_argument("fuzz universe must be at least 1");
  SplitMix64 rng(seed);
  Trace trace;
  trace.reserve(length);
  for (std::size_t i = 0; i < length; ++i) trace.push_back(PageId::FromNumber(rng.Below(universe)));
  return trace;
}

Trace Generate(const WorkloadSpec& spec) {
  switch (spec.kind) {
    case WorkloadKind::kCycle:
      return GenCycle(spec.universe, spec.length);
    case WorkloadKind::kZipf:
      return GenZipf(spec.universe, spec.alpha, spec.length, spec.seed);
    case WorkloadKind::kScanMix:
      return GenScanMix(spec.hot_set, spec.scan_len, spec.length, spec.seed, spec.burst_len);
    case WorkloadKind::kFuzz:
      return GenFuzz(spec.universe, spec.length, spec.seed);
  }
  throw std::invalid_argument("unknown workload kind");
}

namespace {

std::uint64_t ParseUnsigned(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("workload: bad integer for '" + std::string(key) + "'");
  }
  return out;
}

double ParseDouble(std::string_view key, std::string_view value) {
  // std::from_chars for double is unavailable on older toolchains.
  std::istringstream in{std::string(value)};
  in.imbue(std::locale::classic());
  double out = 0;
  in >> out;
  if (!in || !in.eof()) {
    throw std::invalid_argument("workload: bad number for '" + std::string(key) + "'");
  }
  return out;
}

}  // namespace

WorkloadSpec ParseWorkloadSpec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  WorkloadSpec spec;
  if (kind == "cycle") {
    spec.kind = WorkloadKind::kCycle;
  } else if (kind == "zipf") {
    spec.kind = WorkloadKind::kZipf;
  } else if (kind == "scan") {
    spec.kind = WorkloadKind::kScanMix;
  } else if (kind == "fuzz") {
    spec.kind = WorkloadKind::kFuzz;
  } else {
    throw std::invalid_argument("workload: unknown kind '" + std::string(kind) + "'");
  }

  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("workload: expected key=value, got '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "length" || key == "len") {
      spec.length = ParseUnsigned(key, value);
    } else if (key == "seed") {
      spec.seed = ParseUnsigned(key, value);
    } else if (key == "universe" || key == "k") {
      spec.universe = ParseUnsigned(key, value);
    } else if (key == "alpha") {
      spec.alpha = ParseDouble(key, value);
    } else if (key == "hot") {
      spec.hot_set = ParseUnsigned(key, value);
    } else if (key == "scan") {
      spec.scan_len = ParseUnsigned(key, value);
    } else if (key == "burst") {
      spec.burst_len = ParseUnsigned(key, value);
    } else {
      throw std::invalid_argument("workload: unknown key '" + std::string(key) + "'");
    }
  }
  return spec;
}

std::string DescribeWorkload(const WorkloadSpec& spec) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  switch (spec.kind) {
    case WorkloadKind::kCycle:
      out << "cycle:k=" << spec.universe;
      break;
    case WorkloadKind::kZipf:
      out << "zipf:universe=" << spec.universe << ",alpha=" << spec.alpha;
      break;
    case WorkloadKind::kScanMix:
      out << "scan:hot=" << spec.hot_set << ",scan=" << spec.scan_len
          << ",burst=" << (spec.burst_len ? spec.burst_len : spec.scan_len);
      break;
    case WorkloadKind::kFuzz:
      out << "fuzz:universe=" << spec.universe;
      break;
  }
  out << ",length=" << spec.length;
  if (spec.kind != WorkloadKind::kCycle) out << ",seed=" << spec.seed;
  return out.str();
}

}  // namespace cachelab
