#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cachelab/page.hpp"

namespace cachelab {

inline constexpr std::size_t kNeverUsed = std::numeric_limits<std::size_t>::max();

// For each position i, the next index j > i requesting the same page, or
// kNeverUsed.
std::vector<std::size_t> AnnotateNextUse(std::span<const PageId> trace);

struct OptStep {
  bool was_hit = false;
  std::optional<PageId> evicted;
  std::vector<PageId> cache_after;  // canonical order
};

struct OptSchedule {
  std::vector<OptStep> steps;

  std::size_t misses() const;
};

// Belady's MIN under demand paging, starting from an empty cache. Among
// pages never requested again the canonically smallest token is evicted.
OptSchedule BeladyRun(std::span<const PageId> trace, std::size_t capacity);

struct ExhaustiveBound {
  std::size_t max_length = 12;
  std::size_t max_distinct = 5;
  std::size_t max_capacity = 3;
};

// Minimum miss count over every demand-paging eviction strategy, by memoized
// search over (position, cache contents). Throws std::invalid_argument when
// the instance exceeds `bound` or capacity < 1.
std::size_t ExhaustiveOptMisses(std::span<const PageId> trace, std::size_t capacity,
                                const ExhaustiveBound& bound = {});

}  // namespace cachelab
