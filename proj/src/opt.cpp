#include "cachelab/opt.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace cachelab {

std::vector<std::size_t> AnnotateNextUse(std::span<const PageId> trace) {
  std::vector<std::size_t> next(trace.size(), kNeverUsed);
  std::unordered_map<PageId, std::size_t, PageIdHash> seen;
  for (std::size_t i = trace.size(); i-- > 0;) {
    auto it = seen.find(trace[i]);
    if (it != seen.end()) {
      next[i] = it->second;
      it->second = i;
    } else {
      seen.emplace(trace[i], i);
    }
  }
  return next;
}

std::size_t OptSchedule::misses() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const OptStep& s) { return !s.was_hit; }));
}

namespace {

// Orders cached pages so that the last element is the eviction victim: the
// furthest next use, and among never-used-again pages the smallest token.
struct VictimOrder {
  bool operator()(const std::pair<std::size_t, PageId>& a,
                  const std::pair<std::size_t, PageId>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return b.second < a.second;
  }
};

}  // namespace

OptSchedule BeladyRun(std::span<const PageId> trace, std::size_t capacity) {
  if (capacity < 1) throw std::invalid_argument("cache capacity must be at least 1");
  const auto next_use = AnnotateNextUse(trace);

  std::set<std::pair<std::size_t, PageId>, VictimOrder> by_next_use;
  std::unordered_map<PageId, std::size_t, PageIdHash> cached;  // page -> its next use
  std::set<PageId> contents;

  OptSchedule schedule;
  schedule.steps.reserve(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const PageId& page = trace[i];
    OptStep step;
    auto it = cached.find(page);
    if (it != cached.end()) {
      step.was_hit = true;
      by_next_use.erase({it->second, page});
    } else {
      if (cached.size() >= capacity) {
        auto victim = std::prev(by_next_use.end());
        step.evicted = victim->second;
        cached.erase(victim->second);
        contents.erase(victim->second);
        by_next_use.erase(victim);
      }
      contents.insert(page);
    }
    cached[page] = next_use[i];
    by_next_use.insert({next_use[i], page});
    step.cache_after.assign(contents.begin(), contents.end());
    schedule.steps.push_back(std::move(step));
  }
  return schedule;
}

std::size_t ExhaustiveOptMisses(std::span<const PageId> trace, std::size_t capacity,
                                const ExhaustiveBound& bound) {
  if (capacity < 1) throw std::invalid_argument("cache capacity must be at least 1");
  std::vector<PageId> alphabet(trace.begin(), trace.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (trace.size() > bound.max_length || alphabet.size() > bound.max_distinct ||
      capacity > bound.max_capacity) {
    throw std::invalid_argument("instance exceeds the exhaustive search bound");
  }

  std::vector<unsigned> symbol(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    symbol[i] = static_cast<unsigned>(
        std::lower_bound(alphabet.begin(), alphabet.end(), trace[i]) - alphabet.begin());
  }

  const std::size_t states = std::size_t{1} << alphabet.size();
  constexpr std::size_t kUnknown = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> memo((trace.size() + 1) * states, kUnknown);

  // best(i, mask): fewest misses serving trace[i..] from cache contents `mask`.
  auto best = [&](auto&& self, std::size_t i, std::uint32_t mask) -> std::size_t {
    if (i == trace.size()) return 0;
    std::size_t& slot = memo[i * states + mask];
    if (slot != kUnknown) return slot;
    const std::uint32_t bit = 1u << symbol[i];
    std::size_t result;
    if (mask & bit) {
      result = self(self, i + 1, mask);
    } else if (static_cast<std::size_t>(std::popcount(mask)) < capacity) {
      result = 1 + self(self, i + 1, mask | bit);
    } else {
      result = kUnknown;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        const std::uint32_t victim = rest & (~rest + 1);
        result = std::min(result, 1 + self(self, i + 1, (mask & ~victim) | bit));
      }
    }
    slot = result;
    return result;
  };
  return best(best, 0, 0);
}

}  // namespace cachelab
