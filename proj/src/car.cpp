#include "cachelab/car.hpp"

#include <algorithm>
#include <stdexcept>

namespace cachelab {

MarkPartition PartitionByMark(const CarState& state) {
  MarkPartition out;
  for (const auto& e : state.t1) (e.marked ? out.t1_marked : out.t1_unmarked).push_back(e.page);
  for (const auto& e : state.t2) (e.marked ? out.t2_marked : out.t2_unmarked).push_back(e.page);
  return out;
}

CarReplaceResult CarReplace(CarState& state) {
  if (state.cached() != state.capacity) {
    throw std::logic_error("CAR REPLACE called with a cache that is not full");
  }
  // Every non-final iteration clears a set bit or shrinks T1.
  const std::size_t bound = 2 * state.cached();
  const auto target = std::max<std::int64_t>(1, state.p);
  CarReplaceResult result;
  while (true) {
    if (++result.iterations > bound) {
      throw std::logic_error("CAR REPLACE exceeded its iteration bound");
    }
    if (static_cast<std::int64_t>(state.t1.size()) >= target) {
      const PageEntry& head = state.t1.Back();
      if (!head.marked) {
        PageId victim = state.t1.PopBack().page;
        state.b1.PushFront(victim);
        result.demoted = {std::move(victim), ListId::kT1, ListId::kB1};
        return result;
      }
      PageId moved = state.t1.PopBack().page;
      state.t2.PushFront(moved, false);
    } else {
      const PageEntry& head = state.t2.Back();
      if (!head.marked) {
        PageId victim = state.t2.PopBack().page;
        state.b2.PushFront(victim);
        result.demoted = {std::move(victim), ListId::kT2, ListId::kB2};
        return result;
      }
      const PageId moved = head.page;
      state.t2.SetMark(moved, false);
      state.t2.MoveToFront(moved);
    }
  }
}

CarStepDetail CarRequestDetailed(CarState& state, const PageId& page) {
  CarStepDetail detail;
  if (state.InCache(page)) {
    detail.outcome.was_hit = true;
    (state.t1.Contains(page) ? state.t1 : state.t2).SetMark(page, true);
    return detail;
  }

  const std::size_t n = state.capacity;
  if (state.cached() == n) {
    detail.replace = CarReplace(state);
    detail.outcome.evicted_cache_page = detail.replace->demoted.page;
    const bool in_history = state.b1.Contains(page) || state.b2.Contains(page);
    if (!in_history && state.t1.size() + state.b1.size() == n) {
      PageId dropped = state.b1.PopBack().page;
      detail.outcome.evicted_history_page = dropped;
      detail.discarded.push_back(std::move(dropped));
    } else if (state.directory() == 2 * n && !in_history) {
      PageId dropped = state.b2.PopBack().page;
      detail.outcome.evicted_history_page = dropped;
      detail.discarded.push_back(std::move(dropped));
    }
  }

  const std::int64_t p_before = state.p;
  const auto b1 = static_cast<std::int64_t>(state.b1.size());
  const auto b2 = static_cast<std::int64_t>(state.b2.size());
  if (state.b1.Contains(page)) {
    state.p = std::min(state.p + std::max<std::int64_t>(1, b2 / b1), static_cast<std::int64_t>(n));
    state.b1.Remove(page);
    state.t2.PushFront(page, false);
  } else if (state.b2.Contains(page)) {
    state.p = std::max<std::int64_t>(state.p - std::max<std::int64_t>(1, b1 / b2), 0);
    state.b2.Remove(page);
    state.t2.PushFront(page, false);
  } else {
    state.t1.PushFront(page, false);
  }
  detail.outcome.adaptation_delta = state.p - p_before;
  return detail;
}

AccessOutcome CarRequest(CarState& state, const PageId& page) {
  return CarRequestDetailed(state, page).outcome;
}

std::string StateDigest(const CarState& state) {
  std::string out = "CAR p=" + std::to_string(state.p);
  out += " T1=" + state.t1.Render(true);
  out += " T2=" + state.t2.Render(true);
  out += " B1=" + state.b1.Render(false);
  out += " B2=" + state.b2.Render(false);
  return out;
}

CarPolicy::CarPolicy(CacheConfig config) {
  config.Validate();
  state_.capacity = config.capacity;
}

}  // namespace cachelab
