#include "cachelab/classic.hpp"

namespace cachelab {

ClockPolicy::ClockPolicy(CacheConfig config) {
  config.Validate();
  state_.capacity = config.capacity;
}

AccessOutcome ClockRequest(ClockState& state, const PageId& page) {
  AccessOutcome out;
  if (state.ring.Contains(page)) {
    // The hand never moves on a hit.
    out.was_hit = true;
    state.ring.SetMark(page, true);
    return out;
  }
  if (state.ring.size() >= state.capacity) {
    while (state.ring.Back().marked) {
      const PageId head = state.ring.Back().page;
      state.ring.SetMark(head, false);
      state.ring.MoveToFront(head);
    }
    out.evicted_cache_page = state.ring.PopBack().page;
  }
  state.ring.PushFront(page, false);
  return out;
}

std::string StateDigest(const ClockState& state) {
  return "CLOCK ring=" + state.ring.Render(true);
}

}  // namespace cachelab
