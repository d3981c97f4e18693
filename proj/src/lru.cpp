#include "cachelab/classic.hpp"

namespace cachelab {

LruPolicy::LruPolicy(CacheConfig config) {
  config.Validate();
  state_.capacity = config.capacity;
}

AccessOutcome LruRequest(LruState& state, const PageId& page) {
  AccessOutcome out;
  if (state.queue.Contains(page)) {
    out.was_hit = true;
    state.queue.MoveToFront(page);
    return out;
  }
  if (state.queue.size() >= state.capacity) {
    out.evicted_cache_page = state.queue.PopBack().page;
  }
  state.queue.PushFront(page);
  return out;
}

std::string StateDigest(const LruState& state) {
  return "LRU Q=" + state.queue.Render(false);
}

}  // namespace cachelab
