#pragma once

#include <cstddef>
#include <string>

#include "cachelab/page.hpp"
#include "cachelab/page_list.hpp"

namespace cachelab {

// queue: front is MRU, back is LRU.
struct LruState {
  PageList queue;
  std::size_t capacity = 1;
};

// The clock ring is stored unrolled starting at the tail: front() is the
// tail (newest insertion) and back() is the head the hand points at.
// Advancing the hand past a page makes that page the new tail, which is a
// move from back to front.
struct ClockState {
  PageList ring;
  std::size_t capacity = 1;
};

AccessOutcome LruRequest(LruState& state, const PageId& page);
AccessOutcome ClockRequest(ClockState& state, const PageId& page);

std::string StateDigest(const LruState& state);
std::string StateDigest(const ClockState& state);

class LruPolicy final : public ReplacementPolicy {
 public:
  explicit LruPolicy(CacheConfig config);

  PolicyKind kind() const override { return PolicyKind::kLru; }
  std::size_t capacity() const override { return state_.capacity; }
  AccessOutcome Request(const PageId& page) override { return LruRequest(state_, page); }
  bool InCache(const PageId& page) const override { return state_.queue.Contains(page); }
  std::size_t CachedCount() const override { return state_.queue.size(); }
  std::string Digest() const override { return StateDigest(state_); }

  const LruState& state() const { return state_; }

 private:
  LruState state_;
};

class ClockPolicy final : public ReplacementPolicy {
 public:
  explicit ClockPolicy(CacheConfig config);

  PolicyKind kind() const override { return PolicyKind::kClock; }
  std::size_t capacity() const override { return state_.capacity; }
  AccessOutcome Request(const PageId& page) override { return ClockRequest(state_, page); }
  bool InCache(const PageId& page) const override { return state_.ring.Contains(page); }
  std::size_t CachedCount() const override { return state_.ring.size(); }
  std::string Digest() const override { return StateDigest(state_); }

  const ClockState& state() const { return state_; }

 private:
  ClockState state_;
};

}  // namespace cachelab
