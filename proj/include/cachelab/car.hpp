#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cachelab/arc.hpp"
#include "cachelab/page.hpp"
#include "cachelab/page_list.hpp"

namespace cachelab {

// t1/t2 are clock rings stored tail-first: front() is the tail, back() the
// head. b1/b2 are FIFO histories ordered MRU (front) to LRU (back).
struct CarState {
  PageList t1;
  PageList t2;
  PageList b1;
  PageList b2;
  std::int64_t p = 0;
  std::size_t capacity = 1;

  std::size_t cached() const { return t1.size() + t2.size(); }
  std::size_t directory() const { return t1.size() + t2.size() + b1.size() + b2.size(); }
  bool InCache(const PageId& page) const { return t1.Contains(page) || t2.Contains(page); }
};

// Pages of T1 and T2 split by reference bit.
struct MarkPartition {
  std::vector<PageId> t1_unmarked;
  std::vector<PageId> t1_marked;
  std::vector<PageId> t2_unmarked;
  std::vector<PageId> t2_marked;
};

MarkPartition PartitionByMark(const CarState& state);

struct CarReplaceResult {
  ReplaceMove demoted;
  // Hand iterations including the final demotion.
  std::size_t iterations = 0;
};

// REPLACE(). Throws std::logic_error when the cache is not full or the
// second-chance loop exceeds its 2*(|T1|+|T2|) iteration bound.
CarReplaceResult CarReplace(CarState& state);

struct CarStepDetail {
  AccessOutcome outcome;
  std::vector<PageId> discarded;
  std::optional<CarReplaceResult> replace;
};

CarStepDetail CarRequestDetailed(CarState& state, const PageId& page);
AccessOutcome CarRequest(CarState& state, const PageId& page);

std::string StateDigest(const CarState& state);

class CarPolicy final : public ReplacementPolicy {
 public:
  explicit CarPolicy(CacheConfig config);

  PolicyKind kind() const override { return PolicyKind::kCar; }
  std::size_t capacity() const override { return state_.capacity; }
  AccessOutcome Request(const PageId& page) override { return CarRequest(state_, page); }
  bool InCache(const PageId& page) const override { return state_.InCache(page); }
  std::size_t CachedCount() const override { return state_.cached(); }
  std::string Digest() const override { return StateDigest(state_); }

  const CarState& state() const { return state_; }

 private:
  CarState state_;
};

}  // namespace cachelab
