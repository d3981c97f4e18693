#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cachelab/page.hpp"
#include "cachelab/page_list.hpp"

namespace cachelab {

enum class ArcAdaptation {
  // p moves by exactly +1 / -1 on history hits, clamped to [0, N].
  kAnalyzedUnit,
  // The original ratio rule: +max(1, |B2|/|B1|), -max(1, |B1|/|B2|),
  // integer division.
  kOriginalRatio,
};

enum class ListId { kT1, kT2, kB1, kB2 };

std::string_view ListName(ListId id);

// All four lists are ordered MRU (front) to LRU (back).
struct ArcState {
  PageList t1;
  PageList t2;
  PageList b1;
  PageList b2;
  std::int64_t p = 0;
  std::size_t capacity = 1;
  ArcAdaptation adaptation = ArcAdaptation::kAnalyzedUnit;

  std::size_t cached() const { return t1.size() + t2.size(); }
  std::size_t directory() const { return t1.size() + t2.size() + b1.size() + b2.size(); }
  bool InCache(const PageId& page) const { return t1.Contains(page) || t2.Contains(page); }
};

struct ReplaceMove {
  PageId page;
  ListId from;
  ListId to;
};

enum class ArcBranch {
  kHit,
  kHistoryB1,
  kHistoryB2,
  // |T1|+|B1| = N and |T1| < N: drop LRU(B1), then REPLACE.
  kMissL1FullHistory,
  // |T1| = N: drop LRU(T1) outright.
  kMissL1FullCache,
  // |T1|+|B1| < N and directory >= N (drops LRU(B2) at 2N), then REPLACE.
  kMissDirectoryFull,
  // Cache still filling: insert only.
  kMissColdStart,
};

std::string_view ArcBranchName(ArcBranch branch);

// Everything that happened while servicing one request. before_replace and
// after_replace are filled only when capture was requested.
struct ArcStepDetail {
  AccessOutcome outcome;
  ArcBranch branch = ArcBranch::kHit;
  std::vector<PageId> discarded;  // pages removed from the directory entirely
  std::optional<ReplaceMove> replace;
  std::optional<ArcState> before_replace;
  std::optional<ArcState> after_replace;
};

ArcStepDetail ArcRequestDetailed(ArcState& state, const PageId& page, bool capture = false);
AccessOutcome ArcRequest(ArcState& state, const PageId& page);

// REPLACE(). Throws std::logic_error when the cache is not full.
ReplaceMove ArcReplace(ArcState& state, bool requested_in_b2);

// Applies the adaptation rule for a hit in `hit_list` (kB1 or kB2) and
// returns the new p. Throws std::invalid_argument for other lists.
std::int64_t ArcAdapt(ArcState& state, ListId hit_list);

std::string StateDigest(const ArcState& state);

class ArcPolicy final : public ReplacementPolicy {
 public:
  explicit ArcPolicy(CacheConfig config,
                     ArcAdaptation adaptation = ArcAdaptation::kAnalyzedUnit);

  PolicyKind kind() const override {
    return state_.adaptation == ArcAdaptation::kAnalyzedUnit ? PolicyKind::kArcAnalyzed
                                                             : PolicyKind::kArcOriginal;
  }
  std::size_t capacity() const override { return state_.capacity; }
  AccessOutcome Request(const PageId& page) override { return ArcRequest(state_, page); }
  ArcStepDetail RequestDetailed(const PageId& page, bool capture) {
    return ArcRequestDetailed(state_, page, capture);
  }
  bool InCache(const PageId& page) const override { return state_.InCache(page); }
  std::size_t CachedCount() const override { return state_.cached(); }
  std::string Digest() const override { return StateDigest(state_); }

  const ArcState& state() const { return state_; }

 private:
  ArcState state_;
};

}  // namespace cachelab
