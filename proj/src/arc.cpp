#include "cachelab/arc.hpp"

#include <algorithm>
#include <stdexcept>

namespace cachelab {

std::string_view ListName(ListId id) {
  switch (id) {
    case ListId::kT1:
      return "T1";
    case ListId::kT2:
      return "T2";
    case ListId::kB1:
      return "B1";
    case ListId::kB2:
      return "B2";
  }
  return "?";
}

std::string_view ArcBranchName(ArcBranch branch) {
  switch (branch) {
    case ArcBranch::kHit:
      return "hit";
    case ArcBranch::kHistoryB1:
      return "history-b1";
    case ArcBranch::kHistoryB2:
      return "history-b2";
    case ArcBranch::kMissL1FullHistory:
      return "miss-l1-full-history";
    case ArcBranch::kMissL1FullCache:
      return "miss-l1-full-cache";
    case ArcBranch::kMissDirectoryFull:
      return "miss-directory-full";
    case ArcBranch::kMissColdStart:
      return "miss-cold";
  }
  return "?";
}

ReplaceMove ArcReplace(ArcState& state, bool requested_in_b2) {
  if (state.cached() != state.capacity) {
    throw std::logic_error("ARC REPLACE called with a cache that is not full");
  }
  const auto t1 = static_cast<std::int64_t>(state.t1.size());
  if (t1 >= 1 && ((requested_in_b2 && t1 == state.p) || t1 > state.p)) {
    PageId victim = state.t1.PopBack().page;
    state.b1.PushFront(victim);
    return {std::move(victim), ListId::kT1, ListId::kB1};
  }
  PageId victim = state.t2.PopBack().page;
  state.b2.PushFront(victim);
  return {std::move(victim), ListId::kT2, ListId::kB2};
}

std::int64_t ArcAdapt(ArcState& state, ListId hit_list) {
  const auto n = static_cast<std::int64_t>(state.capacity);
  const auto b1 = static_cast<std::int64_t>(state.b1.size());
  const auto b2 = static_cast<std::int64_t>(state.b2.size());
  std::int64_t delta = 1;
  if (hit_list == ListId::kB1) {
    if (state.adaptation == ArcAdaptation::kOriginalRatio) delta = std::max<std::int64_t>(1, b2 / b1);
    state.p = std::min(state.p + delta, n);
  } else if (hit_list == ListId::kB2) {
    if (state.adaptation == ArcAdaptation::kOriginalRatio) delta = std::max<std::int64_t>(1, b1 / b2);
    state.p = std::max<std::int64_t>(state.p - delta, 0);
  } else {
    throw std::invalid_argument("ARC adaptation requires a history list");
  }
  return state.p;
}

ArcStepDetail ArcRequestDetailed(ArcState& state, const PageId& page, bool capture) {
  ArcStepDetail detail;
  auto replace = [&](bool requested_in_b2) {
    if (capture) detail.before_replace = state;
    detail.replace = ArcReplace(state, requested_in_b2);
    if (capture) detail.after_replace = state;
    detail.outcome.evicted_cache_page = detail.replace->page;
  };

  if (state.InCache(page)) {
    detail.branch = ArcBranch::kHit;
    detail.outcome.was_hit = true;
    if (state.t1.Contains(page)) {
      state.t1.Remove(page);
      state.t2.PushFront(page);
    } else {
      state.t2.MoveToFront(page);
    }
    return detail;
  }

  const std::int64_t p_before = state.p;
  if (state.b1.Contains(page) || state.b2.Contains(page)) {
    const bool in_b2 = state.b2.Contains(page);
    detail.branch = in_b2 ? ArcBranch::kHistoryB2 : ArcBranch::kHistoryB1;
    ArcAdapt(state, in_b2 ? ListId::kB2 : ListId::kB1);
    replace(in_b2);
    (in_b2 ? state.b2 : state.b1).Remove(page);
    state.t2.PushFront(page);
    detail.outcome.adaptation_delta = state.p - p_before;
    return detail;
  }

  const std::size_t n = state.capacity;
  const std::size_t l1 = state.t1.size() + state.b1.size();
  if (l1 == n) {
    if (state.t1.size() < n) {
      detail.branch = ArcBranch::kMissL1FullHistory;
      PageId dropped = state.b1.PopBack().page;
      detail.outcome.evicted_history_page = dropped;
      detail.discarded.push_back(std::move(dropped));
      replace(false);
    } else {
      detail.branch = ArcBranch::kMissL1FullCache;
      PageId dropped = state.t1.PopBack().page;
      detail.outcome.evicted_cache_page = dropped;
      detail.discarded.push_back(std::move(dropped));
    }
  } else if (l1 < n && state.directory() >= n) {
    detail.branch = ArcBranch::kMissDirectoryFull;
    if (state.directory() == 2 * n) {
      PageId dropped = state.b2.PopBack().page;
      detail.outcome.evicted_history_page = dropped;
      detail.discarded.push_back(std::move(dropped));
    }
    replace(false);
  } else {
    detail.branch = ArcBranch::kMissColdStart;
  }
  // The directory-miss branch always finishes by admitting the page at MRU(T1).
  state.t1.PushFront(page);
  return detail;
}

AccessOutcome ArcRequest(ArcState& state, const PageId& page) {
  return ArcRequestDetailed(state, page, false).outcome;
}

std::string StateDigest(const ArcState& state) {
  std::string out(state.adaptation == ArcAdaptation::kAnalyzedUnit ? "ARC" : "ARC-RATIO");
  out += " p=" + std::to_string(state.p);
  out += " T1=" + state.t1.Render(false);
  out += " T2=" + state.t2.Render(false);
  out += " B1=" + state.b1.Render(false);
  out += " B2=" + state.b2.Render(false);
  return out;
}

ArcPolicy::ArcPolicy(CacheConfig config, ArcAdaptation adaptation) {
  config.Validate();
  state_.capacity = config.capacity;
  state_.adaptation = adaptation;
}

}  // namespace cachelab
