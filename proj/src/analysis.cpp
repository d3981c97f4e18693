#include "cachelab/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace cachelab {

std::vector<Phase> PartitionPhases(const std::vector<bool>& miss_flags, std::size_t capacity) {
  std::vector<Phase> phases;
  if (miss_flags.empty()) return phases;
  std::size_t begin = 0;
  std::size_t faults = 0;
  for (std::size_t i = 0; i < miss_flags.size(); ++i) {
    if (miss_flags[i]) ++faults;
    if (faults == capacity) {
      phases.push_back({begin, i, true});
      begin = i + 1;
      faults = 0;
    }
  }
  if (begin < miss_flags.size()) phases.push_back({begin, miss_flags.size() - 1, false});
  return phases;
}

namespace {

std::size_t PrefixInOpt(const PageList& list, const PageSet& opt) {
  std::size_t k = 0;
  for (const auto& e : list) {
    if (!opt.count(e.page)) break;
    ++k;
  }
  return k;
}

std::int64_t I(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

TopSets ComputeTopSets(const ArcState& state, const PageSet& opt_cache) {
  TopSets top;
  top.t1p = PrefixInOpt(state.t1, opt_cache);
  top.t2p = PrefixInOpt(state.t2, opt_cache);
  if (top.t1p == state.t1.size()) top.b1p = PrefixInOpt(state.b1, opt_cache);
  if (top.t2p == state.t2.size()) top.b2p = PrefixInOpt(state.b2, opt_cache);
  top.l1p = top.t1p + top.b1p;
  top.l2p = top.t2p + top.b2p;
  return top;
}

PotentialBreakdown ArcPotential(const ArcState& state, const PageSet& opt_cache) {
  const TopSets top = ComputeTopSets(state, opt_cache);
  const std::int64_t t = I(state.cached());
  PotentialBreakdown out;
  out.terms = {{"p", state.p},          {"t", t},
               {"b1'", I(top.b1p)},     {"t1'", I(top.t1p)},
               {"b2'", I(top.b2p)},     {"t2'", I(top.t2p)}};
  out.phi = state.p - ((I(top.b1p) - t) + 2 * (I(top.t1p) - t) + 3 * (I(top.b2p) - t) +
                       4 * (I(top.t2p) - t));
  return out;
}

namespace {

// Rings are stored tail-first, so the hand origin walks the list backwards.
std::int64_t FirstRingPosition(const PageList& ring, RingOrigin origin) {
  return origin == RingOrigin::kTail ? 1 : I(ring.size());
}
std::int64_t RingStep(RingOrigin origin) { return origin == RingOrigin::kTail ? 1 : -1; }

}  // namespace

std::string_view RingOriginName(RingOrigin origin) {
  return origin == RingOrigin::kHand ? "hand" : "tail";
}

RingOrigin ParseRingOrigin(std::string_view name) {
  if (name == "hand") return RingOrigin::kHand;
  if (name == "tail") return RingOrigin::kTail;
  throw std::invalid_argument("unknown ring origin '" + std::string(name) + "'");
}

PotentialBreakdown ClockPotential(const ClockState& state, const PageSet& opt_cache, RingOrigin origin) {
  const std::int64_t n = I(state.capacity);
  std::int64_t sum = 0;
  std::int64_t outside = 0;
  std::int64_t position = FirstRingPosition(state.ring, origin);
  for (const auto& e : state.ring) {
    if (!opt_cache.count(e.page)) {
      sum += e.marked ? n + position : position;
      ++outside;
    }
    position += RingStep(origin);
  }
  PotentialBreakdown out;
  out.phi = sum;
  out.terms = {{"sum_R", sum}, {"|D|", outside}};
  return out;
}

PotentialBreakdown CarPotential(const CarState& state, const PageSet& opt_cache, RingOrigin origin) {
  const std::int64_t n = I(state.capacity);
  const std::int64_t b1 = I(state.b1.size());
  const std::int64_t b2 = I(state.b2.size());
  std::int64_t sum_r = 0;
  std::int64_t shared = 0;

  auto ring = [&](const PageList& list, std::int64_t history_size) {
    std::int64_t position = FirstRingPosition(list, origin);
    for (const auto& e : list) {
      if (opt_cache.count(e.page)) {
        ++shared;
      } else {
        sum_r += (e.marked ? 3 * n : 0) + 2 * position + history_size;
      }
      position += RingStep(origin);
    }
  };
  auto history = [&](const PageList& list) {
    std::int64_t position = 1;
    for (const auto& e : list) {
      if (!opt_cache.count(e.page)) sum_r += position;
      ++position;
    }
  };
  ring(state.t1, b1);
  ring(state.t2, b2);
  history(state.b1);
  history(state.b2);

  const std::int64_t t1 = I(state.t1.size());
  PotentialBreakdown out;
  out.phi = state.p + 2 * (b1 + t1) - 3 * shared + 3 * sum_r;
  out.terms = {{"p", state.p}, {"b1+t1", b1 + t1}, {"|U|", shared}, {kCarSumRTerm, sum_r}};
  return out;
}

std::string_view StepKindName(StepKind step) {
  switch (step) {
    case StepKind::kOpt:
      return "OPT";
    case StepKind::kAlg:
      return "ALG";
    case StepKind::kState:
      return "STATE";
  }
  return "?";
}

void ViolationReport::Append(const ViolationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::size_t ViolationReport::CountCheck(std::string_view check) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [&](const Violation& v) { return v.check == check; }));
}

namespace {

class InvariantSink {
 public:
  InvariantSink(std::size_t index, std::string dump) : index_(index), dump_(std::move(dump)) {}

  // Records a violation of `lhs <= rhs` named `check`.
  void AtMost(const char* check, std::int64_t lhs, std::int64_t rhs) {
    if (lhs > rhs) report_.violations.push_back({index_, StepKind::kState, check, lhs, rhs, dump_});
  }
  void Require(const char* check, bool ok) {
    if (!ok) report_.violations.push_back({index_, StepKind::kState, check, 1, 0, dump_});
  }

  ViolationReport Take() { return std::move(report_); }

 private:
  std::size_t index_;
  std::string dump_;
  ViolationReport report_;
};

bool Disjoint(std::initializer_list<const PageList*> lists) {
  PageSet seen;
  std::size_t total = 0;
  for (const PageList* l : lists) {
    for (const auto& e : *l) seen.insert(e.page);
    total += l->size();
  }
  return seen.size() == total;
}

}  // namespace

ViolationReport CheckArcInvariants(const ArcState& state, const ArcState* prev,
                                   std::size_t request_index) {
  InvariantSink sink(request_index, StateDigest(state));
  const std::int64_t n = I(state.capacity);
  sink.Require("arc.disjoint", Disjoint({&state.t1, &state.t2, &state.b1, &state.b2}));
  sink.AtMost("arc.t1+t2<=N", I(state.cached()), n);
  sink.AtMost("arc.t1+b1<=N", I(state.t1.size() + state.b1.size()), n);
  sink.AtMost("arc.directory<=2N", I(state.directory()), 2 * n);
  sink.AtMost("arc.p>=0", 0, state.p);
  sink.AtMost("arc.p<=N", state.p, n);
  if (prev != nullptr && prev->cached() == prev->capacity) {
    sink.AtMost("arc.stays-full", n, I(state.cached()));
  }
  return sink.Take();
}

ViolationReport CheckCarInvariants(const CarState& state, const CarState* prev,
                                   std::size_t request_index) {
  InvariantSink sink(request_index, StateDigest(state));
  const std::int64_t n = I(state.capacity);
  const std::int64_t t = I(state.cached());
  const std::int64_t b = I(state.b1.size() + state.b2.size());
  sink.Require("car.disjoint", Disjoint({&state.t1, &state.t2, &state.b1, &state.b2}));
  sink.AtMost("car.I1", t, n);
  sink.AtMost("car.I2", I(state.t1.size() + state.b1.size()), n);
  sink.AtMost("car.I3", I(state.t2.size() + state.b2.size()), 2 * n);
  sink.AtMost("car.I4", t + b, 2 * n);
  if (t < n) sink.AtMost("car.I5", b, 0);
  if (t + b >= n) sink.Require("car.I6", t == n);
  if (prev != nullptr && prev->cached() == prev->capacity) sink.AtMost("car.I7", n, t);
  sink.AtMost("car.p>=0", 0, state.p);
  sink.AtMost("car.p<=N", state.p, n);
  return sink.Take();
}

ViolationReport CheckLruInvariants(const LruState& state, std::size_t request_index) {
  InvariantSink sink(request_index, StateDigest(state));
  sink.AtMost("lru.size<=N", I(state.queue.size()), I(state.capacity));
  return sink.Take();
}

ViolationReport CheckClockInvariants(const ClockState& state, std::size_t request_index) {
  InvariantSink sink(request_index, StateDigest(state));
  sink.AtMost("clock.size<=N", I(state.ring.size()), I(state.capacity));
  return sink.Take();
}

}  // namespace cachelab
