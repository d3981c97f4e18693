#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cachelab/arc.hpp"
#include "cachelab/car.hpp"
#include "cachelab/classic.hpp"
#include "cachelab/page.hpp"

namespace cachelab {

using PageSet = std::unordered_set<PageId, PageIdHash>;

// ---------------------------------------------------------------------------
// Phases

struct Phase {
  std::size_t begin = 0;  // inclusive
  std::size_t end = 0;    // inclusive
  bool complete = false;
};

// Splits the request range into consecutive phases that each hold exactly
// `capacity` faults. A trailing remainder with fewer faults is returned as a
// single incomplete phase.
std::vector<Phase> PartitionPhases(const std::vector<bool>& miss_flags, std::size_t capacity);

// ---------------------------------------------------------------------------
// TOP sets: for a list X, TOP(X) is the longest MRU prefix of X whose pages
// are all in OPT's cache.

struct TopSets {
  std::size_t t1p = 0;
  std::size_t t2p = 0;
  std::size_t b1p = 0;  // |TOP(T1 B1) ∩ B1|
  std::size_t b2p = 0;  // |TOP(T2 B2) ∩ B2|
  std::size_t l1p = 0;
  std::size_t l2p = 0;

  std::size_t ell() const { return l1p + l2p; }
};

TopSets ComputeTopSets(const ArcState& state, const PageSet& opt_cache);

// ---------------------------------------------------------------------------
// Potentials. All arithmetic is exact integer arithmetic.

struct PotentialBreakdown {
  std::int64_t phi = 0;
  std::map<std::string, std::int64_t> terms;
};

// Phi = p - [(b1' - t) + 2(t1' - t) + 3(b2' - t) + 4(t2' - t)], t = |T1|+|T2|.
PotentialBreakdown ArcPotential(const ArcState& state, const PageSet& opt_cache);

// Where ring positions start counting.
enum class RingOrigin {
  // Head (under the hand) = 1, tail = |ring|: a page's position falls as the
  // hand approaches it.
  kHand,
  // Tail = 1, head = |ring|: positions grow as a page ages.
  kTail,
};

std::string_view RingOriginName(RingOrigin origin);
// "hand" or "tail". Throws std::invalid_argument.
RingOrigin ParseRingOrigin(std::string_view name);

// Phi = sum over ring pages q outside OPT of R[q], where R[q] is q's ring
// position, plus N when q is marked.
PotentialBreakdown ClockPotential(const ClockState& state, const PageSet& opt_cache,
                                  RingOrigin origin = RingOrigin::kHand);

// Phi = p + 2(b1 + t1) - 3|U| + 3 * sum_{q in D} R[q]
//   D: directory pages outside OPT, U: cached pages inside OPT.
//   R[q] = P[q] in B1/B2; 2P[q] + b_i for unmarked pages of T_i;
//   3N + 2P[q] + b_i for marked pages of T_i. P counts ring positions from
//   `origin` and history positions from the MRU end, starting at 1.
PotentialBreakdown CarPotential(const CarState& state, const PageSet& opt_cache,
                                RingOrigin origin = RingOrigin::kHand);

// Key under which CarPotential records the sum of R[q] over D.
inline constexpr const char* kCarSumRTerm = "sum_R";

// ---------------------------------------------------------------------------
// Violations

enum class StepKind { kOpt, kAlg, kState };

std::string_view StepKindName(StepKind step);

struct Violation {
  std::size_t request_index = 0;
  StepKind step = StepKind::kAlg;
  std::string check;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string state_dump;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  std::size_t size() const { return violations.size(); }
  void Append(const ViolationReport& other);
  std::size_t CountCheck(std::string_view check) const;
};

// ---------------------------------------------------------------------------
// Structural invariants

// Pairwise disjoint lists, |T1|+|T2| <= N, |T1|+|B1| <= N, directory <= 2N,
// 0 <= p <= N. `prev` enables the fullness-is-permanent check.
ViolationReport CheckArcInvariants(const ArcState& state, const ArcState* prev = nullptr,
                                   std::size_t request_index = 0);

// I1-I6 on `state`; I7 when `prev` is given. Also checks list disjointness
// and 0 <= p <= N.
ViolationReport CheckCarInvariants(const CarState& state, const CarState* prev = nullptr,
                                   std::size_t request_index = 0);

// No duplicates and size <= N.
ViolationReport CheckLruInvariants(const LruState& state, std::size_t request_index = 0);
ViolationReport CheckClockInvariants(const ClockState& state, std::size_t request_index = 0);

}  // namespace cachelab
