#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cachelab/analysis.hpp"
#include "cachelab/arc.hpp"
#include "cachelab/page.hpp"

namespace cachelab {

// ARC internals around one request, kept for the lemma checks.
struct ArcAudit {
  ArcState before;  // after OPT has served the request, before ARC acts
  ArcStepDetail detail;
  ArcState after;
};

// One request processed in two half-steps: OPT first, then the policy.
// Potentials are evaluated before the request, after OPT's half-step and
// after the policy's half-step.
struct LockstepEntry {
  PageId page;
  int c_opt = 0;
  int c_alg = 0;
  PotentialBreakdown before;
  PotentialBreakdown after_opt;
  PotentialBreakdown after_alg;
  bool cache_full_before = false;
  std::string digest;              // policy state after the request
  std::vector<PageId> opt_cache;   // OPT's cache after the request
  std::optional<ArcAudit> arc;

  std::int64_t delta_opt() const { return after_opt.phi - before.phi; }
  std::int64_t delta_alg() const { return after_alg.phi - after_opt.phi; }
  std::int64_t delta_total() const { return after_alg.phi - before.phi; }
};

struct LockstepLog {
  PolicyKind policy = PolicyKind::kArcAnalyzed;
  std::size_t capacity = 1;
  std::vector<LockstepEntry> entries;
  // Structural invariants evaluated after every policy half-step.
  ViolationReport invariants;

  std::size_t alg_misses() const;
  std::size_t opt_misses() const;
  std::vector<bool> alg_miss_flags() const;
  std::int64_t final_phi() const { return entries.empty() ? 0 : entries.back().after_alg.phi; }
};

struct LockstepOptions {
  // Record ArcAudit per request (ARC only).
  bool arc_audit = true;
  // Where CLOCK and CAR ring positions are counted from.
  RingOrigin ring_origin = RingOrigin::kHand;
};

// Runs `kind` against Belady's MIN on `trace`. LRU has no potential here and
// logs zero. Throws std::invalid_argument for kArcOriginal, which has no
// potential analysis.
LockstepLog RunLockstep(std::span<const PageId> trace, std::size_t capacity, PolicyKind kind,
                        const LockstepOptions& options = {});

// For every request made once the policy's cache is full:
//   OPT half-step:  dPhi_opt            <= c*N*c_opt   (check "opt-step")
//   whole request:  c_alg + dPhi_total  <= c*N*c_opt   (check "step")
// Throws std::invalid_argument for LRU logs.
ViolationReport CheckStepInequalities(const LockstepLog& log, std::int64_t c);

// C_alg <= c*N*C_opt + c*N.
bool CheckAggregateBound(std::size_t alg_total, std::size_t opt_total, std::size_t capacity,
                         std::int64_t c);

// Runtime restatements of the ARC lemmas, applied once the cache is full:
//   lemma2: a miss outside the history has l' < N;
//   lemma3: REPLACE moves LRU(T1) to MRU(B1) or LRU(T2) to MRU(B2); with t
//           held at N it raises Phi by at most 1; a page landing in B1' (B2')
//           implies T1 = T1' (T2 = T2') before the move;
//   lemma4: no page removed from the directory belongs to L1' or L2';
//   lemma5: if T1 = T1' REPLACE does not move a T2' page to B2, and vice versa.
ViolationReport CheckArcLemmas(const LockstepLog& log);
ViolationReport CheckArcLemmaAudit(const ArcAudit& audit, const PageSet& opt_cache,
                                   std::size_t request_index);

// Report-only CAR diagnostics for requests made once the cache is full:
//   car.opt-step-18N: dPhi_opt <= 18N*c_opt;
//   car.sumR: on a CAR miss the sum of R[q] over D does not increase during
//             the CAR half-step.
ViolationReport CarStepDiagnostics(const LockstepLog& log);

}  // namespace cachelab
