#include "cachelab/lockstep.hpp"

#include <algorithm>
#include <stdexcept>

#include "cachelab/opt.hpp"

namespace cachelab {

std::size_t LockstepLog::alg_misses() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                [](const LockstepEntry& e) { return e.c_alg == 1; }));
}

std::size_t LockstepLog::opt_misses() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                [](const LockstepEntry& e) { return e.c_opt == 1; }));
}

std::vector<bool> LockstepLog::alg_miss_flags() const {
  std::vector<bool> flags;
  flags.reserve(entries.size());
  for (const auto& e : entries) flags.push_back(e.c_alg == 1);
  return flags;
}

namespace {

std::string OptDump(const std::vector<PageId>& cache) {
  std::string out = "OPT={";
  for (std::size_t i = 0; i < cache.size(); ++i) {
    if (i) out += ',';
    out += cache[i].token();
  }
  return out + "}";
}

// Drives one policy state through the two-half-step protocol. `serve`
// applies the policy to its state, `potential` evaluates Phi, `invariants`
// audits the state after each request.
template <typename State, typename Serve, typename Potential, typename Invariants>
void Drive(std::span<const PageId> trace, State& state, LockstepLog& log, Serve serve,
           Potential potential, Invariants invariants) {
  const OptSchedule schedule = BeladyRun(trace, log.capacity);
  PageSet opt_cache;
  log.entries.reserve(trace.size());
  for (std::size_t j = 0; j < trace.size(); ++j) {
    const OptStep& opt = schedule.steps[j];
    LockstepEntry entry;
    entry.page = trace[j];
    entry.before = potential(state, opt_cache);

    entry.c_opt = opt.was_hit ? 0 : 1;
    if (opt.evicted) opt_cache.erase(*opt.evicted);
    opt_cache.insert(trace[j]);
    entry.after_opt = potential(state, opt_cache);

    const State prev = state;
    entry.cache_full_before = state.cached() == log.capacity;
    const bool hit = serve(state, trace[j], opt_cache, entry);
    entry.c_alg = hit ? 0 : 1;
    entry.after_alg = potential(state, opt_cache);
    entry.digest = StateDigest(state);
    entry.opt_cache = opt.cache_after;
    log.invariants.Append(invariants(state, prev, j));
    log.entries.push_back(std::move(entry));
  }
}

struct LruView {
  LruState s;
  std::size_t cached() const { return s.queue.size(); }
};
struct ClockView {
  ClockState s;
  std::size_t cached() const { return s.ring.size(); }
};

std::string StateDigest(const LruView& v) { return cachelab::StateDigest(v.s); }
std::string StateDigest(const ClockView& v) { return cachelab::StateDigest(v.s); }

}  // namespace

LockstepLog RunLockstep(std::span<const PageId> trace, std::size_t capacity, PolicyKind kind,
                        const LockstepOptions& options) {
  CacheConfig{capacity}.Validate();
  LockstepLog log;
  log.policy = kind;
  log.capacity = capacity;

  switch (kind) {
    case PolicyKind::kLru: {
      LruView view;
      view.s.capacity = capacity;
      Drive(
          trace, view, log,
          [](LruView& v, const PageId& page, const PageSet&, LockstepEntry&) {
            return LruRequest(v.s, page).was_hit;
          },
          [](const LruView&, const PageSet&) { return PotentialBreakdown{}; },
          [](const LruView& v, const LruView&, std::size_t j) { return CheckLruInvariants(v.s, j); });
      break;
    }
    case PolicyKind::kClock: {
      ClockView view;
      view.s.capacity = capacity;
      Drive(
          trace, view, log,
          [](ClockView& v, const PageId& page, const PageSet&, LockstepEntry&) {
            return ClockRequest(v.s, page).was_hit;
          },
          [origin = options.ring_origin](const ClockView& v, const PageSet& opt) {
            return ClockPotential(v.s, opt, origin);
          },
          [](const ClockView& v, const ClockView&, std::size_t j) {
            return CheckClockInvariants(v.s, j);
          });
      break;
    }
    case PolicyKind::kArcAnalyzed: {
      ArcState state;
      state.capacity = capacity;
      const bool audit = options.arc_audit;
      Drive(
          trace, state, log,
          [audit](ArcState& s, const PageId& page, const PageSet&, LockstepEntry& entry) {
            if (!audit) return ArcRequest(s, page).was_hit;
            ArcAudit a{s, {}, {}};
            a.detail = ArcRequestDetailed(s, page, true);
            a.after = s;
            const bool hit = a.detail.outcome.was_hit;
            entry.arc = std::move(a);
            return hit;
          },
          [](const ArcState& s, const PageSet& opt) { return ArcPotential(s, opt); },
          [](const ArcState& s, const ArcState& prev, std::size_t j) {
            return CheckArcInvariants(s, &prev, j);
          });
      break;
    }
    case PolicyKind::kCar: {
      CarState state;
      state.capacity = capacity;
      Drive(
          trace, state, log,
          [](CarState& s, const PageId& page, const PageSet&, LockstepEntry&) {
            return CarRequest(s, page).was_hit;
          },
          [origin = options.ring_origin](const CarState& s, const PageSet& opt) {
            return CarPotential(s, opt, origin);
          },
          [](const CarState& s, const CarState& prev, std::size_t j) {
            return CheckCarInvariants(s, &prev, j);
          });
      break;
    }
    case PolicyKind::kArcOriginal:
      throw std::invalid_argument("the ratio-adaptation ARC variant has no potential analysis");
  }
  return log;
}

ViolationReport CheckStepInequalities(const LockstepLog& log, std::int64_t c) {
  if (log.policy == PolicyKind::kLru) {
    throw std::invalid_argument("no per-step potential is defined for LRU");
  }
  const auto n = static_cast<std::int64_t>(log.capacity);
  ViolationReport report;
  for (std::size_t j = 0; j < log.entries.size(); ++j) {
    const LockstepEntry& e = log.entries[j];
    if (!e.cache_full_before) continue;
    const std::int64_t rhs = c * n * e.c_opt;
    const std::string dump = e.digest + " " + OptDump(e.opt_cache);
    if (e.delta_opt() > rhs) {
      report.violations.push_back({j, StepKind::kOpt, "opt-step", e.delta_opt(), rhs, dump});
    }
    const std::int64_t lhs = e.c_alg + e.delta_total();
    if (lhs > rhs) report.violations.push_back({j, StepKind::kAlg, "step", lhs, rhs, dump});
  }
  return report;
}

bool CheckAggregateBound(std::size_t alg_total, std::size_t opt_total, std::size_t capacity,
                         std::int64_t c) {
  const auto n = static_cast<std::int64_t>(capacity);
  return static_cast<std::int64_t>(alg_total) <=
         c * n * static_cast<std::int64_t>(opt_total) + c * n;
}

ViolationReport CheckArcLemmaAudit(const ArcAudit& audit, const PageSet& opt_cache,
                                   std::size_t request_index) {
  ViolationReport report;
  const ArcState& before = audit.before;
  const std::int64_t n = static_cast<std::int64_t>(before.capacity);
  const std::string dump = StateDigest(before) + " -> " + StateDigest(audit.after);
  auto fail = [&](const char* check, std::int64_t lhs, std::int64_t rhs) {
    report.violations.push_back({request_index, StepKind::kAlg, check, lhs, rhs, dump});
  };

  const TopSets top = ComputeTopSets(before, opt_cache);
  const bool miss = !audit.detail.outcome.was_hit;
  const ArcBranch branch = audit.detail.branch;
  const bool history_hit = branch == ArcBranch::kHistoryB1 || branch == ArcBranch::kHistoryB2;

  // lemma2
  if (miss && !history_hit) {
    const auto ell = static_cast<std::int64_t>(top.ell());
    if (ell >= n) fail("lemma2", ell, n - 1);
  }

  // lemma4: prefixes of L1 = T1 B1 and L2 = T2 B2 that lie in OPT.
  for (const PageId& gone : audit.detail.discarded) {
    const std::size_t l1_pos = before.t1.Contains(gone)
                                   ? before.t1.PositionOf(gone)
                                   : (before.b1.Contains(gone) ? before.t1.size() + before.b1.PositionOf(gone) : 0);
    const std::size_t l2_pos = before.t2.Contains(gone)
                                   ? before.t2.PositionOf(gone)
                                   : (before.b2.Contains(gone) ? before.t2.size() + before.b2.PositionOf(gone) : 0);
    if (l1_pos != 0 && l1_pos <= top.l1p) fail("lemma4", static_cast<std::int64_t>(l1_pos), 0);
    if (l2_pos != 0 && l2_pos <= top.l2p) fail("lemma4", static_cast<std::int64_t>(l2_pos), 0);
  }

  if (audit.detail.replace) {
    const ReplaceMove& move = *audit.detail.replace;
    const bool shape_ok = (move.from == ListId::kT1 && move.to == ListId::kB1) ||
                          (move.from == ListId::kT2 && move.to == ListId::kB2);
    if (!shape_ok) fail("lemma3.shape", 1, 0);

    if (audit.detail.before_replace && audit.detail.after_replace) {
      const ArcState& pre = *audit.detail.before_replace;
      const ArcState& post = *audit.detail.after_replace;
      const bool from_t1 = move.from == ListId::kT1;

      // The observed state must be `pre` with LRU(T_i) moved to MRU(B_i).
      ArcState expected = pre;
      PageList& src = from_t1 ? expected.t1 : expected.t2;
      PageList& dst = from_t1 ? expected.b1 : expected.b2;
      if (shape_ok && !src.empty() && src.Back().page == move.page) {
        src.PopBack();
        dst.PushFront(move.page);
      }
      if (StateDigest(expected) != StateDigest(post)) fail("lemma3.shape", 1, 0);

      // REPLACE is analyzed with t held at N, so only the primed sizes count.
      auto primed = [](const TopSets& t) {
        return -(static_cast<std::int64_t>(t.b1p) + 2 * static_cast<std::int64_t>(t.t1p) +
                 3 * static_cast<std::int64_t>(t.b2p) + 4 * static_cast<std::int64_t>(t.t2p));
      };
      const TopSets top_pre = ComputeTopSets(pre, opt_cache);
      const TopSets top_post = ComputeTopSets(post, opt_cache);
      const std::int64_t d_phi = (post.p - pre.p) + primed(top_post) - primed(top_pre);
      if (d_phi > 1) fail("lemma3.dphi", d_phi, 1);

      // A page that lands in B1' (B2') came from a T1 (T2) lying wholly in OPT.
      const bool landed_in_top = from_t1 ? top_post.b1p > 0 && post.b1.Front().page == move.page
                                         : top_post.b2p > 0 && post.b2.Front().page == move.page;
      const std::size_t src_size = from_t1 ? pre.t1.size() : pre.t2.size();
      const std::size_t src_top = from_t1 ? top_pre.t1p : top_pre.t2p;
      if (landed_in_top && src_top != src_size) {
        fail("lemma3.prefix", static_cast<std::int64_t>(src_top), static_cast<std::int64_t>(src_size));
      }

      // lemma5: with T1 = T1', no T2' page moves to B2, and symmetrically.
      const std::size_t moved_pos = (from_t1 ? pre.t1 : pre.t2).PositionOf(move.page);
      const bool moved_in_top = moved_pos != 0 && moved_pos <= (from_t1 ? top_pre.t1p : top_pre.t2p);
      const bool other_full_top = from_t1 ? top_pre.t2p == pre.t2.size() : top_pre.t1p == pre.t1.size();
      if (moved_in_top && other_full_top) fail("lemma5", 1, 0);
    }
  }
  return report;
}

ViolationReport CheckArcLemmas(const LockstepLog& log) {
  if (log.policy != PolicyKind::kArcAnalyzed) {
    throw std::invalid_argument("ARC lemma checks need an ARC lockstep log");
  }
  ViolationReport report;
  for (std::size_t j = 0; j < log.entries.size(); ++j) {
    const LockstepEntry& e = log.entries[j];
    if (!e.cache_full_before) continue;
    if (!e.arc) throw std::invalid_argument("ARC lockstep log was recorded without audits");
    const PageSet opt(e.opt_cache.begin(), e.opt_cache.end());
    report.Append(CheckArcLemmaAudit(*e.arc, opt, j));
  }
  return report;
}

ViolationReport CarStepDiagnostics(const LockstepLog& log) {
  if (log.policy != PolicyKind::kCar) {
    throw std::invalid_argument("CAR diagnostics need a CAR lockstep log");
  }
  const auto n = static_cast<std::int64_t>(log.capacity);
  ViolationReport report;
  for (std::size_t j = 0; j < log.entries.size(); ++j) {
    const LockstepEntry& e = log.entries[j];
    if (!e.cache_full_before) continue;
    const std::string dump = e.digest + " " + OptDump(e.opt_cache);
    const std::int64_t rhs = 18 * n * e.c_opt;
    if (e.delta_opt() > rhs) {
      report.violations.push_back({j, StepKind::kOpt, "car.opt-step-18N", e.delta_opt(), rhs, dump});
    }
    if (e.c_alg == 1) {
      const std::int64_t before = e.after_opt.terms.at(kCarSumRTerm);
      const std::int64_t after = e.after_alg.terms.at(kCarSumRTerm);
      if (after > before) {
        report.violations.push_back({j, StepKind::kAlg, "car.sumR", after - before, 0, dump});
      }
    }
  }
  return report;
}

}  // namespace cachelab
