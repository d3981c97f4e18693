#include "cachelab/simulation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cachelab/car.hpp"
#include "cachelab/classic.hpp"
#include "cachelab/lockstep.hpp"
#include "cachelab/opt.hpp"

namespace cachelab {

SimPolicy ParsePolicy(std::string_view name, std::string_view adaptation) {
  if (adaptation != "unit" && adaptation != "ratio") {
    throw std::invalid_argument("unknown ARC adaptation '" + std::string(adaptation) + "'");
  }
  if (name == "lru") return SimPolicy::kLru;
  if (name == "clock") return SimPolicy::kClock;
  if (name == "arc") return adaptation == "ratio" ? SimPolicy::kArcRatio : SimPolicy::kArc;
  if (name == "car") return SimPolicy::kCar;
  if (name == "opt") return SimPolicy::kOpt;
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

std::string_view SimPolicyName(SimPolicy policy) {
  switch (policy) {
    case SimPolicy::kLru:
      return "lru";
    case SimPolicy::kClock:
      return "clock";
    case SimPolicy::kArc:
      return "arc";
    case SimPolicy::kArcRatio:
      return "arc-ratio";
    case SimPolicy::kCar:
      return "car";
    case SimPolicy::kOpt:
      return "opt";
  }
  return "?";
}

const std::vector<SimPolicy>& AllPolicies() {
  static const std::vector<SimPolicy> kAll = {SimPolicy::kLru, SimPolicy::kClock, SimPolicy::kArc,
                                              SimPolicy::kArcRatio, SimPolicy::kCar, SimPolicy::kOpt};
  return kAll;
}

std::unique_ptr<ReplacementPolicy> MakePolicy(SimPolicy policy, CacheConfig config) {
  switch (policy) {
    case SimPolicy::kLru:
      return std::make_unique<LruPolicy>(config);
    case SimPolicy::kClock:
      return std::make_unique<ClockPolicy>(config);
    case SimPolicy::kArc:
      return std::make_unique<ArcPolicy>(config, ArcAdaptation::kAnalyzedUnit);
    case SimPolicy::kArcRatio:
      return std::make_unique<ArcPolicy>(config, ArcAdaptation::kOriginalRatio);
    case SimPolicy::kCar:
      return std::make_unique<CarPolicy>(config);
    case SimPolicy::kOpt:
      break;
  }
  throw std::invalid_argument("OPT is offline and has no online policy object");
}

Rational Rational::Of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::ToString() const { return std::to_string(num) + "/" + std::to_string(den); }

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw std::invalid_argument("expected num/den");
  try {
    std::size_t used = 0;
    const std::string num_s(text.substr(0, slash));
    const std::string den_s(text.substr(slash + 1));
    const auto num = std::stoull(num_s, &used);
    if (used != num_s.size()) throw std::invalid_argument("bad numerator");
    const auto den = std::stoull(den_s, &used);
    if (used != den_s.size()) throw std::invalid_argument("bad denominator");
    return Of(num, den);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range");
  }
}

CheckSet ParseChecks(std::string_view text) {
  CheckSet checks;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item == "invariants") {
      checks.invariants = true;
    } else if (item == "potential") {
      checks.potential = true;
    } else if (item == "lemmas") {
      checks.lemmas = true;
    } else if (item == "all") {
      checks = CheckSet::All();
    } else if (item == "none" || item.empty()) {
    } else {
      throw std::invalid_argument("unknown check '" + std::string(item) + "'");
    }
  }
  return checks;
}

std::int64_t AggregateBoundMultiplier(SimPolicy policy) {
  switch (policy) {
    case SimPolicy::kLru:
      return 1;
    case SimPolicy::kClock:
      return 2;
    case SimPolicy::kArc:
      return 4;
    case SimPolicy::kCar:
      return 21;
    case SimPolicy::kArcRatio:
    case SimPolicy::kOpt:
      return 0;
  }
  return 0;
}

namespace {

PolicyKind ToKind(SimPolicy policy) {
  switch (policy) {
    case SimPolicy::kLru:
      return PolicyKind::kLru;
    case SimPolicy::kClock:
      return PolicyKind::kClock;
    case SimPolicy::kArc:
      return PolicyKind::kArcAnalyzed;
    case SimPolicy::kArcRatio:
      return PolicyKind::kArcOriginal;
    case SimPolicy::kCar:
      return PolicyKind::kCar;
    case SimPolicy::kOpt:
      break;
  }
  throw std::invalid_argument("OPT has no policy kind");
}

void Record(RunReport& report, const ViolationReport& found, bool hard) {
  for (const auto& v : found.violations) {
    ++report.summary.by_check[v.check];
    ++(hard ? report.summary.hard : report.summary.soft);
    report.violations.push_back(v);
  }
}

void FillCounts(RunReport& report, const std::vector<bool>& miss_flags, std::size_t opt_misses,
                std::size_t capacity) {
  report.requests = miss_flags.size();
  report.misses = static_cast<std::size_t>(std::count(miss_flags.begin(), miss_flags.end(), true));
  report.hits = report.requests - report.misses;
  report.hit_ratio = report.requests ? Rational::Of(report.hits, report.requests) : Rational{0, 1};
  report.opt_misses = opt_misses;
  if (opt_misses > 0) report.opt_ratio = Rational::Of(report.misses, opt_misses);
  report.phases = PartitionPhases(miss_flags, capacity).size();
}

}  // namespace

RunReport RunSimulation(const SimulationConfig& config, const Trace& trace) {
  CacheConfig{config.capacity}.Validate();
  RunReport report;
  report.policy = std::string(SimPolicyName(config.policy));
  report.cache_size = config.capacity;
  report.trace = config.trace_descriptor;

  if (config.policy == SimPolicy::kOpt) {
    const OptSchedule schedule = BeladyRun(trace, config.capacity);
    std::vector<bool> flags;
    flags.reserve(trace.size());
    for (const auto& s : schedule.steps) flags.push_back(!s.was_hit);
    FillCounts(report, flags, schedule.misses(), config.capacity);
    return report;
  }

  const bool lockstep = config.policy != SimPolicy::kArcRatio &&
                        (config.checks.potential || config.checks.lemmas || config.checks.invariants);
  if (lockstep) {
    const PolicyKind kind = ToKind(config.policy);
    LockstepOptions options;
    options.arc_audit = config.checks.lemmas && kind == PolicyKind::kArcAnalyzed;
    options.ring_origin = config.ring_origin;
    const LockstepLog log = RunLockstep(trace, config.capacity, kind, options);
    FillCounts(report, log.alg_miss_flags(), log.opt_misses(), config.capacity);
    report.summary.checked = true;
    report.summary.steps_checked = static_cast<std::size_t>(std::count_if(
        log.entries.begin(), log.entries.end(), [](const LockstepEntry& e) { return e.cache_full_before; }));
    report.summary.final_phi = log.final_phi();

    if (config.checks.invariants) Record(report, log.invariants, true);
    if (config.checks.potential) {
      const std::int64_t c = AggregateBoundMultiplier(config.policy);
      report.summary.bound_c = c;
      report.summary.aggregate_ok =
          CheckAggregateBound(log.alg_misses(), log.opt_misses(), config.capacity, c);
      if (!report.summary.aggregate_ok) {
        const auto n = static_cast<std::int64_t>(config.capacity);
        ViolationReport agg;
        agg.violations.push_back({trace.size(), StepKind::kAlg, "aggregate",
                                  static_cast<std::int64_t>(log.alg_misses()),
                                  c * n * static_cast<std::int64_t>(log.opt_misses()) + c * n,
                                  trace.empty() ? std::string() : log.entries.back().digest});
        Record(report, agg, true);
      }
      if (kind == PolicyKind::kCar) {
        ViolationReport car = CheckStepInequalities(log, c);
        car.Append(CarStepDiagnostics(log));
        Record(report, car, config.fail_on_car_step);
      } else if (kind != PolicyKind::kLru) {
        Record(report, CheckStepInequalities(log, c), true);
      }
    }
    if (config.checks.lemmas && kind == PolicyKind::kArcAnalyzed) {
      Record(report, CheckArcLemmas(log), true);
    }
    return report;
  }

  auto policy = MakePolicy(config.policy, CacheConfig{config.capacity});
  std::vector<bool> flags;
  flags.reserve(trace.size());
  ViolationReport invariants;
  auto* arc = dynamic_cast<ArcPolicy*>(policy.get());
  for (std::size_t j = 0; j < trace.size(); ++j) {
    if (config.checks.invariants && arc != nullptr) {
      const ArcState prev = arc->state();
      flags.push_back(!policy->Request(trace[j]).was_hit);
      invariants.Append(CheckArcInvariants(arc->state(), &prev, j));
    } else {
      flags.push_back(!policy->Request(trace[j]).was_hit);
    }
  }
  FillCounts(report, flags, BeladyRun(trace, config.capacity).misses(), config.capacity);
  if (config.checks.invariants) {
    report.summary.checked = true;
    Record(report, invariants, true);
  }
  return report;
}

}  // namespace cachelab
