#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cachelab/analysis.hpp"
#include "cachelab/arc.hpp"
#include "cachelab/page.hpp"

namespace cachelab {

enum class SimPolicy { kLru, kClock, kArc, kArcRatio, kCar, kOpt };

// "lru", "clock", "arc", "car" or "opt"; `adaptation` selects the ARC
// variant ("unit" or "ratio"). Throws std::invalid_argument otherwise.
SimPolicy ParsePolicy(std::string_view name, std::string_view adaptation = "unit");
std::string_view SimPolicyName(SimPolicy policy);

// Every online policy plus OPT, in reporting order.
const std::vector<SimPolicy>& AllPolicies();

std::unique_ptr<ReplacementPolicy> MakePolicy(SimPolicy policy, CacheConfig config);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  // Reduced to lowest terms; den must be positive.
  static Rational Of(std::uint64_t num, std::uint64_t den);
  std::string ToString() const;  // "num/den"
  // Parses "num/den". Throws std::invalid_argument.
  static Rational Parse(std::string_view text);
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct CheckSet {
  bool invariants = false;
  bool potential = false;
  bool lemmas = false;

  bool any() const { return invariants || potential || lemmas; }
  static CheckSet All() { return {true, true, true}; }
};

// Comma-separated subset of "invariants,potential,lemmas" (or "all",
// "none"). Throws std::invalid_argument.
CheckSet ParseChecks(std::string_view text);

struct SimulationConfig {
  SimPolicy policy = SimPolicy::kLru;
  std::size_t capacity = 1;
  std::string trace_descriptor;
  CheckSet checks;
  bool fail_on_car_step = false;
  RingOrigin ring_origin = RingOrigin::kHand;
};

struct ViolationSummary {
  bool checked = false;
  std::size_t steps_checked = 0;
  std::size_t hard = 0;
  std::size_t soft = 0;
  std::map<std::string, std::size_t> by_check;
  // Aggregate competitive bound C_alg <= c*N*C_opt + c*N; c = 0 when the
  // policy has no bound under test.
  std::int64_t bound_c = 0;
  bool aggregate_ok = true;
  std::int64_t final_phi = 0;
  friend bool operator==(const ViolationSummary&, const ViolationSummary&) = default;
};

struct RunReport {
  std::string policy;
  std::size_t cache_size = 0;
  std::string trace;
  std::size_t requests = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
  Rational hit_ratio;
  std::size_t opt_misses = 0;
  std::optional<Rational> opt_ratio;  // misses / opt_misses; empty when OPT never misses
  std::size_t phases = 0;
  ViolationSummary summary;
  std::vector<Violation> violations;

  bool HasHardViolations() const { return summary.hard > 0; }
};

// Runs one policy over `trace`. With checks requested, OPT runs in lockstep
// and the potential, lemma and invariant checkers feed the summary. CAR
// per-step findings are soft unless config.fail_on_car_step is set. Throws
// std::invalid_argument for capacity < 1.
RunReport RunSimulation(const SimulationConfig& config, const Trace& trace);

// Bound multiplier c used in the aggregate check, or 0 for none.
std::int64_t AggregateBoundMultiplier(SimPolicy policy);

}  // namespace cachelab
