// cachelab: trace-driven replacement policy simulator and verifier.
//
//   cachelab simulate --policy arc --cache-size 8 --trace trace.txt
//   cachelab compare  --cache-size 16 --workload scan:hot=16,scan=64,length=10000
//   cachelab verify   --cache-size 4 --workload fuzz:universe=12,length=1000 --seed 7
//   cachelab gen-trace --workload zipf:universe=100,alpha=0.9,length=5000 --seed 3

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cachelab/report.hpp"
#include "cachelab/simulation.hpp"
#include "cachelab/trace_io.hpp"
#include "cachelab/workloads.hpp"

namespace {

using namespace cachelab;

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct TraceSource {
  std::string trace_path;
  std::string workload;
  std::optional<std::uint64_t> seed;

  void Register(CLI::App* cmd) {
    auto* trace = cmd->add_option("--trace", trace_path, "Trace file, or - for stdin");
    auto* work = cmd->add_option("--workload", workload, "Generated workload, e.g. fuzz:universe=10,length=1000");
    trace->excludes(work);
    cmd->add_option("--seed", seed, "Seed for generated workloads (overrides seed= in the spec)");
  }

  // Returns the trace and a descriptor for reports.
  std::pair<Trace, std::string> Load() const {
    if (!workload.empty()) {
      WorkloadSpec spec = ParseWorkloadSpec(workload);
      if (seed) spec.seed = *seed;
      return {Generate(spec), DescribeWorkload(spec)};
    }
    if (trace_path.empty()) throw std::invalid_argument("one of --trace or --workload is required");
    return {ReadTraceFile(trace_path), trace_path == "-" ? "stdin" : trace_path};
  }
};

std::string DefaultFormat() {
  const char* env = std::getenv("CACHELAB_FORMAT");
  return env != nullptr && *env != '\0' ? env : "table";
}

int Emit(const std::vector<RunReport>& reports, const std::string& format) {
  std::cout << EmitReports(reports, ParseReportFormat(format));
  for (const auto& r : reports) {
    if (r.HasHardViolations()) return kExitViolations;
  }
  return 0;
}

std::vector<RunReport> RunAll(const std::vector<SimPolicy>& policies, const SimulationConfig& base,
                              const Trace& trace) {
  std::vector<std::future<RunReport>> pending;
  for (SimPolicy policy : policies) {
    SimulationConfig config = base;
    config.policy = policy;
    pending.push_back(std::async(std::launch::async,
                                 [config, &trace] { return RunSimulation(config, trace); }));
  }
  std::vector<RunReport> reports;
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cachelab: cache replacement lab (LRU, CLOCK, ARC, CAR, OPT)"};
  app.require_subcommand(1);

  std::string format = DefaultFormat();
  std::size_t cache_size = 0;
  std::string policy_name;
  std::string adaptation = "unit";
  std::string checks_text;
  bool fail_on_car_step = false;
  std::string ring_origin = "hand";
  TraceSource source;
  std::string output_path;

  auto* simulate = app.add_subcommand("simulate", "Run one policy over a trace");
  simulate->add_option("--policy", policy_name, "lru | clock | arc | car | opt")->required();
  simulate->add_option("--adaptation", adaptation, "ARC adaptation: unit | ratio");
  simulate->add_option("--cache-size", cache_size, "Cache size N in pages")->required();
  simulate->add_option("--checks", checks_text, "invariants,potential,lemmas | all | none");
  simulate->add_flag("--fail-on-car-step", fail_on_car_step, "Treat CAR per-step findings as errors");
  simulate->add_option("--ring-origin", ring_origin, "CLOCK/CAR potential ring positions: hand | tail");
  simulate->add_option("--format", format, "json | csv | table (default from CACHELAB_FORMAT)");
  source.Register(simulate);

  auto* compare = app.add_subcommand("compare", "Run every policy and OPT over one trace");
  compare->add_option("--cache-size", cache_size, "Cache size N in pages")->required();
  compare->add_option("--checks", checks_text, "invariants,potential,lemmas | all | none");
  compare->add_flag("--fail-on-car-step", fail_on_car_step, "Treat CAR per-step findings as errors");
  compare->add_option("--ring-origin", ring_origin, "CLOCK/CAR potential ring positions: hand | tail");
  compare->add_option("--format", format, "json | csv | table (default from CACHELAB_FORMAT)");
  source.Register(compare);

  auto* verify = app.add_subcommand("verify", "Lockstep OPT run with every checker enabled");
  verify->add_option("--policy", policy_name, "lru | clock | arc | car (default: all four)");
  verify->add_option("--cache-size", cache_size, "Cache size N in pages")->required();
  verify->add_option("--checks", checks_text, "Subset of invariants,potential,lemmas (default all)");
  verify->add_flag("--fail-on-car-step", fail_on_car_step, "Treat CAR per-step findings as errors");
  verify->add_option("--ring-origin", ring_origin, "CLOCK/CAR potential ring positions: hand | tail");
  verify->add_option("--format", format, "json | csv | table (default from CACHELAB_FORMAT)");
  source.Register(verify);

  auto* gen = app.add_subcommand("gen-trace", "Write a generated workload as a trace file");
  gen->add_option("--workload", source.workload, "Workload spec, e.g. cycle:k=5,length=100")->required();
  gen->add_option("--seed", source.seed, "Seed (overrides seed= in the spec)");
  gen->add_option("--output,-o", output_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      WorkloadSpec spec = ParseWorkloadSpec(source.workload);
      if (source.seed) spec.seed = *source.seed;
      const std::string text = FormatTrace(Generate(spec), DescribeWorkload(spec));
      if (output_path.empty() || output_path == "-") {
        std::cout << text;
      } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + output_path);
        out << text;
      }
      return 0;
    }

    ParseReportFormat(format);
    const auto [trace, descriptor] = source.Load();
    SimulationConfig config;
    config.capacity = cache_size;
    config.trace_descriptor = descriptor;
    config.fail_on_car_step = fail_on_car_step;
    config.checks = ParseChecks(checks_text);
    config.ring_origin = ParseRingOrigin(ring_origin);

    if (simulate->parsed()) {
      config.policy = ParsePolicy(policy_name, adaptation);
      return Emit({RunSimulation(config, trace)}, format);
    }
    if (compare->parsed()) {
      return Emit(RunAll(AllPolicies(), config, trace), format);
    }
    // verify
    if (checks_text.empty()) config.checks = CheckSet::All();
    std::vector<SimPolicy> policies = {SimPolicy::kLru, SimPolicy::kClock, SimPolicy::kArc, SimPolicy::kCar};
    if (!policy_name.empty()) policies = {ParsePolicy(policy_name, "unit")};
    return Emit(RunAll(policies, config, trace), format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
