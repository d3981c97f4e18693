#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cachelab/analysis.hpp"
#include "cachelab/simulation.hpp"

namespace cachelab {

enum class ReportFormat { kJson, kCsv, kTable };

// "json", "csv" or "table". Throws std::invalid_argument.
ReportFormat ParseReportFormat(std::string_view name);

// Fixed CSV column order; changing it breaks golden files.
inline constexpr std::string_view kCsvHeader =
    "policy,cache_size,trace,requests,hits,misses,hit_ratio,opt_misses,opt_ratio,phases,"
    "hard_violations,soft_violations,aggregate_ok";

nlohmann::ordered_json ToJson(const Violation& violation);
Violation ViolationFromJson(const nlohmann::json& j);

nlohmann::ordered_json ToJson(const ViolationReport& report);

nlohmann::ordered_json ToJson(const RunReport& report);
// Throws nlohmann::json::exception or std::invalid_argument on bad input.
RunReport RunReportFromJson(const nlohmann::json& j);

// JSON: a single object for one report, an array otherwise. CSV: header plus
// one row per report. TABLE: aligned columns sorted by hit ratio, highest
// first. Output always ends with a newline.
std::string EmitReports(const std::vector<RunReport>& reports, ReportFormat format);

}  // namespace cachelab
