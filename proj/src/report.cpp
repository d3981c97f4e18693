#include "cachelab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cachelab {

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "table") return ReportFormat::kTable;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

nlohmann::ordered_json ToJson(const Violation& v) {
  nlohmann::ordered_json j;
  j["request"] = v.request_index;
  j["step"] = std::string(StepKindName(v.step));
  j["check"] = v.check;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  j["state"] = v.state_dump;
  return j;
}

Violation ViolationFromJson(const nlohmann::json& j) {
  Violation v;
  v.request_index = j.at("request").get<std::size_t>();
  const auto step = j.at("step").get<std::string>();
  if (step == "OPT") {
    v.step = StepKind::kOpt;
  } else if (step == "ALG") {
    v.step = StepKind::kAlg;
  } else if (step == "STATE") {
    v.step = StepKind::kState;
  } else {
    throw std::invalid_argument("unknown step '" + step + "'");
  }
  v.check = j.at("check").get<std::string>();
  v.lhs = j.at("lhs").get<std::int64_t>();
  v.rhs = j.at("rhs").get<std::int64_t>();
  v.state_dump = j.at("state").get<std::string>();
  return v;
}

nlohmann::ordered_json ToJson(const ViolationReport& report) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) list.push_back(ToJson(v));
  return list;
}

nlohmann::ordered_json ToJson(const RunReport& r) {
  nlohmann::ordered_json j;
  j["policy"] = r.policy;
  j["cache_size"] = r.cache_size;
  j["trace"] = r.trace;
  j["requests"] = r.requests;
  j["hits"] = r.hits;
  j["misses"] = r.misses;
  j["hit_ratio"] = r.hit_ratio.ToString();
  j["opt_misses"] = r.opt_misses;
  j["opt_ratio"] = r.opt_ratio ? nlohmann::ordered_json(r.opt_ratio->ToString()) : nullptr;
  j["phases"] = r.phases;

  nlohmann::ordered_json s;
  s["checked"] = r.summary.checked;
  s["steps_checked"] = r.summary.steps_checked;
  s["hard"] = r.summary.hard;
  s["soft"] = r.summary.soft;
  nlohmann::ordered_json by_check = nlohmann::ordered_json::object();
  for (const auto& [name, count] : r.summary.by_check) by_check[name] = count;
  s["by_check"] = by_check;
  s["bound_c"] = r.summary.bound_c;
  s["aggregate_ok"] = r.summary.aggregate_ok;
  s["final_phi"] = r.summary.final_phi;
  j["summary"] = s;

  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) list.push_back(ToJson(v));
  j["violations"] = list;
  return j;
}

RunReport RunReportFromJson(const nlohmann::json& j) {
  RunReport r;
  r.policy = j.at("policy").get<std::string>();
  r.cache_size = j.at("cache_size").get<std::size_t>();
  r.trace = j.at("trace").get<std::string>();
  r.requests = j.at("requests").get<std::size_t>();
  r.hits = j.at("hits").get<std::size_t>();
  r.misses = j.at("misses").get<std::size_t>();
  r.hit_ratio = Rational::Parse(j.at("hit_ratio").get<std::string>());
  r.opt_misses = j.at("opt_misses").get<std::size_t>();
  if (!j.at("opt_ratio").is_null()) r.opt_ratio = Rational::Parse(j.at("opt_ratio").get<std::string>());
  r.phases = j.at("phases").get<std::size_t>();

  const auto& s = j.at("summary");
  r.summary.checked = s.at("checked").get<bool>();
  r.summary.steps_checked = s.at("steps_checked").get<std::size_t>();
  r.summary.hard = s.at("hard").get<std::size_t>();
  r.summary.soft = s.at("soft").get<std::size_t>();
  for (const auto& [name, count] : s.at("by_check").items()) {
    r.summary.by_check[name] = count.get<std::size_t>();
  }
  r.summary.bound_c = s.at("bound_c").get<std::int64_t>();
  r.summary.aggregate_ok = s.at("aggregate_ok").get<bool>();
  r.summary.final_phi = s.at("final_phi").get<std::int64_t>();

  for (const auto& v : j.at("violations")) r.violations.push_back(ViolationFromJson(v));
  return r;
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string OptRatioText(const RunReport& r) { return r.opt_ratio ? r.opt_ratio->ToString() : "-"; }

// a.hits/a.requests > b.hits/b.requests, exactly.
bool HigherHitRatio(const RunReport& a, const RunReport& b) {
  const auto lhs = static_cast<unsigned __int128>(a.hit_ratio.num) * b.hit_ratio.den;
  const auto rhs = static_cast<unsigned __int128>(b.hit_ratio.num) * a.hit_ratio.den;
  if (lhs != rhs) return lhs > rhs;
  return a.policy < b.policy;
}

std::string EmitTable(std::vector<RunReport> reports) {
  std::stable_sort(reports.begin(), reports.end(), HigherHitRatio);
  const std::vector<std::string> header = {"policy", "N",          "requests", "hits",
                                           "misses", "hit_ratio",  "hit_%",    "opt_misses",
                                           "vs_opt", "violations"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    std::ostringstream pct;
    pct.imbue(std::locale::classic());
    pct << std::fixed << std::setprecision(2)
        << (r.hit_ratio.den ? 100.0 * static_cast<double>(r.hit_ratio.num) / static_cast<double>(r.hit_ratio.den)
                            : 0.0);
    rows.push_back({r.policy, std::to_string(r.cache_size), std::to_string(r.requests),
                    std::to_string(r.hits), std::to_string(r.misses), r.hit_ratio.ToString(), pct.str(),
                    std::to_string(r.opt_misses), OptRatioText(r),
                    std::to_string(r.summary.hard) + "/" + std::to_string(r.summary.soft)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      // Policy name left-aligned, numbers right-aligned.
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        out << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    out << '\n';
  };
  if (!reports.empty()) out << "# trace: " << reports.front().trace << '\n';
  emit_row(header);
  for (const auto& row : rows) emit_row(row);
  return out.str();
}

}  // namespace

std::string EmitReports(const std::vector<RunReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: {
      if (reports.size() == 1) return ToJson(reports.front()).dump(2) + "\n";
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& r : reports) list.push_back(ToJson(r));
      return list.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::string out(kCsvHeader);
      out += '\n';
      for (const auto& r : reports) {
        out += CsvField(r.policy) + ',' + std::to_string(r.cache_size) + ',' + CsvField(r.trace) + ',' +
               std::to_string(r.requests) + ',' + std::to_string(r.hits) + ',' + std::to_string(r.misses) +
               ',' + r.hit_ratio.ToString() + ',' + std::to_string(r.opt_misses) + ',' + OptRatioText(r) +
               ',' + std::to_string(r.phases) + ',' + std::to_string(r.summary.hard) + ',' +
               std::to_string(r.summary.soft) + ',' + (r.summary.aggregate_ok ? "true" : "false") + '\n';
      }
      return out;
    }
    case ReportFormat::kTable:
      return EmitTable(reports);
  }
  return {};
}

}  // namespace cachelab
