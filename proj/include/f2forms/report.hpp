#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "f2forms/counterexample.hpp"
#include "f2forms/counting.hpp"
#include "f2forms/prank.hpp"
#include "f2forms/prescribed_pairs.hpp"
#include "f2forms/regularity.hpp"

namespace f2forms {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Outcome of one CLI command. `results` holds the numeric and structured
/// payload; `checks` the pass/fail verdicts that decide the exit code.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  Json results = Json::object();
  std::vector<Check> checks;
  double wall_time_ms = 0.0;
  std::optional<std::uint64_t> seed;

  bool all_passed() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

enum class ReportFormat { text, json, csv };

ReportFormat parse_report_format(std::string_view name);
std::string render(const RunReport& report, ReportFormat format);
std::string to_text(const RunReport& report);
std::string to_json(const RunReport& report);
/// One `section,key,value` row per scalar; nested results are flattened to
/// JSON pointer keys.
std::string to_csv(const RunReport& report);
/// Inverse of to_json.
RunReport report_from_json(std::string_view text);

Json to_json_value(const BitVec& v);
Json to_json_value(const Subspace& s);
Json to_json_value(const Dyadic& d);
Json to_json_value(const RegularityResult& r);
Json to_json_value(const RegularityAudit& a);
Json to_json_value(const CountingReport& c);
Json to_json_value(const PrescribedPairsResult& p);
Json to_json_value(const VSpaceElement& v);

}  // namespace f2forms
