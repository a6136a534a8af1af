#include "f2forms/report.hpp"

#include <cstdio>
#include <sstream>

#include "f2forms/errors.hpp"

namespace f2forms {

bool RunReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string render(const RunReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return to_text(report);
    case ReportFormat::json: return to_json(report);
    case ReportFormat::csv: return to_csv(report);
  }
  throw std::logic_error("render: bad format");
}

namespace {

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  out << "seed: " << (report.seed ? std::to_string(*report.seed) : "none") << "\n";
  if (!report.parameters.empty()) {
    out << "parameters:\n";
    for (const auto& [k, v] : report.parameters) out << "  " << k << " = " << v << "\n";
  }
  if (!report.results.empty()) {
    out << "results:\n";
    std::istringstream lines(report.results.dump(2));
    for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
  }
  std::size_t passed = 0;
  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const auto& c : report.checks) {
      passed += c.passed ? 1 : 0;
      out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) out << "  " << c.detail;
      out << "\n";
    }
  }
  out << "status: " << (report.all_passed() ? "PASS" : "FAIL") << " (" << passed << "/" << report.checks.size()
      << " checks)\n";
  out << "wall_time_ms: " << format_ms(report.wall_time_ms) << "\n";
  return out.str();
}

std::string to_json(const RunReport& report) {
  Json doc;
  doc["command"] = report.command;
  doc["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  doc["parameters"] = Json::object();
  for (const auto& [k, v] : report.parameters) doc["parameters"][k] = v;
  doc["results"] = report.results;
  doc["checks"] = Json::array();
  for (const auto& c : report.checks) {
    doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  doc["all_passed"] = report.all_passed();
  doc["wall_time_ms"] = report.wall_time_ms;
  return doc.dump(2) + "\n";
}

std::string to_csv(const RunReport& report) {
  std::string out = "section,key,value\n";
  auto row = [&out](std::string_view section, std::string_view key, std::string_view value) {
    out += csv_field(section) + "," + csv_field(key) + "," + csv_field(value) + "\n";
  };
  row("meta", "command", report.command);
  row("meta", "seed", report.seed ? std::to_string(*report.seed) : "");
  for (const auto& [k, v] : report.parameters) row("parameter", k, v);
  if (!report.results.empty()) {
    const Json flat = report.results.flatten();
    for (const auto& [key, value] : flat.items()) row("result", key, scalar_text(value));
  }
  for (const auto& c : report.checks) row("check", c.name, c.passed ? "PASS" : "FAIL");
  row("meta", "all_passed", report.all_passed() ? "true" : "false");
  row("meta", "wall_time_ms", format_ms(report.wall_time_ms));
  return out;
}

RunReport report_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid report JSON: ") + e.what());
  }
  try {
    RunReport r;
    r.command = doc.at("command").get<std::string>();
    if (!doc.at("seed").is_null()) r.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& [k, v] : doc.at("parameters").items()) r.parameters.emplace_back(k, v.get<std::string>());
    r.results = doc.at("results");
    for (const auto& c : doc.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                          c.at("detail").get<std::string>()});
    }
    r.wall_time_ms = doc.at("wall_time_ms").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

Json to_json_value(const BitVec& v) { return v.to_string(); }

Json to_json_value(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& row : s.basis().row_data()) basis.push_back(row.to_string());
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"codim", s.codim()}, {"basis", basis}};
}

Json to_json_value(const Dyadic& d) {
  return {{"value", d.to_string()}, {"numerator", d.numerator()}, {"exponent", d.exponent()}};
}

Json to_json_value(const RegularityResult& r) {
  Json kept = Json::array();
  for (std::size_t i : r.kept) kept.push_back(i + 1);
  Json expressions = Json::array();
  for (const auto& e : r.expressions) expressions.push_back(e.to_string());
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"dropped", s.dropped + 1},
                     {"combination", s.combination.to_string()},
                     {"combination_rank", s.combination_rank},
                     {"codim_after", s.codim_after}});
  }
  return {{"input_count", r.input_count},
          {"min_rank_target", r.min_rank_target},
          {"rank_hypothesis_met", r.rank_hypothesis_met},
          {"independent_count", r.independent_forms.size()},
          {"kept", kept},
          {"subspace", to_json_value(r.subspace)},
          {"expressions", expressions},
          {"steps", steps}};
}

Json to_json_value(const RegularityAudit& a) {
  return {{"count_ok", a.count_ok},
          {"codim_ok", a.codim_ok},
          {"combinations_ok", a.combinations_ok},
          {"expressions_ok", a.expressions_ok},
          {"min_combination_rank", a.min_combination_rank}};
}

Json to_json_value(const CountingReport& c) {
  Json counts = Json::object();
  for (std::size_t v = 0; v < c.value_counts.size(); ++v) {
    counts[BitVec::from_uint(c.r, v).to_string()] = c.value_counts[v];
  }
  return {{"r", c.r},
          {"d", c.d},
          {"coset_size", c.coset_size},
          {"value_counts", counts},
          {"min_count", c.min_count},
          {"epsilon", c.epsilon},
          {"epsilon_achieved", c.epsilon_achieved},
          {"surjective", c.surjective},
          {"conclusion_holds", c.conclusion_holds},
          {"min_rank", c.min_rank},
          {"threshold", counting_threshold(c.r, c.d, c.epsilon)},
          {"hypothesis_holds", c.hypothesis_holds}};
}

Json to_json_value(const PrescribedPairsResult& p) {
  Json thresholds = Json::array();
  for (const auto& t : p.thresholds) thresholds.push_back({{"name", t.name}, {"value", t.value}, {"met", t.met}});
  return {{"matching", p.matching},
          {"x", p.quadruple.x.to_string()},
          {"y", p.quadruple.y.to_string()},
          {"z", p.quadruple.z.to_string()},
          {"w", p.quadruple.w.to_string()},
          {"min_rank", p.min_rank},
          {"thresholds", thresholds},
          {"samples", p.samples},
          {"restarts", p.restarts}};
}

Json to_json_value(const VSpaceElement& v) {
  return Json::array({v.lambda[0] ? 1 : 0, v.lambda[1] ? 1 : 0, v.lambda[2] ? 1 : 0});
}

}  // namespace f2forms
