#include "extsq/suite/report.hpp"

#include <algorithm>
#include <sstream>

namespace extsq::suite {

void RunReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::vector<CheckResult> sorted(std::vector<CheckResult> v) {
  std::stable_sort(v.begin(), v.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return v;
}

}  // namespace

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["seed"] = seed;
  j["checks"] = nlohmann::json::array();
  for (auto& c : sorted(checks))
    j["checks"].push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  if (!result.is_null()) j["result"] = result;
  j["passed"] = passed();
  return j;
}

std::string RunReport::text() const {
  std::ostringstream out;
  out << command << " (seed " << seed << ")\n";
  if (!result.is_null()) {
    if (result.is_object()) {
      for (auto& [k, v] : result.items()) out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      out << "  " << result.dump() << "\n";
    }
  }
  auto cs = sorted(checks);
  int ok = 0;
  for (auto& c : cs) {
    ok += c.passed;
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << ok << "/" << cs.size() << " checks passed";
  if (wall_time_ms) out << " in " << *wall_time_ms << " ms";
  out << "\n";
  return out.str();
}

}  // namespace extsq::suite
