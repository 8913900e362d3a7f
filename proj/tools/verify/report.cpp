#include "report.hpp"

#include <algorithm>

namespace ncs::verify {

nlohmann::ordered_json make_report(const std::string& suite, const SuiteOptions& opt,
                                   const std::vector<Check>& checks, bool timing) {
  using nlohmann::ordered_json;
  ordered_json r;
  r["tool"] = kToolName;
  r["version"] = kToolVersion;
  r["command"] = "verify";
  r["suite"] = suite;
  r["seed"] = opt.seed;
  ordered_json in;
  in["u"] = opt.u ? ordered_json(format_triple(*opt.u)) : ordered_json(nullptr);
  in["angle_units"] = "pi";
  r["inputs"] = in;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["claim"] = c.claim;
    j["expected"] = c.expected;
    j["got"] = c.got;
    j["pass"] = c.pass;
    if (timing) j["seconds"] = c.seconds;
    arr.push_back(std::move(j));
  }
  r["checks"] = std::move(arr);
  const auto passed = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
  ordered_json s;
  s["total"] = checks.size();
  s["passed"] = passed;
  s["failed"] = checks.size() - passed;
  s["pass"] = passed == checks.size() && !checks.empty();
  r["summary"] = s;
  return r;
}

bool all_pass(const std::vector<Check>& checks) {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

}  // namespace ncs::verify
