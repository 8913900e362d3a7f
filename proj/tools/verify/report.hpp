#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "suites.hpp"

namespace ncs::verify {

inline constexpr const char* kToolName = "ncsphere";
inline constexpr const char* kToolVersion = "0.1.0";

// Field order is fixed: two runs with the same inputs give identical bytes
// unless timing is requested.
nlohmann::ordered_json make_report(const std::string& suite, const SuiteOptions& opt,
                                   const std::vector<Check>& checks, bool timing);

bool all_pass(const std::vector<Check>& checks);

}  // namespace ncs::verify
