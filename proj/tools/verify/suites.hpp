#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncsphere/rewrite.hpp"

namespace ncs::verify {

struct Check {
  std::string suite;
  std::string name;
  std::string claim;  // what is being verified, in words
  std::string expected;
  std::string got;
  bool pass = false;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<AngleTriple> u;  // overrides the generic sample points where a suite uses A_u
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);
// "detθ" and "det-theta" are accepted for "det".
std::string canonical_suite(const std::string& name);
// Runs one suite, or every suite for "all". Failures are reported as
// checks with pass = false; exceptions thrown by a check become failures.
std::vector<Check> run_suite(const std::string& name, const SuiteOptions& opt);

// Generic points u = (p1/q, p2/q, p3/q) (units of pi): not on any of the
// exceptional loci, J defined and delta != 0. Deterministic in the seed.
std::vector<AngleTriple> generic_rational_points(std::size_t count, std::uint64_t seed,
                                                 const std::vector<long>& denominators = {12});
// Random antisymmetric angle matrix with entries p/q, q in {3, 4, 6}.
AngleMatrix random_theta(int n, std::uint64_t seed);

std::string format_triple(const AngleTriple& u);

}  // namespace ncs::verify
