#include <gtest/gtest.h>

#include "verify/report.hpp"
#include "verify/suites.hpp"

namespace ncs::verify {
namespace {

TEST(Report, SuiteNames) {
  EXPECT_EQ(canonical_suite("detθ"), "det");
  EXPECT_EQ(canonical_suite("det-theta"), "det");
  EXPECT_EQ(canonical_suite("chern"), "chern");
  EXPECT_TRUE(is_suite("all"));
  EXPECT_TRUE(is_suite("det-theta"));
  EXPECT_FALSE(is_suite("nonsense"));
  for (const auto& s : suite_names()) EXPECT_TRUE(is_suite(s)) << s;
}

TEST(Report, SchemaFields) {
  SuiteOptions opt;
  opt.seed = 3;
  const auto checks = run_suite("relations", opt);
  ASSERT_FALSE(checks.empty());
  const auto j = make_report("relations", opt, checks, false);
  for (const char* k : {"tool", "version", "command", "suite", "seed", "inputs", "checks", "summary"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["tool"], kToolName);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_TRUE(j["inputs"]["u"].is_null());
  EXPECT_EQ(j["inputs"]["angle_units"], "pi");
  EXPECT_EQ(j["summary"]["total"], checks.size());
  EXPECT_EQ(j["summary"]["passed"].get<std::size_t>() + j["summary"]["failed"].get<std::size_t>(), checks.size());
  for (const auto& c : j["checks"]) {
    for (const char* k : {"suite", "name", "claim", "expected", "got", "pass"}) EXPECT_TRUE(c.contains(k)) << k;
    EXPECT_FALSE(c.contains("seconds"));
  }
  const auto t = make_report("relations", opt, checks, true);
  EXPECT_TRUE(t["checks"][0].contains("seconds"));
}

TEST(Report, DeterministicInSeed) {
  SuiteOptions opt;
  opt.seed = 11;
  const auto a = make_report("chern", opt, run_suite("chern", opt), false).dump();
  const auto b = make_report("chern", opt, run_suite("chern", opt), false).dump();
  EXPECT_EQ(a, b);
}

TEST(Report, ExplicitPoint) {
  SuiteOptions opt;
  opt.u = AngleTriple{{PiAngle(1, 3), PiAngle(1, 4), PiAngle(1, 5)}};
  const auto checks = run_suite("chern", opt);
  EXPECT_TRUE(all_pass(checks));
  EXPECT_EQ(make_report("chern", opt, checks, false)["inputs"]["u"], format_triple(*opt.u));
}

TEST(Report, GenericPointsAvoidDegenerateLoci) {
  const auto pts = generic_rational_points(20, 5, {5, 7, 8, 9, 12});
  EXPECT_EQ(pts.size(), 20u);
  for (const auto& u : pts) EXPECT_NO_THROW(make_a_u(u)) << format_triple(u);
}

}  // namespace
}  // namespace ncs::verify
