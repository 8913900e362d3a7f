// One line per acceptance criterion. A criterion passes when every check
// assigned to it passes and the suites it draws on finish inside its budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "verify/suites.hpp"

namespace {

using ncs::verify::Check;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  std::function<bool(const Check&)> owns;
  double budget_seconds;
};

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::function<bool(const Check&)> in_suite(const std::string& suite) {
  return [suite](const Check& c) { return c.suite == suite; };
}

std::function<bool(const Check&)> named(const std::string& suite, std::vector<std::string> prefixes) {
  return [suite, prefixes](const Check& c) {
    if (c.suite != suite) return false;
    for (const auto& p : prefixes)
      if (starts(c.name, p)) return true;
    return false;
  };
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "relations reduce to zero and overlaps resolve", {"relations", "confluence"},
       [](const Check& c) { return c.suite == "relations" || (c.suite == "confluence" && !starts(c.name, "PBW")); },
       30},
      {2, "PBW graded dimensions", {"confluence"}, named("confluence", {"PBW"}), 30},
      {3, "ch_1/2 vanishes, ch_3/2 matches the displayed cycle, vanishes at critical points", {"chern"},
       named("chern", {"ch_1/2", "ch_3/2"}), 60},
      {4, "ch_3/2 and B ch_3/2 are Hochschild cycles", {"chern"}, named("chern", {"b ch_3/2", "b B ch_3/2"}), 60},
      {5, "Clifford projection and unitary: idempotent, lower Chern classes vanish", {"clifford"},
       named("clifford", {"representation", "projection", "even chern", "unitary", "odd chern"}), 120},
      {6, "centrality, gamma square and relation families", {"clifford"},
       named("clifford", {"anticommutation", "symbol relations", "center", "gamma square"}), 60},
      {7, "Sklyanin substitution and parameter constraint", {"moduli-flow"},
       named("moduli-flow", {"J constraint", "s system", "Sklyanin form"}), 10},
      {8, "scaling flow: critical set, conserved invariants, classification", {"moduli-flow", "classify"},
       [](const Check& c) {
         if (c.suite == "classify") return true;
         return c.suite == "moduli-flow" &&
                !(starts(c.name, "J constraint") || starts(c.name, "s system") || starts(c.name, "Sklyanin form"));
       },
       10},
      {9, "quantum group: Hopf structure and det_theta", {"det"}, in_suite("det"), 120},
      {10, "splitting homomorphism", {"splitting"}, in_suite("splitting"), 60},
      {11, "free Grassmannian: mu coefficients and [mu, mu*]", {"grassmann"}, in_suite("grassmann"), 60},
      {12, "self-duality on the 4-sphere", {"selfduality"}, in_suite("selfduality"), 10},
      {13, "differential calculus", {"forms"}, in_suite("forms"), 30},
  };

  ncs::verify::SuiteOptions opt;
  opt.seed = 1;
  std::map<std::string, std::vector<Check>> checks;
  std::map<std::string, double> wall;
  for (const auto& name : ncs::verify::suite_names()) {
    const auto t0 = std::chrono::steady_clock::now();
    checks[name] = ncs::verify::run_suite(name, opt);
    wall[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  int failed = 0;
  for (const auto& cr : criteria) {
    double seconds = 0;
    std::size_t total = 0, passed = 0;
    std::vector<const Check*> bad;
    for (const auto& s : cr.suites) {
      seconds += wall[s];
      for (const auto& c : checks[s]) {
        if (!cr.owns(c)) continue;
        ++total;
        if (c.pass)
          ++passed;
        else
          bad.push_back(&c);
      }
    }
    const bool in_time = seconds < cr.budget_seconds;
    const bool ok = total > 0 && passed == total && in_time;
    failed += !ok;
    std::printf("%s criterion %2d: %s (%zu/%zu checks, %.2fs < %.0fs%s)\n", ok ? "PASS" : "FAIL", cr.id,
                cr.title.c_str(), passed, total, seconds, cr.budget_seconds, in_time ? "" : " EXCEEDED");
    for (const Check* c : bad)
      std::printf("    failed: %s / %s: expected %s, got %s\n", c->suite.c_str(), c->name.c_str(), c->expected.c_str(),
                  c->got.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
