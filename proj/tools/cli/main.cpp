#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncsphere/grassmann.hpp"
#include "ncsphere/moduli.hpp"
#include "ncsphere/parallel.hpp"
#include "verify/report.hpp"
#include "verify/suites.hpp"

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

ncs::AngleTriple parse_exact_triple(const std::string& s) {
  const auto parts = split_commas(s);
  if (parts.size() != 3) throw CLI::ValidationError("--u", "expected three angles p/q,p/q,p/q (units of pi)");
  ncs::AngleTriple u;
  for (int k = 0; k < 3; ++k) u.phi[k] = ncs::parse_pi_angle(parts[k]);
  return u;
}

// Moduli tasks take radians; a token containing '/' is read as a multiple of pi.
ncs::Angles3 parse_real_triple(const std::string& s) {
  const auto parts = split_commas(s);
  if (parts.size() != 3) throw CLI::ValidationError("--u", "expected three angles");
  ncs::Angles3 u{};
  for (int k = 0; k < 3; ++k) {
    if (parts[k].find('/') != std::string::npos)
      u[k] = ncs::parse_pi_angle(parts[k]).radians();
    else
      u[k] = std::stod(parts[k]);
  }
  return u;
}

// Opens path for writing, or returns std::cout for "" and "-".
struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    out = &file;
  }
  std::ostream& operator*() { return *out; }
};

std::string label_or_error(const ncs::Angles3& u) {
  try {
    return ncs::to_string(ncs::classify(u));
  } catch (const ncs::AmbiguousWithinTolerance&) {
    return "AMBIGUOUS";
  }
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& u, bool timing,
               const std::string& out) {
  ncs::verify::SuiteOptions opt;
  opt.seed = seed;
  if (!u.empty()) opt.u = parse_exact_triple(u);
  const std::string name = ncs::verify::canonical_suite(suite);
  const auto checks = ncs::verify::run_suite(name, opt);
  Sink sink(out);
  *sink << ncs::verify::make_report(name, opt, checks, timing).dump(2) << "\n";
  for (const auto& c : checks)
    if (!c.pass) std::cerr << "FAIL " << c.suite << " / " << c.name << ": expected " << c.expected << ", got " << c.got << "\n";
  return ncs::verify::all_pass(checks) ? 0 : 1;
}

int cmd_flow(const std::string& u, double t, double dt, long every, const std::string& csv) {
  const auto path = ncs::flow_path(parse_real_triple(u), t, dt, every);
  Sink sink(csv);
  auto& o = *sink;
  o << "t,phi1,phi2,phi3,J12,J23,J31,j\n" << std::setprecision(17);
  for (const auto& s : path) {
    o << s.t << ',' << s.u[0] << ',' << s.u[1] << ',' << s.u[2] << ',';
    if (s.invariants_defined)
      o << s.J.j12 << ',' << s.J.j23 << ',' << s.J.j31 << ',' << s.j << '\n';
    else
      o << "nan,nan,nan,nan\n";
  }
  return 0;
}

// Grid over the fundamental cell pi > phi1 >= phi2 >= phi3 >= 0 with step pi/k.
int cmd_classify(int k, const std::string& csv) {
  if (k < 1) throw CLI::ValidationError("--grid", "must be positive");
  std::vector<ncs::Angles3> pts;
  const double h = std::numbers::pi / k;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) pts.push_back({a * h, b * h, c * h});
  std::vector<std::string> labels(pts.size());
  ncs::parallel_for(pts.size(), [&](std::size_t i) { labels[i] = label_or_error(pts[i]); });
  Sink sink(csv);
  auto& o = *sink;
  o << "i1,i2,i3,phi1,phi2,phi3,label\n" << std::setprecision(17);
  std::size_t idx = 0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c, ++idx) {
        const auto& p = pts[idx];
        o << a << ',' << b << ',' << c << ',' << p[0] << ',' << p[1] << ',' << p[2] << ',' << labels[idx] << '\n';
      }
  return 0;
}

int cmd_grassmann(const std::string& out) {
  const auto r = ncs::mu_and_commutator();
  ordered_json j;
  j["tool"] = ncs::verify::kToolName;
  j["version"] = ncs::verify::kToolVersion;
  j["command"] = "grassmann";
  j["mu_terms"] = r.mu.size();
  ordered_json coeffs;
  for (const char* w : {"U^3 s2 U s2", "U^3 s1 U s1"}) coeffs[w] = r.mu.coeff(ncs::parse_fp_word(w)).str();
  j["coefficients"] = coeffs;
  j["commutator_terms"] = r.commutator.size();
  const auto witness = ncs::parse_fp_word("U^3 s1 U s3 U^-1 s2 U^-3");
  ordered_json wj;
  wj["word"] = ncs::to_string(witness);
  wj["in_mu_mu_star"] = r.mu_mu_star.coeff(witness).str();
  wj["in_mu_star_mu"] = r.mu_star_mu.coeff(witness).str();
  wj["in_commutator"] = r.commutator.coeff(witness).str();
  j["witness"] = wj;
  j["mu_star_mu_has_positive_u_prefix"] = ncs::has_word_starting_with_positive_u(r.mu_star_mu);
  Sink sink(out);
  *sink << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification driver for noncommutative spherical manifolds"};
  app.set_version_flag("--version", std::string(ncs::verify::kToolVersion));
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  std::string suite = "all", u_exact, out;
  std::uint64_t seed = 1;
  bool timing = false;
  std::string suite_help = "Suite name: all";
  for (const auto& s : ncs::verify::suite_names()) suite_help += ", " + s;
  verify->add_option("--suite", suite, suite_help)
      ->check([](const std::string& s) { return ncs::verify::is_suite(s) ? std::string() : "unknown suite " + s; });
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--u", u_exact, "Angles p/q,p/q,p/q in units of pi, replacing the sampled A_u points");
  verify->add_flag("--timing", timing, "Add per-check wall time to the report");
  verify->add_option("--out", out, "Write the report to a file instead of stdout");

  auto* flow = app.add_subcommand("flow", "Integrate the scaling vector field and emit CSV");
  std::string u_flow, csv;
  double t = 10.0, dt = 1e-3;
  long every = 1;
  flow->add_option("--u", u_flow, "Start point phi1,phi2,phi3 in radians (p/q means p/q pi)")->required();
  flow->add_option("--t", t, "Final time");
  flow->add_option("--dt", dt, "RK4 step")->check(CLI::PositiveNumber);
  flow->add_option("--every", every, "Emit every n-th step")->check(CLI::PositiveNumber);
  flow->add_option("--csv", csv, "Output CSV path (stdout when omitted)");

  auto* classify = app.add_subcommand("classify", "Label a grid over the fundamental cell");
  int grid = 12;
  std::string classify_csv;
  classify->add_option("--grid", grid, "Grid resolution k (step pi/k)");
  classify->add_option("--csv", classify_csv, "Output CSV path (stdout when omitted)");

  auto* grassmann = app.add_subcommand("grassmann", "Free-product computation of mu and [mu, mu*]");
  bool report = false;
  std::string grassmann_out;
  grassmann->add_flag("--report", report, "Print the JSON summary");
  grassmann->add_option("--out", grassmann_out, "Write to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(suite, seed, u_exact, timing, out);
    if (*flow) return cmd_flow(u_flow, t, dt, every, csv);
    if (*classify) return cmd_classify(grid, classify_csv);
    if (*grassmann) return cmd_grassmann(grassmann_out);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
