#include <gtest/gtest.h>

#include <algorithm>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "ncsphere/moduli.hpp"

namespace ncs {
namespace {

using testgen::Gen;
constexpr double kPi = std::numbers::pi;
constexpr double kH = kPi / 2;

double max_abs(const Angles3& z) { return std::max({std::abs(z[0]), std::abs(z[1]), std::abs(z[2])}); }

Angles3 random_generic(Gen& r) {
  for (;;) {
    const Angles3 u{r.real(0, kPi), r.real(0, kPi), r.real(0, kPi)};
    try {
      if (classify(u, 1e-3) == CaseLabel::GENERIC && std::abs(delta_of(u)) > 1e-3) {
        (void)j_of(u);
        return u;
      }
    } catch (const std::exception&) {
    }
  }
}

TEST(ZField, ClosedForm) {
  const Angles3 u{kPi / 3, kPi / 4, kPi / 5};
  const Angles3 z = vector_field_Z(u);
  for (int k = 0; k < 3; ++k) {
    const int l = (k + 1) % 3, m = (k + 2) % 3;
    EXPECT_NEAR(z[k], std::sin(2 * u[k]) * std::sin(u[l] + u[m] - u[k]), 1e-15);
  }
  EXPECT_GT(max_abs(z), 0.1);
}

TEST(ZField, CriticalSet) {
  EXPECT_LE(max_abs(vector_field_Z({kH, kH, kH})), 1e-14);
  EXPECT_LE(max_abs(vector_field_Z({0.7, 0.7, 0})), 1e-14);
  EXPECT_LE(max_abs(vector_field_Z({kH + 0.4, kH, 0.4})), 1e-14);
  for (const auto& v : weyl_orbit({kH, kH, kH})) EXPECT_LE(max_abs(vector_field_Z(v)), 1e-14);
}

TEST(ZFieldProperty, NonzeroAtGenericPoints) {
  Gen r(91);
  for (int i = 0; i < 100; ++i) EXPECT_GT(max_abs(vector_field_Z(random_generic(r))), 0.0);
}

TEST(ZFieldProperty, Equivariance) {
  Gen r(92);
  const auto D = weyl_w_jacobian();
  for (int i = 0; i < 50; ++i) {
    const Angles3 u{r.real(0, kPi), r.real(0, kPi), r.real(0, kPi)};
    const Angles3 z = vector_field_Z(u), zw = vector_field_Z(weyl_w(u));
    for (int a = 0; a < 3; ++a) {
      double push = 0;
      for (int b = 0; b < 3; ++b) push += D[a][b] * z[b];
      EXPECT_NEAR(push, zw[a], 1e-10);
    }
    for (const std::array<int, 3>& p : {std::array<int, 3>{1, 0, 2}, {2, 0, 1}, {0, 2, 1}}) {
      const Angles3 zp = vector_field_Z(permute(u, p)), pz = permute(z, p);
      for (int a = 0; a < 3; ++a) EXPECT_NEAR(zp[a], pz[a], 1e-12);
    }
  }
}

TEST(Flow, FixesCriticalPoint) {
  const Angles3 c{0.7, 0.7, 0.0};
  const Angles3 v = flow(c, 3.0);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(v[k], c[k], 1e-12);
}

TEST(Flow, InvariantsAreConserved) {
  Gen r(93);
  for (int i = 0; i < 3; ++i) {
    // some orbits run into the cos = 0 locus where the closed forms are undefined; skip those starts
    std::vector<FlowSample> path;
    do {
      path = flow_path(random_generic(r), 10.0, 1e-3, 50);
    } while (!std::all_of(path.begin(), path.end(), [](const FlowSample& s) { return s.invariants_defined; }));
    const auto& s0 = path.front();
    ASSERT_TRUE(s0.invariants_defined);
    // J blows up near the poles of tan, so the absolute tolerance is taken at unit scale
    const auto tol = [](double j) { return 1e-8 * std::max(1.0, std::abs(j)); };
    for (const auto& s : path) {
      ASSERT_TRUE(s.invariants_defined) << "t = " << s.t;
      EXPECT_NEAR(s.J.j12, s0.J.j12, tol(s0.J.j12));
      EXPECT_NEAR(s.J.j23, s0.J.j23, tol(s0.J.j23));
      EXPECT_NEAR(s.J.j31, s0.J.j31, tol(s0.J.j31));
      EXPECT_LE(std::abs(s.lambda - s0.lambda), 1e-6 * std::abs(s0.lambda));
      EXPECT_LE(std::abs(s.j - s0.j), 1e-6 * std::abs(s0.j));
    }
  }
}

TEST(Flow, PathEndpointMatchesFlow) {
  const Angles3 u{kPi / 3, kPi / 4, kPi / 5};
  const auto path = flow_path(u, 1.0, 1e-3, 1000);
  const Angles3 v = flow(u, 1.0);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(path.back().u[k], v[k], 1e-14);
}

TEST(JInvariants, ClosedFormAndConstraint) {
  Gen r(94);
  for (int i = 0; i < 100; ++i) {
    const Angles3 u = random_generic(r);
    const JTriple J = j_of(u);
    EXPECT_NEAR(J.j12, -std::tan(u[0] - u[1]) * std::tan(u[2]), 1e-9 * (1 + std::abs(J.j12)));
    EXPECT_NEAR(J.j23, -std::tan(u[1] - u[2]) * std::tan(u[0]), 1e-9 * (1 + std::abs(J.j23)));
    EXPECT_NEAR(J.j31, -std::tan(u[2] - u[0]) * std::tan(u[1]), 1e-9 * (1 + std::abs(J.j31)));
    EXPECT_LE(std::abs(j_constraint_residual(J)), 1e-12 * (1 + std::abs(J.j12 * J.j23 * J.j31)));
  }
}

TEST(JInvariants, SCoefficients) {
  Gen r(95);
  for (int i = 0; i < 100; ++i) {
    const Angles3 u = random_generic(r);
    const auto s = s_coeffs(u);
    EXPECT_LE(std::abs(s[0] * s[1] * s[2] * s[3] + delta_of(u)), 1e-12);
    for (double x : s_system_residuals(u, s)) EXPECT_LE(x, 1e-12);
    const auto res = sklyanin_residual(u);
    EXPECT_LE(res.anticommutator, 1e-10);
    EXPECT_LE(res.commutator, 1e-10);
  }
}

TEST(JInvariants, DegenerateLocus) {
  EXPECT_THROW(s_coeffs({0.0, 0.3, 0.9}), OnDegenerateLocus);           // sin phi_1 = 0
  EXPECT_THROW(s_coeffs({0.4, 0.4 + kH, 0.9}), OnDegenerateLocus);      // cos(phi_1 - phi_2) = 0
  EXPECT_THROW(j_of({kH, 0.3, 0.9}), OnDegenerateLocus);
}

TEST(JInvariants, ModularValues) {
  for (double l : {-1.0, 2.0, 0.5}) EXPECT_NEAR(j_from_lambda(l), 1728.0, 1e-9);
  Gen r(96);
  for (int i = 0; i < 50; ++i) {
    const double l = r.real(-5, 5);
    if (std::abs(l) < 0.05 || std::abs(l - 1) < 0.05) continue;
    const double j = j_from_lambda(l);
    // the six cross-ratios give the same curve
    for (double m : {1 - l, 1 / l, 1 / (1 - l), l / (l - 1), (l - 1) / l})
      EXPECT_NEAR(j_from_lambda(m), j, 1e-9 * std::abs(j));
  }
  EXPECT_THROW(j_from_lambda(1.0), OnDegenerateLocus);
}

TEST(Weyl, GroupStructure) {
  Gen r(97);
  for (int i = 0; i < 30; ++i) {
    const Angles3 u = random_generic(r);
    EXPECT_TRUE(same_mod_pi(weyl_w(weyl_w(u)), u, 1e-12));
    EXPECT_EQ(weyl_orbit(u).size(), 24u);
    EXPECT_EQ(k_orbit(u).size(), 4u);
    const double j = j_invariant(u);
    for (const auto& v : weyl_orbit(u)) EXPECT_NEAR(j_invariant(v), j, 1e-6 * std::abs(j));
  }
}

TEST(Weyl, ReduceToCell) {
  const Angles3 v = reduce_to_cell({kPi / 5, 4 * kPi / 5, kPi / 2});
  EXPECT_LT(v[0], kPi);
  EXPECT_GE(v[0], v[1]);
  EXPECT_GE(v[1], v[2]);
  EXPECT_GE(v[2], 0.0);
}

TEST(Classify, Probes) {
  EXPECT_EQ(classify({kH, kH, kH}), CaseLabel::P_ORBIT);
  EXPECT_EQ(classify({kH, kH, 0}), CaseLabel::P_PRIME_ORBIT);
  EXPECT_EQ(classify({0, 0, 0}), CaseLabel::O_ORBIT);
  EXPECT_EQ(classify({0.6, 0.6, 0}), CaseLabel::C_PLUS);
  EXPECT_EQ(classify({kH + 0.3, kH, 0.3}), CaseLabel::C_MINUS);
  EXPECT_EQ(classify({kH, 0.4, 0.4}), CaseLabel::L);
  EXPECT_EQ(classify({kH, kH, 0.4}), CaseLabel::L_PRIME);
  EXPECT_EQ(classify({kH, 0.3, 0.8}), CaseLabel::F2);
  EXPECT_EQ(classify({0.9, 0.4, 0.4}), CaseLabel::F1);
  EXPECT_EQ(classify({kPi / 3, kPi / 4, kPi / 5}), CaseLabel::GENERIC);
}

TEST(ClassifyProperty, WeylInvariant) {
  Gen r(98);
  for (int i = 0; i < 40; ++i) {
    // mix generic points with points snapped to multiples of pi/8
    Angles3 u{r.real(0, kPi), r.real(0, kPi), r.real(0, kPi)};
    if (i % 2) u = {kPi / 8 * r.integer(0, 7), kPi / 8 * r.integer(0, 7), kPi / 8 * r.integer(0, 7)};
    CaseLabel c;
    try {
      c = classify(u);
    } catch (const AmbiguousWithinTolerance&) {
      continue;
    }
    for (const auto& v : weyl_orbit(u)) EXPECT_EQ(classify(v), c);
    EXPECT_EQ(classify(reduce_to_cell(u)), c);
  }
}

}  // namespace
}  // namespace ncs
