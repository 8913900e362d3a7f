#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncsphere/rewrite.hpp"

namespace ncs {
namespace {

using testgen::Gen;

const AngleTriple kU{{PiAngle(1, 3), PiAngle(1, 4), PiAngle(1, 5)}};
const AngleTriple kU12{{PiAngle(5, 12), PiAngle(1, 4), PiAngle(1, 12)}};
const AngleTriple kE{{PiAngle(0, 1), PiAngle(0, 1), PiAngle(0, 1)}};

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Plane, PhaseCommutation) {
  const AngleMatrix th = angles2(PiAngle(1, 3));
  const Presentation P = make_r2n_theta(2, th);
  EXPECT_EQ(P.normal_form_word(make_word({1, 0})), P.word(make_word({0, 1}), phase(th[1][0])));
}

TEST(Plane, CommutativeLimit) {
  const Presentation P = make_r2n_theta(2, zero_angles(2));
  const NCPoly c = P.word(make_word({2, 0})) - P.word(make_word({0, 2}));
  EXPECT_TRUE(P.reduces_to_zero(c));
}

TEST(Au, ClassicalPointGivesPlainCommutations) {
  const Presentation A = make_a_u(kE, 4);
  ASSERT_EQ(A.rules().size(), 6u);
  for (const auto& r : A.rules()) {
    ASSERT_EQ(r.lhs.size(), 2u);
    ASSERT_EQ(r.rhs.size(), 1u);
    Word sorted = r.lhs;
    std::swap(sorted[0], sorted[1]);
    EXPECT_EQ(r.rhs.coeff(sorted), Scalar(1));
  }
}

TEST(Au, DegenerateAnglesThrow) {
  const AngleTriple bad{{PiAngle(1, 2), PiAngle(1, 4), PiAngle(1, 5)}};
  EXPECT_THROW(make_a_u(bad, 4), SingularElimination);
  const AngleTriple bad2{{PiAngle(1, 3), PiAngle(3, 4), PiAngle(1, 4)}};  // cos(phi2 - phi3) = 0
  EXPECT_THROW(make_a_u(bad2, 4), SingularElimination);
}

TEST(Spheres, RadiusRelationReducesToOne) {
  const Presentation S3 = make_s3_u(kU12);
  NCPoly r(S3.gens());
  for (int m = 0; m < 4; ++m) r += S3.word(make_word({m, m}));
  EXPECT_EQ(S3.normal_form(r), S3.one());

  const int n = 2;
  const AngleMatrix th = angles2(PiAngle(1, 3));
  const Presentation S4 = make_even_sphere(n, th);
  NCPoly s = S4.word(make_word({2 * n, 2 * n}));
  for (int m = 0; m < n; ++m) s += S4.word(make_word({m, n + m}));
  EXPECT_EQ(S4.normal_form(s), S4.one());
}

TEST(Spheres, TrivialOverlapAtThetaZero) {
  const Presentation S2 = make_even_sphere(1, zero_angles(1));
  const int x = 2;
  const NCPoly a = S2.normal_form(S2.word(make_word({x, x})) * S2.gen(x));
  const NCPoly b = S2.normal_form(S2.gen(x) * S2.word(make_word({x, x})));
  EXPECT_EQ(a, b);
}

TEST(NormalForm, UnitIsFixed) {
  const Presentation A = make_a_u(kU12, 4);
  EXPECT_EQ(A.normal_form(A.one()), A.one());
}

TEST(NormalForm, TorusPhase) {
  const AngleMatrix th = angles2(PiAngle(2, 5));
  const Presentation T = make_torus(2, th);
  const int U1 = T.index("U1"), U2 = T.index("U2");
  EXPECT_EQ(T.normal_form_word(make_word({U2, U1})), T.word(make_word({U1, U2}), phase(th[1][0])));
  EXPECT_EQ(T.normal_form_word(make_word({U1, T.index("Ub1")})), T.one());
}

TEST(NormalForm, BudgetExhaustion) {
  const Presentation A = make_a_u(kU12, 4);
  EXPECT_THROW(A.normal_form_word(make_word({3, 2, 1, 0, 3, 2, 1}), 2), BudgetExceeded);
}

TEST(Confluence, PlaneAnyTheta) {
  Gen r(31);
  for (int i = 0; i < 5; ++i) {
    const int n = static_cast<int>(r.integer(2, 3));
    EXPECT_TRUE(check_confluence(make_r2n_theta(n, r.theta(n, {3, 4, 5, 6, 7})), 3).empty());
  }
}

TEST(Confluence, AuAtThirdQuarterFifth) { EXPECT_TRUE(check_confluence(make_a_u(kU), 3).empty()); }

TEST(Confluence, CorruptedRulesAreDetected) {
  Presentation P = make_r2n_theta(2, angles2(PiAngle(1, 3)));
  // Any choice of phases stays confluent, so the corruption adds a monomial:
  // with z2 z1 -> z1 z2 + z1 z1 the overlap zb2 z2 z1 differs by (mu - mu^2) z1 z1 zb2.
  for (std::size_t i = 0; i < P.rules().size(); ++i)
    if (P.rules()[i].lhs == make_word({1, 0}))
      P.replace_rhs(i, P.word(make_word({0, 1})) + P.word(make_word({0, 0})));
  const auto bad = check_confluence(P, 3);
  ASSERT_FALSE(bad.empty());
  EXPECT_TRUE(std::any_of(bad.begin(), bad.end(), [](const Overlap& o) { return o.word == make_word({3, 1, 0}); }));
}

TEST(Center, QuadraticCentralElements) {
  const Presentation A = make_a_u(kU12, 4);
  NCPoly s(A.gens());
  for (int m = 0; m < 4; ++m) {
    const NCPoly z = A.gen(m, m == 0 ? Scalar(1) : phase(kU12.phi[m - 1]));
    s += star(z) * z;
  }
  EXPECT_TRUE(is_central(s, A));
  NCPoly c(A.gens());
  for (int k = 1; k <= 3; ++k) {
    const int l = k % 3 + 1, m = (k + 1) % 3 + 1;
    const PiAngle pk = kU12.phi[k - 1];
    c += A.word(make_word({k, k}), cos_pi(pk - kU12.phi[l - 1] - kU12.phi[m - 1]) * cos_pi(pk) * sin_pi(pk));
  }
  EXPECT_TRUE(is_central(c, A));
  EXPECT_FALSE(is_central(A.gen(1), A));
}

TEST(GradedDimension, Examples) {
  const Presentation A = make_a_u(kU12, 4);
  EXPECT_EQ(graded_dimension(A, 0), 1u);
  EXPECT_EQ(graded_dimension(A, 3), 20u);
  EXPECT_EQ(graded_dimension(make_r2n_theta(2, angles2(PiAngle(1, 3))), 2), 10u);
  EXPECT_EQ(graded_dimension(make_torus(2, angles2(PiAngle(1, 3))), 0), 1u);
}

TEST(GradedDimension, AuMatchesPolynomialRing) {
  for (const auto& u : {kU12, AngleTriple{{PiAngle(1, 6), PiAngle(1, 3), PiAngle(7, 12)}}}) {
    const Presentation A = make_a_u(u, 6);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(graded_dimension(A, d), binom(d + 3, 3)) << "d = " << d;
  }
}

TEST(GradedDimension, SklyaninMatchesPolynomialRing) {
  const Presentation S = make_sklyanin(sklyanin_j(kU12), 4);
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(graded_dimension(S, d), binom(d + 3, 3)) << "d = " << d;
}

// Properties over the built-in presentations.
std::vector<Presentation> builtins() {
  const AngleMatrix th2 = angles2(PiAngle(1, 3));
  AngleMatrix th3 = zero_angles(3);
  th3[0][1] = PiAngle(1, 4);
  th3[1][0] = PiAngle(-1, 4);
  th3[1][2] = PiAngle(2, 3);
  th3[2][1] = PiAngle(-2, 3);
  return {make_a_u(kU12, 4),          make_r2n_theta(2, th2),     make_even_sphere(2, th2), make_odd_sphere(2, th2),
          make_torus(3, th3),         make_r2n_theta(3, th3, true), make_sklyanin(sklyanin_j(kU12)), make_s3_u(kU12)};
}

TEST(RewriteProperty, RelationsReduceToZero) {
  for (const auto& P : builtins())
    for (const auto& r : P.relations()) EXPECT_TRUE(P.reduces_to_zero(r)) << P.name();
}

TEST(RewriteProperty, StarOfRelationsReducesToZero) {
  for (const auto& P : builtins())
    for (const auto& r : P.relations()) EXPECT_TRUE(P.reduces_to_zero(star(r))) << P.name();
}

// A_u, its sphere and the Sklyanin algebra have no finite completion in this
// ordering; their rules are complete only up to degree 4, so products stay there.
TEST(RewriteProperty, IdempotentAndCompatible) {
  Gen r(32);
  for (const auto& P : builtins()) {
    for (int i = 0; i < 20; ++i) {
      const NCPoly p = r.poly(P.gens(), 4, 2), q = r.poly(P.gens(), 4, 2);
      const NCPoly np = P.normal_form(p);
      EXPECT_EQ(P.normal_form(np), np) << P.name();
      EXPECT_EQ(P.normal_form(p * q), P.normal_form(np * P.normal_form(q))) << P.name();
      for (const auto& [w, c] : np.terms()) EXPECT_TRUE(P.is_normal(w));
    }
  }
}

TEST(Sklyanin, ConstraintHoldsExactly) {
  const auto j = sklyanin_j(kU12);
  EXPECT_TRUE((j[0] + j[1] + j[2] + j[0] * j[1] * j[2]).is_zero());
}

}  // namespace
}  // namespace ncs
