#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncsphere/clifford.hpp"
#include "ncsphere/homology.hpp"

namespace ncs {
namespace {

using testgen::Gen;

AngleMatrix negate(AngleMatrix t) {
  for (auto& row : t)
    for (auto& a : row) a = -a;
  return t;
}

// Scalar part of p at the point where only the generator `keep` is nonzero
// and equal to 1.
Scalar evaluate_at_axis(const NCPoly& p, int keep) {
  Scalar s;
  for (const auto& [w, c] : p.terms()) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size(); ++i) ok = ok && letter(w, i) == keep;
    if (ok) s += c;
  }
  return s;
}

TEST(CliffordProperty, RepresentationRelations) {
  Gen r(51);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < 10; ++i) EXPECT_TRUE(check_rep_relations(build_rep(n, r.theta(n, {3, 4, 5, 6, 8}))));
}

TEST(Clifford, ClassicalLimit) {
  const int n = 2;
  const CliffordRep rep = build_rep(n, zero_angles(n));
  const std::size_t d = rep.gamma.rows();
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      const ScalarMatrix ac = rep.GammaStar[mu] * rep.Gamma[nu] + rep.Gamma[nu] * rep.GammaStar[mu];
      EXPECT_EQ(ac, mu == nu ? ScalarMatrix::identity(d) : ScalarMatrix(d, d));
      EXPECT_TRUE((rep.Gamma[mu] * rep.Gamma[nu] + rep.Gamma[nu] * rep.Gamma[mu]).is_zero());
    }
}

TEST(Clifford, CommutantIsScalar) {
  Gen r(52);
  for (int n = 1; n <= 2; ++n)
    for (int i = 0; i < 3; ++i) EXPECT_EQ(commutant_dimension(build_rep(n, r.theta(n))), 1u);
}

TEST(Clifford, ProjectionIsHermitianIdempotent) {
  for (int sign : {1, -1}) {
    const AngleMatrix th = angles2(PiAngle(1, 3));
    const Presentation S = make_even_sphere(2, th);
    const MatrixPoly e = projection_e_theta(S, 2, th, sign);
    EXPECT_TRUE(reduce_matrix(matrix_mul(e, e, S) - e, S).is_zero());
    EXPECT_TRUE(reduce_matrix(star(e) - e, S).is_zero());
    NCPoly tr(S.gens());
    for (std::size_t a = 0; a < e.size(); ++a) tr += e(a, a);
    EXPECT_EQ(S.normal_form(tr), S.one(Scalar(2)));
    EXPECT_TRUE(reduce_chain(ch_even(e, 1, &S), &S).is_zero());
  }
}

TEST(Clifford, ProjectionAtClassicalPoint) {
  const int n = 2;
  const AngleMatrix th = angles2(PiAngle(1, 3));
  const Presentation S = make_even_sphere(n, th);
  const MatrixPoly e = projection_e_theta(S, n, th);
  const CliffordRep rep = build_rep(n, th);
  const std::size_t d = rep.gamma.rows();
  ScalarMatrix at(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) at(a, b) = evaluate_at_axis(e(a, b), 2 * n);
  EXPECT_EQ(at, (ScalarMatrix::identity(d) + rep.gamma).scaled(Scalar(Rational(1, 2))));
  EXPECT_EQ(matrix_rank(at), d / 2);
}

TEST(Clifford, OddUnitary) {
  Gen r(53);
  for (int n : {2, 3}) {
    const AngleMatrix th = r.theta(n);
    const Presentation O = make_odd_sphere(n, th);
    const MatrixPoly U = unitary_U_theta(O, n, th);
    const MatrixPoly I = MatrixPoly::identity(O.gens(), U.size());
    EXPECT_TRUE((matrix_mul(U, star(U), O) - I).is_zero());
    EXPECT_TRUE((matrix_mul(star(U), U, O) - I).is_zero());
    for (int m = 1; m < n; ++m) EXPECT_TRUE(reduce_chain(ch_odd(U, m - 1, &O), &O).is_zero());
  }
}

TEST(Clifford, TwistedGammaSquares) {
  const AngleTriple u{{PiAngle(1, 3), PiAngle(1, 4), PiAngle(1, 5)}};
  const AngleTriple e{{PiAngle(0, 1), PiAngle(0, 1), PiAngle(0, 1)}};
  const Presentation A = make_a_u(u, 4);
  EXPECT_TRUE(lemma3_check(u, A));
  EXPECT_FALSE(lemma3_check(u, A, false));
  EXPECT_TRUE(lemma3_check(e, make_a_u(e, 4)));
  const auto g = twisted_gammas(u);
  for (const auto& m : g) EXPECT_EQ(m * m, ScalarMatrix::identity(m.rows()));
  const auto g0 = twisted_gammas(e), eu = euclidean_gammas();
  for (int k = 0; k < 4; ++k) EXPECT_EQ(g0[k], eu[k]);
}

TEST(Clifford, ProjectionOverFourSphereU) {
  const AngleTriple u{{PiAngle(5, 12), PiAngle(1, 4), PiAngle(1, 12)}};
  const Presentation S = make_r5_u(u, true);
  const MatrixPoly e = projection_e_u(u, S);
  EXPECT_TRUE(reduce_matrix(matrix_mul(e, e, S) - e, S).is_zero());
  EXPECT_TRUE(reduce_matrix(star(e) - e, S).is_zero());
}

TEST(Clifford, AnticommutationAndSymbolFamilies) {
  const AngleMatrix th = angles2(PiAngle(1, 3));
  EXPECT_TRUE(lemma5_check(2, th));
  EXPECT_TRUE(symbol_rep_check(2, th));
  EXPECT_TRUE(lemma5_check(2, zero_angles(2)));
  EXPECT_TRUE(symbol_rep_check(2, zero_angles(2)));
}

TEST(Clifford, SwappedPhaseIsRejected) {
  const AngleMatrix th = angles2(PiAngle(1, 3));
  const CliffordRep rep = build_rep(2, negate(th));
  EXPECT_TRUE(check_swapped_relations(rep.Gamma, rep.GammaStar, th));
  // the unswapped representation does not satisfy the swapped family
  const CliffordRep plain = build_rep(2, th);
  EXPECT_FALSE(check_swapped_relations(plain.Gamma, plain.GammaStar, th));
  EXPECT_FALSE(check_swapped_relations(rep.Gamma, rep.GammaStar, angles2(PiAngle(1, 4))));
}

}  // namespace
}  // namespace ncs
