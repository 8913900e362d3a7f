#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncsphere/splitting.hpp"

namespace ncs {
namespace {

using testgen::Gen;

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(SplittingProperty, PlaneIsMultiplicative) {
  Gen r(81);
  const AngleMatrix th = r.theta(2);
  const Presentation P = make_r2n_theta(2, th);
  const Splitter s = splitter_plane(2, th);
  for (int i = 0; i < 50; ++i) {
    const NCPoly p = P.normal_form(r.poly(P.gens(), 3, 3)), q = P.normal_form(r.poly(P.gens(), 3, 3));
    EXPECT_EQ(st(s, P.normal_form(p * q)), split_mul(s, st(s, p), st(s, q)));
    EXPECT_TRUE(diagonal_invariant(s, st(s, p)));
  }
}

TEST(Splitting, PlaneInjectivity) {
  Gen r(82);
  for (int n : {2, 3}) {
    const AngleMatrix th = r.theta(n);
    const auto ranks = injectivity_ranks(splitter_plane(n, th), make_r2n_theta(n, th), n == 2 ? 5 : 3);
    for (const auto& x : ranks) {
      EXPECT_EQ(x.rank, x.words) << "degree " << x.degree;
      EXPECT_EQ(x.words, binom(x.degree + 2 * n - 1, x.degree));
    }
  }
}

TEST(Splitting, SphereRadiusIsClassical) {
  const AngleMatrix th = angles2(PiAngle(1, 3));
  const Splitter s = splitter_plane(2, th, true);
  const Presentation R = make_r2n_theta(2, th, true);
  NCPoly rad = R.word(make_word({4, 4})) - R.one();
  for (int m = 0; m < 2; ++m) rad += R.word(make_word({m, 2 + m}));
  EXPECT_EQ(st(s, rad), classical_part(s, rad));
  EXPECT_TRUE(split_relations_vanish(splitter_sphere(2, th, true), make_even_sphere(2, th)));
}

TEST(Splitting, DeterminantLandsInClassicalPart) {
  const AngleMatrix th = angles2(PiAngle(1, 3));
  const Bialgebra M = make_m_theta(2, th);
  const Splitter s = splitter_qgroup(2, th);
  EXPECT_TRUE(split_relations_vanish(s, M.pres));
  const NCPoly det = det_theta(M, make_forms(2, th));
  const NCPoly det0 = det_theta(make_m_theta(2, zero_angles(2)), make_forms(2, zero_angles(2)));
  EXPECT_EQ(st(s, det), classical_part(s, det0));
}

TEST(Splitting, ClassicalLimitCommutes) {
  Gen r(83);
  const Presentation P = make_r2n_theta(2, zero_angles(2));
  const Splitter s = splitter_plane(2, zero_angles(2));
  for (int i = 0; i < 20; ++i) {
    const NCPoly p = P.normal_form(r.poly(P.gens(), 2, 2)), q = P.normal_form(r.poly(P.gens(), 2, 2));
    EXPECT_EQ(split_mul(s, st(s, p), st(s, q)), split_mul(s, st(s, q), st(s, p)));
  }
}

TEST(Splitting, TorusPhaseCocycle) {
  Gen r(84);
  const AngleMatrix big = r.theta(3);
  for (int i = 0; i < 30; ++i) {
    std::vector<long> k(3), l(3), m(3);
    for (int j = 0; j < 3; ++j) {
      k[j] = r.integer(-2, 2);
      l[j] = r.integer(-2, 2);
      m[j] = r.integer(-2, 2);
    }
    std::vector<long> kl(3), lm(3);
    for (int j = 0; j < 3; ++j) {
      kl[j] = k[j] + l[j];
      lm[j] = l[j] + m[j];
    }
    // associativity of U^k U^l U^m
    EXPECT_EQ(torus_phase(big, k, l) * torus_phase(big, kl, m), torus_phase(big, l, m) * torus_phase(big, k, lm));
  }
}

TEST(Splitting, FormsAndDifferential) {
  Gen r(85);
  const AngleMatrix th = r.theta(2);
  const FormAlgebra F = make_forms(2, th), F0 = make_forms(2, zero_angles(2));
  const Splitter s = splitter_forms(2, th);
  EXPECT_TRUE(split_relations_vanish(s, F.pres));
  for (int i = 0; i < 30; ++i) {
    const NCPoly w = F.pres.normal_form(r.poly(F.pres.gens(), 2, 3));
    EXPECT_EQ(st(s, differential(F, w)), split_differential(F0, st(s, w)));
  }
}

TEST(Splitting, OddSphere) {
  Gen r(86);
  const AngleMatrix th = r.theta(3);
  const Splitter s = splitter_sphere(3, th, false);
  const Presentation O = make_odd_sphere(3, th);
  EXPECT_TRUE(split_relations_vanish(s, O));
  for (const auto& x : injectivity_ranks(s, O, 3)) EXPECT_EQ(x.rank, x.words);
}

}  // namespace
}  // namespace ncs
