#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "generators.hpp"
#include "ncsphere/clifford.hpp"
#include "ncsphere/homology.hpp"

namespace ncs {
namespace {

using testgen::Gen;

const AngleTriple kU12{{PiAngle(5, 12), PiAngle(1, 4), PiAngle(1, 12)}};

TensorChain random_chain(Gen& r, const Presentation& P, std::size_t arity, int terms) {
  TensorChain c(arity);
  for (int t = 0; t < terms; ++t) {
    WordTuple w;
    for (std::size_t s = 0; s < arity; ++s) w.push_back(r.word(static_cast<int>(P.gens()->size()), 2, s ? 1 : 0));
    c.add_term(w, r.gaussian());
  }
  return reduce_chain(c, &P);
}

TEST(Boundary, ArityTwo) {
  const Presentation A = make_a_u(kU12, 4);
  const NCPoly a = A.gen(1), b = A.gen(2);
  const TensorChain got = boundary_b(TensorChain::tensor({a, b}), A);
  const NCPoly want = A.normal_form(a * b - b * a);
  TensorChain w(1);
  for (const auto& [word, c] : want.terms()) w.add_term({word}, c);
  EXPECT_EQ(got, w);
}

TEST(BoundaryProperty, SquareIsZero) {
  Gen r(41);
  // b^2 multiplies three factors of degree <= 2, so the rules must be complete to degree 6
  const Presentation A = make_a_u(kU12, 6);
  for (std::size_t arity : {3u, 4u}) {
    for (int i = 0; i < 20; ++i) {
      const TensorChain c = random_chain(r, A, arity, 4);
      EXPECT_TRUE(boundary_b(boundary_b(c, A), A).is_zero());
    }
  }
}

TEST(BoundaryProperty, SquareIsZeroOnSphere) {
  Gen r(42);
  const Presentation S = make_even_sphere(2, angles2(PiAngle(1, 3)));
  for (int i = 0; i < 20; ++i) {
    const TensorChain c = random_chain(r, S, 3, 4);
    EXPECT_TRUE(boundary_b(boundary_b(c, S), S).is_zero());
  }
}

TEST(Cyclic, PermutationHasOrderArity) {
  Gen r(43);
  const Presentation A = make_a_u(kU12, 4);
  for (std::size_t arity : {2u, 3u, 4u}) {
    const TensorChain c = random_chain(r, A, arity, 3);
    TensorChain t = c;
    for (std::size_t k = 0; k < arity; ++k) t = cyclic_permutation(t);
    EXPECT_EQ(t, c);
  }
}

TEST(Cyclic, NotCyclicIsRejected) {
  const Presentation A = make_a_u(kU12, 4);
  const TensorChain c = TensorChain::tensor({A.gen(1), A.gen(2)});
  EXPECT_FALSE(is_cyclic(c));
  EXPECT_THROW(operator_B_on_cyclic(c), NotCyclic);
}

// Coefficients of the displayed cycle in doubles: an independent evaluation
// of the same closed form as the exact computation.
std::complex<double> displayed_coefficient(const AngleTriple& u, const WordTuple& w) {
  const double ph[4] = {0.0, u.phi[0].radians(), u.phi[1].radians(), u.phi[2].radians()};
  int idx[4];
  for (int s = 0; s < 4; ++s) {
    if (w[s].size() != 1) return 0.0;
    idx[s] = letter(w[s], 0);
  }
  std::complex<double> c = 0.0;
  int sorted[4] = {idx[0], idx[1], idx[2], idx[3]};
  std::sort(sorted, sorted + 4);
  if (sorted[0] == 0 && sorted[1] == 1 && sorted[2] == 2 && sorted[3] == 3) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inv += idx[i] > idx[j];
    c += -(inv % 2 ? -1.0 : 1.0) * std::cos(ph[idx[0]] - ph[idx[1]] + ph[idx[2]] - ph[idx[3]]);
  }
  if (idx[0] == idx[2] && idx[1] == idx[3])
    c += std::complex<double>(0.0, std::sin(2.0 * (ph[idx[0]] - ph[idx[1]])));
  return c;
}

TEST(ChernOdd, ThreeHalvesMatchesDisplayedCycle) {
  for (const auto& u : {kU12, AngleTriple{{PiAngle(1, 6), PiAngle(1, 3), PiAngle(7, 12)}}}) {
    const Presentation A = make_a_u(u, 4);
    const TensorChain c = reduce_chain(ch_odd(unitary_U_u(u, A.gens()), 1, &A), &A);
    ASSERT_FALSE(c.is_zero());
    // every term is one of the displayed words, with coefficient -4 times the displayed one
    for (const auto& [w, coef] : c.terms()) {
      const auto want = -4.0 * displayed_coefficient(u, w);
      EXPECT_LT(std::abs(embed(coef).value() - want), 1e-12);
    }
    // and every nonzero displayed word occurs
    std::size_t displayed = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cc = 0; cc < 4; ++cc)
          for (int d = 0; d < 4; ++d) {
            const WordTuple w{make_word({a}), make_word({b}), make_word({cc}), make_word({d})};
            if (std::abs(displayed_coefficient(u, w)) > 1e-12) {
              ++displayed;
              EXPECT_FALSE(c.coeff(w).is_zero());
            }
          }
    EXPECT_EQ(displayed, c.size());
    // x0 (x) x1 (x) x2 (x) x3 carries -cos(-phi1 + phi2 - phi3), times -4
    const double want = 4.0 * std::cos(-u.phi[0].radians() + u.phi[1].radians() - u.phi[2].radians());
    EXPECT_NEAR(embed(c.coeff({make_word({0}), make_word({1}), make_word({2}), make_word({3})})).re, want, 1e-12);
  }
}

TEST(ChernOdd, HalfVanishesAndThreeHalvesIsCycle) {
  const Presentation A = make_a_u(kU12, 4);
  const MatrixPoly U = unitary_U_u(kU12, A.gens());
  EXPECT_TRUE(reduce_chain(ch_odd(U, 0, &A), &A).is_zero());
  const TensorChain c = reduce_chain(ch_odd(U, 1, &A), &A);
  EXPECT_TRUE(is_cyclic(c));
  EXPECT_TRUE(boundary_b(c, A).is_zero());
}

TEST(ChernOdd, VolumeChainIsUnitTimesCycle) {
  const Presentation A = make_a_u(kU12, 4);
  const TensorChain c = reduce_chain(ch_odd(unitary_U_u(kU12, A.gens()), 1, &A), &A);
  const TensorChain v = operator_B_on_cyclic(c);
  ASSERT_EQ(v.arity(), 5u);
  ASSERT_EQ(v.size(), c.size());
  for (const auto& [w, coef] : c.terms()) {
    WordTuple w1{Word()};
    w1.insert(w1.end(), w.begin(), w.end());
    EXPECT_EQ(v.coeff(w1), coef);
  }
  EXPECT_TRUE(boundary_b(v, A).is_zero());
}

TEST(ChernOdd, VanishesAtCriticalPoints) {
  const auto g = au_generators();
  for (const auto& u : {AngleTriple{{PiAngle(1, 2), PiAngle(1, 2), PiAngle(1, 2)}},
                        AngleTriple{{PiAngle(1, 2), PiAngle(0, 1), PiAngle(0, 1)}}})
    EXPECT_TRUE(reduce_chain(ch_odd(unitary_U_u(u, g), 1, nullptr), nullptr).is_zero());
}

TEST(ChernOdd, NonUnitaryIsRejected) {
  const Presentation A = make_a_u(kU12, 4);
  MatrixPoly U = unitary_U_u(kU12, A.gens());
  U(0, 0) += A.gen(1);
  EXPECT_THROW(ch_odd(U, 0, &A), NotUnitary);
}

TEST(ChernEven, ProjectionLowerClassesVanish) {
  const AngleMatrix th = angles2(PiAngle(1, 3));
  const Presentation S = make_even_sphere(2, th);
  const MatrixPoly e = projection_e_theta(S, 2, th);
  EXPECT_TRUE(reduce_chain(ch_even(e, 0, &S), &S).is_zero());
  EXPECT_TRUE(reduce_chain(ch_even(e, 1, &S), &S).is_zero());
  const TensorChain c2 = reduce_chain(ch_even(e, 2, &S), &S);
  EXPECT_FALSE(c2.is_zero());
  EXPECT_TRUE(boundary_b(c2, S).is_zero());
}

TEST(ChernEven, NonIdempotentIsRejected) {
  const AngleMatrix th = angles2(PiAngle(1, 3));
  const Presentation S = make_even_sphere(2, th);
  const MatrixPoly e = projection_e_theta(S, 2, th).scaled(Scalar(2));
  EXPECT_THROW(ch_even(e, 0, &S), NotIdempotent);
}

TEST(ChernOdd, OddSphereTopClassIsCycle) {
  Gen r(44);
  for (int n : {2, 3}) {
    const AngleMatrix th = r.theta(n);
    const Presentation O = make_odd_sphere(n, th);
    const TensorChain c = reduce_chain(ch_odd(unitary_U_theta(O, n, th), n - 1, &O), &O);
    EXPECT_FALSE(c.is_zero());
    EXPECT_TRUE(boundary_b(c, O).is_zero()) << "n = " << n;
  }
}

}  // namespace
}  // namespace ncs
