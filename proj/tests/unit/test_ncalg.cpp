#include <gtest/gtest.h>

#include "generators.hpp"
#include "ncsphere/clifford.hpp"
#include "ncsphere/ncalg.hpp"

namespace ncs {
namespace {

using testgen::Gen;

GenSetPtr plane_gens() {
  return std::make_shared<const GeneratorSet>(std::vector<std::string>{"z1", "z2", "zb1", "zb2"},
                                              std::vector<int>{2, 3, 0, 1});
}

TEST(NCPoly, FreeProduct) {
  const auto g = plane_gens();
  const NCPoly p = NCPoly::gen(g, 0) * NCPoly::gen(g, 1);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coeff(make_word({0, 1})), Scalar(1));
}

TEST(NCPoly, StarIsAntilinearAndReverses) {
  const auto g = plane_gens();
  const NCPoly p = NCPoly::monomial(g, make_word({0, 1}), imag_unit());
  const NCPoly want = NCPoly::monomial(g, make_word({3, 2}), -imag_unit());
  EXPECT_EQ(star(p), want);
  EXPECT_EQ(star(NCPoly::constant(g, Scalar(1))), NCPoly::constant(g, Scalar(1)));
}

TEST(NCPolyProperty, Associativity) {
  Gen r(21);
  const auto g = plane_gens();
  for (int i = 0; i < 100; ++i) {
    const NCPoly a = r.poly(g, 5, 3), b = r.poly(g, 5, 3), c = r.poly(g, 5, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(NCPolyProperty, DegreeIsAdditive) {
  Gen r(22);
  const auto g = plane_gens();
  for (int i = 0; i < 100; ++i) {
    const NCPoly a = r.poly(g, 5, 4), b = r.poly(g, 5, 4);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(NCPolyProperty, StarIsAntihomomorphism) {
  Gen r(23);
  const auto g = plane_gens();
  for (int i = 0; i < 100; ++i) {
    const NCPoly a = r.poly(g, 5, 3), b = r.poly(g, 5, 3);
    EXPECT_EQ(star(a * b), star(b) * star(a));
    EXPECT_EQ(star(star(a)), a);
  }
}

TEST(CircledCirc, UnitMatrix) {
  const auto g = plane_gens();
  const MatrixPoly one = MatrixPoly::identity(g, 2);
  const ChainMatrix c = circledcirc(one, one);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      TensorChain want(2);
      if (a == b) want.add_term({Word(), Word()}, Scalar(1));
      EXPECT_EQ(c(a, b), want);
    }
  TensorChain two(2);
  two.add_term({Word(), Word()}, Scalar(2));
  EXPECT_EQ(trace(c), two);
}

TEST(CircledCirc, OneByOne) {
  Gen r(24);
  const auto g = plane_gens();
  const NCPoly a = r.poly(g, 3, 2), b = r.poly(g, 3, 2);
  MatrixPoly A(g, 1), B(g, 1);
  A(0, 0) = a;
  B(0, 0) = b;
  EXPECT_EQ(circledcirc(A, B)(0, 0), TensorChain::tensor({a, b}));
}

TEST(CircledCirc, TraceOfZeroIsZero) {
  const auto g = plane_gens();
  const MatrixPoly z(g, 3);
  EXPECT_TRUE(trace(circledcirc(z, z)).is_zero());
}

// tr(U (*) U*) at u = (0, 0, 0) is 2 (x0 (x) x0 + sum_k xk (x) xk), from
// tr(sigma_k sigma_l) = 2 delta_kl.
TEST(CircledCirc, TraceUUstarAtClassicalPoint) {
  const AngleTriple e{{PiAngle(0, 1), PiAngle(0, 1), PiAngle(0, 1)}};
  const auto g = au_generators();
  const MatrixPoly U = unitary_U_u(e, g);
  const TensorChain t = trace(circledcirc(U, star(U)));
  TensorChain want(2);
  for (int m = 0; m < 4; ++m) want.add_term({make_word({m}), make_word({m})}, Scalar(2));
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t, want);
}

TEST(ScalarMatrix, ChiralityIsTraceless) {
  Gen r(25);
  for (int n = 1; n <= 3; ++n) {
    const CliffordRep rep = build_rep(n, r.theta(n));
    EXPECT_TRUE(rep.gamma.trace().is_zero());
    EXPECT_EQ(rep.gamma * rep.gamma, ScalarMatrix::identity(rep.gamma.rows()));
  }
}

TEST(ScalarMatrix, RankAndKron) {
  const ScalarMatrix p = pauli(1), id = ScalarMatrix::identity(2);
  EXPECT_EQ(matrix_rank(kron(p, id)), 4u);
  ScalarMatrix m(2, 2);
  m(0, 0) = Scalar(1);
  m(0, 1) = Scalar(2);
  m(1, 0) = Scalar(2);
  m(1, 1) = Scalar(4);
  EXPECT_EQ(matrix_rank(m), 1u);
}

}  // namespace
}  // namespace ncs
