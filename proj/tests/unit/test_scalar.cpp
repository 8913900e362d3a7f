#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "generators.hpp"
#include "ncsphere/scalar.hpp"

namespace ncs {
namespace {

using testgen::Gen;

std::complex<double> approx(const Scalar& s) { return embed(s).value(); }

TEST(Scalar, PhaseExamples) {
  EXPECT_EQ(phase(1, 2) * phase(1, 2), Scalar(-1));
  EXPECT_EQ(phase(0, 1), Scalar(1));
  EXPECT_TRUE((Scalar(1) + phase(2, 3) + phase(4, 3)).is_zero());
  EXPECT_EQ(phase(1, 2), imag_unit());
}

TEST(Scalar, TrigExamples) {
  EXPECT_EQ(cos_pi(1, 3), Scalar(Rational(1, 2)));
  EXPECT_EQ(sin_pi(1, 2), Scalar(1));
  EXPECT_EQ(cos_pi(1, 5) * cos_pi(1, 5) + sin_pi(1, 5) * sin_pi(1, 5), Scalar(1));
  EXPECT_NEAR(embed(cos_pi(1, 3)).re, 0.5, 1e-14);
}

TEST(Scalar, ConjugationExamples) {
  EXPECT_EQ(conj(phase(1, 2)), phase(-1, 2));
  EXPECT_EQ(conj(Scalar(Rational(3, 7))), Scalar(Rational(3, 7)));
}

TEST(Scalar, ZeroIffEmptyCoefficients) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Scalar x = g.cyclo(24);
    EXPECT_EQ(x.is_zero(), x.coeffs().empty());
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_TRUE((x - x).coeffs().empty());
  }
}

TEST(ScalarProperty, PhaseHasUnitModulus) {
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const long q = g.integer(1, 60), p = g.integer(-3 * q, 3 * q);
    const Scalar z = phase(p, q);
    EXPECT_EQ(z * conj(z), Scalar(1)) << p << "/" << q;
  }
}

TEST(ScalarProperty, PythagoreanIdentity) {
  Gen g(13);
  for (int i = 0; i < 100; ++i) {
    const long q = g.integer(1, 30), p = g.integer(-2 * q, 2 * q);
    EXPECT_EQ(cos_pi(p, q) * cos_pi(p, q) + sin_pi(p, q) * sin_pi(p, q), Scalar(1)) << p << "/" << q;
  }
}

TEST(ScalarProperty, FieldAxioms) {
  Gen g(14);
  for (int order : {4, 12, 24, 40}) {
    for (int i = 0; i < 40; ++i) {
      const Scalar a = g.cyclo(order), b = g.cyclo(order), c = g.cyclo(order);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
  }
}

TEST(ScalarProperty, MixedOrdersAgree) {
  // Elements of different cyclotomic fields combine in the compositum.
  Gen g(15);
  for (int i = 0; i < 50; ++i) {
    const Scalar a = g.cyclo(12), b = g.cyclo(20);
    const auto ref = approx(a) * approx(b) + approx(a);
    const auto got = approx(a * b + a);
    EXPECT_LT(std::abs(got - ref), 1e-12);
  }
}

TEST(ScalarProperty, ConjugationIsRingHomomorphism) {
  Gen g(16);
  for (int i = 0; i < 100; ++i) {
    const Scalar x = g.cyclo(24), y = g.cyclo(24);
    EXPECT_EQ(conj(x * y), conj(x) * conj(y));
    EXPECT_EQ(conj(x + y), conj(x) + conj(y));
    EXPECT_EQ(conj(conj(x)), x);
  }
}

TEST(ScalarProperty, EmbedIsRingHomomorphism) {
  Gen g(17);
  for (int i = 0; i < 100; ++i) {
    const Scalar x = g.cyclo(24), y = g.cyclo(24), z = g.cyclo(24);
    const auto ref = approx(x) * approx(y) + approx(z) * approx(z);
    EXPECT_LT(std::abs(approx(x * y + z * z) - ref), 1e-12);
  }
}

TEST(ScalarProperty, EmbedMatchesClosedForm) {
  Gen g(18);
  for (int i = 0; i < 100; ++i) {
    const long q = g.integer(1, 40), p = g.integer(-2 * q, 2 * q);
    const double a = std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
    EXPECT_LT(std::abs(approx(phase(p, q)) - std::polar(1.0, a)), 1e-13);
    EXPECT_NEAR(embed(cos_pi(p, q)).re, std::cos(a), 1e-13);
    EXPECT_NEAR(embed(sin_pi(p, q)).re, std::sin(a), 1e-13);
  }
}

TEST(Scalar, PiAngleParsing) {
  EXPECT_EQ(parse_pi_angle("1/3"), PiAngle(1, 3));
  EXPECT_EQ(parse_pi_angle("2/6"), PiAngle(1, 3));
  EXPECT_EQ(parse_pi_angle("-1/2"), PiAngle(-1, 2));
  EXPECT_EQ(parse_pi_angle("1"), PiAngle(1, 1));
  EXPECT_THROW(parse_pi_angle("x"), std::invalid_argument);
}

TEST(Scalar, GaussianFormatting) {
  EXPECT_EQ((imag_unit() * Scalar(Rational(1, 32))).str(), "(1/32)*i");
  EXPECT_EQ(Scalar().str(), "0");
}

}  // namespace
}  // namespace ncs
