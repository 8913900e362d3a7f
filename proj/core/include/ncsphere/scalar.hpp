#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ncs {

using Rational = mpq_class;

struct ApproxScalar {
  double re = 0.0;
  double im = 0.0;

  ApproxScalar() = default;
  ApproxScalar(double r, double i = 0.0);

  std::complex<double> value() const { return {re, im}; }
  double abs() const;

  ApproxScalar operator+(const ApproxScalar& o) const { return {re + o.re, im + o.im}; }
  ApproxScalar operator-(const ApproxScalar& o) const { return {re - o.re, im - o.im}; }
  ApproxScalar operator*(const ApproxScalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

// Element of Q(zeta_N), N a multiple of 4, stored as coefficients of
// 1, zeta, ..., zeta^{phi(N)-1} modulo the N-th cyclotomic polynomial.
// Trailing zero coefficients are trimmed, so zero is the empty vector and
// a rational is a vector of length one.
class CycloScalar {
 public:
  CycloScalar() = default;
  CycloScalar(long v);
  CycloScalar(const Rational& q);

  static CycloScalar zeta(int order, long k);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;  // requires is_rational()

  CycloScalar lift(int order) const;
  CycloScalar galois(long j) const;  // zeta -> zeta^j, gcd(j, N) = 1
  CycloScalar conj() const { return galois(-1); }
  CycloScalar inverse() const;
  Rational norm() const;  // field norm down to Q

  ApproxScalar embed() const;
  // "c0 + (c1)*zN^1 + ..."; in Q(i) the basis element zeta_4 is written i
  std::string str() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o) { return *this *= o.inverse(); }

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

 private:
  CycloScalar(int order, std::vector<Rational> c);
  void trim();
  void reduce();  // reduce a raw polynomial of any length modulo Phi_N

  int order_ = 4;
  std::vector<Rational> c_;
};

using Scalar = CycloScalar;

// Cyclotomic polynomial Phi_N as integer coefficients, lowest degree first.
const std::vector<long>& cyclotomic_poly(int n);
int euler_phi(int n);

// e^{i pi p / q}
CycloScalar phase(long p, long q);
CycloScalar cos_pi(long p, long q);
CycloScalar sin_pi(long p, long q);
CycloScalar imag_unit();

ApproxScalar embed(const CycloScalar& x);
inline CycloScalar conj(const CycloScalar& x) { return x.conj(); }

// Angle p/q (in units of pi), reduced, q > 0.
struct PiAngle {
  long p = 0;
  long q = 1;
  PiAngle() = default;
  PiAngle(long p_, long q_);
  PiAngle operator+(const PiAngle& o) const;
  PiAngle operator-(const PiAngle& o) const;
  PiAngle operator-() const { return PiAngle(-p, q); }
  PiAngle scaled(long k) const { return PiAngle(p * k, q); }
  double radians() const;
  bool operator==(const PiAngle& o) const { return p == o.p && q == o.q; }
  std::string str() const;
};

inline CycloScalar phase(const PiAngle& a) { return phase(a.p, a.q); }
inline CycloScalar cos_pi(const PiAngle& a) { return cos_pi(a.p, a.q); }
inline CycloScalar sin_pi(const PiAngle& a) { return sin_pi(a.p, a.q); }

// Parses "p/q" or "p" as a multiple of pi.
PiAngle parse_pi_angle(const std::string& s);

}  // namespace ncs
