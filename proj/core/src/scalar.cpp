#include "ncsphere/scalar.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncs {

ApproxScalar::ApproxScalar(double r, double i) : re(r), im(i) {}

double ApproxScalar::abs() const { return std::hypot(re, im); }

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    long c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

// Function-local so that scalars built during static initialization work.
struct CycloCache {
  std::mutex mutex;
  std::map<int, std::vector<long>> polys;
};
CycloCache& cyclo_cache() {
  static CycloCache c;
  return c;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  {
    std::lock_guard<std::mutex> lk(cyclo_cache().mutex);
    auto it = cyclo_cache().polys.find(n);
    if (it != cyclo_cache().polys.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lk(cyclo_cache().mutex);
  return cyclo_cache().polys.emplace(n, std::move(p)).first->second;
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_poly(n).size()) - 1; }

CycloScalar::CycloScalar(long v) {
  if (v != 0) c_.emplace_back(v);
}

CycloScalar::CycloScalar(const Rational& q) {
  if (q != 0) c_.push_back(q);
}

CycloScalar::CycloScalar(int order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}

void CycloScalar::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void CycloScalar::reduce() {
  const auto& phi = cyclotomic_poly(order_);
  const std::size_t f = phi.size() - 1;
  for (std::size_t k = c_.size(); k-- > f;) {
    if (c_[k] == 0) continue;
    Rational c = c_[k];
    for (std::size_t j = 0; j < f; ++j)
      if (phi[j] != 0) c_[k - f + j] -= c * phi[j];
    c_[k] = 0;
  }
  if (c_.size() > f) c_.resize(f);
  trim();
}

CycloScalar CycloScalar::zeta(int order, long k) {
  if (order <= 0 || order % 4 != 0) throw std::invalid_argument("zeta: order must be a positive multiple of 4");
  long e = ((k % order) + order) % order;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = 1;
  CycloScalar r(order, std::move(c));
  r.reduce();
  return r;
}

Rational CycloScalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value on irrational element");
  return c_.empty() ? Rational(0) : c_[0];
}

CycloScalar CycloScalar::lift(int m) const {
  if (m % order_ != 0) throw std::invalid_argument("lift: target order must be a multiple");
  if (m == order_) return *this;
  if (is_rational()) {
    CycloScalar r = *this;
    r.order_ = m;
    return r;
  }
  const long step = m / order_;
  std::vector<Rational> c(step * (c_.size() - 1) + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) c[k * step] = c_[k];
  CycloScalar r(m, std::move(c));
  r.reduce();
  return r;
}

CycloScalar CycloScalar::galois(long j) const {
  if (is_rational()) return *this;
  const long n = order_;
  long jj = ((j % n) + n) % n;
  if (std::gcd(jj, n) != 1) throw std::invalid_argument("galois: exponent not a unit");
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) c[(static_cast<long>(k) * jj) % n] += c_[k];
  CycloScalar r(order_, std::move(c));
  r.reduce();
  return r;
}

Rational CycloScalar::norm() const {
  if (is_rational()) {
    Rational v = rational_value();
    Rational out = 1;
    for (int i = 0; i < euler_phi(order_); ++i) out *= v;
    return out;
  }
  CycloScalar prod = *this;
  for (long j = 2; j < order_; ++j)
    if (std::gcd(j, static_cast<long>(order_)) == 1) prod *= galois(j);
  return prod.rational_value();
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycloScalar: division by zero");
  if (is_rational()) {
    CycloScalar r(Rational(1) / c_[0]);
    r.order_ = order_;
    return r;
  }
  CycloScalar others(1);
  others.order_ = order_;
  for (long j = 2; j < order_; ++j)
    if (std::gcd(j, static_cast<long>(order_)) == 1) others *= galois(j);
  CycloScalar n = *this * others;
  Rational inv = Rational(1) / n.rational_value();
  for (auto& c : others.c_) c *= inv;
  return others;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  if (o.is_zero()) return *this;
  if (order_ != o.order_ && !o.is_rational()) {
    if (is_rational()) {
      CycloScalar r = o;
      if (!c_.empty()) r.c_[0] += c_[0];
      r.trim();
      return *this = r;
    }
    int m = std::lcm(order_, o.order_);
    *this = lift(m);
    return *this += o.lift(m);
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  if (a.is_zero() || b.is_zero()) return CycloScalar();
  if (b.is_rational()) {
    CycloScalar r = a;
    for (auto& c : r.c_) c *= b.c_[0];
    return r;
  }
  if (a.is_rational()) return b * a;
  if (a.order_ != b.order_) {
    int m = std::lcm(a.order_, b.order_);
    return a.lift(m) * b.lift(m);
  }
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
  }
  CycloScalar r(a.order_, std::move(c));
  r.reduce();
  return r;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) { return *this = *this * o; }

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.is_rational() && b.is_rational()) return a.c_ == b.c_;
  if (a.is_rational() != b.is_rational()) return false;  // canonical forms differ in Q vs Q(zeta)\Q
  if (a.order_ == b.order_) return a.c_ == b.c_;
  int m = std::lcm(a.order_, b.order_);
  return a.lift(m).c_ == b.lift(m).c_;
}

ApproxScalar CycloScalar::embed() const {
  long double re = 0, im = 0;
  const long double two_pi = 6.283185307179586476925286766559L;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    long double v = c_[k].get_d();
    long double a = two_pi * static_cast<long double>(k) / order_;
    re += v * cosl(a);
    im += v * sinl(a);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycloScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k].get_str();
    } else if (order_ == 4) {
      os << "(" << c_[k].get_str() << ")*i";
    } else {
      os << "(" << c_[k].get_str() << ")*z" << order_ << "^" << k;
    }
  }
  return os.str();
}

ApproxScalar embed(const CycloScalar& x) { return x.embed(); }

CycloScalar phase(long p, long q) {
  if (q < 1) throw std::invalid_argument("phase: q must be positive");
  const long n = std::lcm(4L, 2 * q);
  const long k = p * (n / (2 * q));
  return CycloScalar::zeta(static_cast<int>(n), k);
}

CycloScalar imag_unit() { return CycloScalar::zeta(4, 1); }

CycloScalar cos_pi(long p, long q) {
  CycloScalar z = phase(p, q);
  return (z + z.conj()) * CycloScalar(Rational(1, 2));
}

CycloScalar sin_pi(long p, long q) {
  CycloScalar z = phase(p, q);
  return (z - z.conj()) * (imag_unit() * CycloScalar(Rational(-1, 2)));
}

PiAngle::PiAngle(long p_, long q_) {
  if (q_ == 0) throw std::invalid_argument("PiAngle: zero denominator");
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  long g = std::gcd(p_, q_);
  if (g == 0) g = 1;
  p = p_ / g;
  q = q_ / g;
}

PiAngle PiAngle::operator+(const PiAngle& o) const {
  long l = std::lcm(q, o.q);
  return PiAngle(p * (l / q) + o.p * (l / o.q), l);
}

PiAngle PiAngle::operator-(const PiAngle& o) const { return *this + (-o); }

double PiAngle::radians() const { return M_PI * static_cast<double>(p) / static_cast<double>(q); }

std::string PiAngle::str() const {
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

PiAngle parse_pi_angle(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return PiAngle(std::stol(s), 1);
    return PiAngle(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad angle literal '" + s + "' (expected p/q)");
  }
}

}  // namespace ncs
