#include "ncsphere/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ncs {

namespace {

constexpr double kPi = std::numbers::pi;

// (k, l, m) cyclic, zero-based
std::array<int, 3> cyc(int k) { return {k, (k + 1) % 3, (k + 2) % 3}; }

}  // namespace

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::GENERIC: return "GENERIC";
    case CaseLabel::P_ORBIT: return "P_ORBIT";
    case CaseLabel::P_PRIME_ORBIT: return "P_PRIME_ORBIT";
    case CaseLabel::O_ORBIT: return "O_ORBIT";
    case CaseLabel::C_PLUS: return "C_PLUS";
    case CaseLabel::C_MINUS: return "C_MINUS";
    case CaseLabel::F1: return "F1";
    case CaseLabel::F2: return "F2";
    case CaseLabel::L: return "L";
    case CaseLabel::L_PRIME: return "L_PRIME";
    case CaseLabel::D_SET: return "D_SET";
  }
  return "?";
}

namespace {

template <class T>
using Vec3 = std::array<T, 3>;

template <class T>
Vec3<T> z_field(const Vec3<T>& u) {
  using std::sin;
  Vec3<T> z{};
  for (int k = 0; k < 3; ++k) {
    auto [kk, l, m] = cyc(k);
    z[kk] = sin(2 * u[kk]) * sin(u[l] + u[m] - u[kk]);
  }
  return z;
}

template <class T>
Vec3<T> rk4(const Vec3<T>& u, T dt) {
  auto add = [](const Vec3<T>& a, const Vec3<T>& b, T h) {
    return Vec3<T>{a[0] + h * b[0], a[1] + h * b[1], a[2] + h * b[2]};
  };
  const Vec3<T> k1 = z_field(u);
  const Vec3<T> k2 = z_field(add(u, k1, dt / 2));
  const Vec3<T> k3 = z_field(add(u, k2, dt / 2));
  const Vec3<T> k4 = z_field(add(u, k3, dt));
  Vec3<T> out;
  for (int i = 0; i < 3; ++i) out[i] = u[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

template <class T>
JTriple j_impl(const Vec3<T>& u) {
  using std::abs;
  using std::cos;
  using std::tan;
  for (int k = 0; k < 3; ++k) {
    auto [kk, l, m] = cyc(k);
    if (abs(cos(u[kk])) < kLocusTol) throw OnDegenerateLocus("cos(phi_" + std::to_string(kk + 1) + ") = 0");
    if (abs(cos(u[l] - u[m])) < kLocusTol)
      throw OnDegenerateLocus("cos(phi_" + std::to_string(l + 1) + " - phi_" + std::to_string(m + 1) + ") = 0");
  }
  auto J = [&](int k) {
    auto [kk, l, m] = cyc(k);
    return static_cast<double>(-tan(u[l] - u[m]) * tan(u[kk]));
  };
  // J_23 goes with k = 1, J_31 with k = 2, J_12 with k = 3
  return {J(2), J(0), J(1)};
}

template <class T>
double lambda_impl(const Vec3<T>& u, double tol) {
  using std::abs;
  using std::sin;
  const T den = sin(2 * u[1]) * sin(2 * (u[0] - u[2]));
  if (abs(den) <= tol) throw OnDegenerateLocus("lambda: vanishing denominator");
  return static_cast<double>(sin(2 * u[0]) * sin(2 * (u[1] - u[2])) / den);
}

using Ext = long double;

Vec3<Ext> widen(const Angles3& u) { return {u[0], u[1], u[2]}; }
Angles3 narrow(const Vec3<Ext>& u) {
  return {static_cast<double>(u[0]), static_cast<double>(u[1]), static_cast<double>(u[2])};
}

long step_count(double t, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("flow: dt must be positive");
  return std::lround(std::abs(t) / dt);
}

}  // namespace

Angles3 vector_field_Z(const Angles3& u) { return z_field(u); }

Angles3 rk4_step(const Angles3& u, double dt) { return narrow(rk4(widen(u), static_cast<Ext>(dt))); }

Angles3 flow(const Angles3& u, double t, double dt) {
  const long steps = step_count(t, dt);
  const Ext h = steps ? static_cast<Ext>(t) / steps : 0;
  Vec3<Ext> v = widen(u);
  for (long i = 0; i < steps; ++i) v = rk4(v, h);
  return narrow(v);
}

std::vector<FlowSample> flow_path(const Angles3& u, double t, double dt, long every) {
  const long steps = step_count(t, dt);
  if (every < 1) every = 1;
  const Ext h = steps ? static_cast<Ext>(t) / steps : 0;
  std::vector<FlowSample> out;
  Vec3<Ext> v = widen(u);
  auto sample = [&](long i) {
    FlowSample s;
    s.t = static_cast<double>(h * i);
    s.u = narrow(v);
    try {
      s.J = j_impl(v);
      s.lambda = static_cast<double>(lambda_impl(v, 0.0));
      s.j = j_from_lambda(s.lambda);
      s.invariants_defined = true;
    } catch (const OnDegenerateLocus&) {
      s.invariants_defined = false;
    }
    out.push_back(s);
  };
  sample(0);
  for (long i = 1; i <= steps; ++i) {
    v = rk4(v, h);
    if (i % every == 0 || i == steps) sample(i);
  }
  return out;
}

JTriple j_of(const Angles3& u) { return j_impl(u); }

double j_constraint_residual(const JTriple& j) { return j.j12 + j.j23 + j.j31 + j.j12 * j.j23 * j.j31; }

double delta_of(const Angles3& u) {
  double d = 1;
  for (int k = 0; k < 3; ++k) {
    auto [kk, l, m] = cyc(k);
    d *= std::sin(u[kk]) * std::cos(u[l] - u[m]);
  }
  return d;
}

std::array<std::complex<double>, 4> s_coeffs(const Angles3& u) {
  const double d = delta_of(u);
  if (std::abs(d) < kLocusTol) throw OnDegenerateLocus("delta(u) = 0");
  std::array<std::complex<double>, 4> s;
  s[0] = std::sqrt(std::complex<double>(std::sin(u[0]) * std::sin(u[1]) * std::sin(u[2])));
  for (int k = 0; k < 3; ++k) {
    double v = std::sin(u[k]);
    for (int l = 0; l < 3; ++l)
      if (l != k) v *= std::cos(u[k] - u[l]);
    s[k + 1] = std::sqrt(std::complex<double>(v));
  }
  const std::complex<double> prod = s[0] * s[1] * s[2] * s[3];
  if (std::abs(prod + d) > std::abs(prod - d)) s[3] = -s[3];
  return s;
}

std::array<double, 3> s_system_residuals(const Angles3& u, const std::array<std::complex<double>, 4>& s) {
  std::array<double, 3> r{};
  for (int k = 0; k < 3; ++k) {
    auto [kk, l, m] = cyc(k);
    r[kk] = std::abs(s[0] * s[kk + 1] * std::cos(u[l] - u[m]) + s[l + 1] * s[m + 1] * std::sin(u[kk]));
  }
  return r;
}

SklyaninResidual sklyanin_residual(const Angles3& u) {
  const JTriple jt = j_of(u);
  const auto s = s_coeffs(u);
  const std::complex<double> I(0, 1);
  SklyaninResidual r;
  for (int k = 0; k < 3; ++k) {
    auto [kk, l, m] = cyc(k);
    const double J = kk == 0 ? jt.j23 : kk == 1 ? jt.j31 : jt.j12;
    // cos phi_k [x0,xk]_- = i sin(phi_l - phi_m) [xl,xm]_+ with x = S/s
    const std::complex<double> a = I * std::sin(u[l] - u[m]) * s[0] * s[kk + 1] / (std::cos(u[kk]) * s[l + 1] * s[m + 1]);
    r.anticommutator = std::max(r.anticommutator, std::abs(a - I * J));
    // cos(phi_l - phi_m) [xl,xm]_- = -i sin phi_k [x0,xk]_+
    const std::complex<double> b =
        -I * std::sin(u[kk]) * s[l + 1] * s[m + 1] / (std::cos(u[l] - u[m]) * s[0] * s[kk + 1]);
    r.commutator = std::max(r.commutator, std::abs(b - I));
  }
  return r;
}

Angles3 weyl_w(const Angles3& u) { return {-u[0], u[2] - u[0], u[1] - u[0]}; }

std::array<Angles3, 3> weyl_w_jacobian() { return {Angles3{-1, 0, 0}, Angles3{-1, 0, 1}, Angles3{-1, 1, 0}}; }

Angles3 permute(const Angles3& u, const std::array<int, 3>& p) { return {u[p[0]], u[p[1]], u[p[2]]}; }

Angles3 reduce_mod_pi(const Angles3& u) {
  Angles3 v;
  for (int i = 0; i < 3; ++i) {
    v[i] = std::fmod(u[i], kPi);
    if (v[i] < 0) v[i] += kPi;
    if (v[i] >= kPi) v[i] -= kPi;
  }
  return v;
}

double circle_distance(double a, double b) { return std::abs(std::remainder(a - b, kPi)); }

bool same_mod_pi(const Angles3& a, const Angles3& b, double tol) {
  for (int i = 0; i < 3; ++i)
    if (circle_distance(a[i], b[i]) > tol) return false;
  return true;
}

std::vector<Angles3> weyl_orbit(const Angles3& u, double tol) {
  std::vector<Angles3> orbit{reduce_mod_pi(u)};
  auto add = [&](const Angles3& v) {
    for (const auto& o : orbit)
      if (same_mod_pi(o, v, tol)) return;
    orbit.push_back(reduce_mod_pi(v));
  };
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const Angles3 v = orbit[i];
    add(weyl_w(v));
    add(permute(v, {1, 0, 2}));
    add(permute(v, {0, 2, 1}));
  }
  return orbit;
}

std::vector<Angles3> k_orbit(const Angles3& u) {
  std::vector<Angles3> out{reduce_mod_pi(u)};
  // conjugates of w by the cyclic permutations
  const std::array<std::array<int, 3>, 3> cyc_perm = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (const auto& p : cyc_perm) {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[p[i]] = i;
    out.push_back(reduce_mod_pi(permute(weyl_w(permute(u, p)), inv)));
  }
  return out;
}

Angles3 reduce_to_cell(const Angles3& u) {
  Angles3 v = reduce_mod_pi(u);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double lambda_of(const Angles3& u) { return lambda_impl(u, kLocusTol); }

double j_from_lambda(double l) {
  const double den = l * l * (1 - l) * (1 - l);
  if (std::abs(den) < kLocusTol) throw OnDegenerateLocus("j: lambda in {0, 1}");
  return 256 * std::pow(l * l - l + 1, 3) / den;
}

double j_invariant(const Angles3& u) { return j_from_lambda(lambda_of(u)); }

CaseLabel classify(const Angles3& u, double tol) {
  const auto orbit = weyl_orbit(u, tol);
  const double h = kPi / 2;
  auto any = [&](auto pred) { return std::any_of(orbit.begin(), orbit.end(), pred); };
  auto eq = [&](double a, double b) { return circle_distance(a, b) <= tol; };

  if (any([&](const Angles3& v) { return same_mod_pi(v, {h, h, h}, tol); })) return CaseLabel::P_ORBIT;
  if (any([&](const Angles3& v) { return same_mod_pi(v, {h, h, 0}, tol); })) return CaseLabel::P_PRIME_ORBIT;
  if (any([&](const Angles3& v) { return same_mod_pi(v, {0, 0, 0}, tol); })) return CaseLabel::O_ORBIT;

  struct Circle {
    CaseLabel label;
    bool hit;
  };
  const Circle circles[] = {
      {CaseLabel::C_PLUS, any([&](const Angles3& v) { return eq(v[0], v[1]) && eq(v[2], 0); })},
      {CaseLabel::C_MINUS, any([&](const Angles3& v) { return eq(v[0], h + v[2]) && eq(v[1], h); })},
      {CaseLabel::L, any([&](const Angles3& v) { return eq(v[0], h) && eq(v[1], v[2]); })},
      {CaseLabel::L_PRIME, any([&](const Angles3& v) { return eq(v[0], h) && eq(v[1], h); })},
  };
  std::vector<CaseLabel> hits;
  for (const auto& c : circles)
    if (c.hit) hits.push_back(c.label);
  if (hits.size() > 1) {
    std::string names;
    for (auto l : hits) names += " " + to_string(l);
    throw AmbiguousWithinTolerance("classify: point lies on" + names);
  }
  if (hits.size() == 1) return hits[0];

  if (any([&](const Angles3& v) { return eq(v[0], h); })) return CaseLabel::F2;
  // F1: some J_lm = 0 at a nondegenerate orbit point, i.e. two equal angles
  if (any([&](const Angles3& v) {
        if (std::abs(delta_of(v)) < tol) return false;
        for (int k = 0; k < 3; ++k)
          if (std::abs(std::cos(v[k])) < tol) return false;
        return eq(v[0], v[1]) || eq(v[1], v[2]) || eq(v[0], v[2]);
      }))
    return CaseLabel::F1;
  const auto ko = k_orbit(u);
  if (std::all_of(ko.begin(), ko.end(), [&](const Angles3& v) { return std::abs(delta_of(v)) < tol; }))
    return CaseLabel::D_SET;
  return CaseLabel::GENERIC;
}

}  // namespace ncs
