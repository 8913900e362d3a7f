#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncs {

// (phi_1, phi_2, phi_3) in radians
using Angles3 = std::array<double, 3>;

struct OnDegenerateLocus : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousWithinTolerance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CaseLabel { GENERIC, P_ORBIT, P_PRIME_ORBIT, O_ORBIT, C_PLUS, C_MINUS, F1, F2, L, L_PRIME, D_SET };
std::string to_string(CaseLabel c);

constexpr double kLocusTol = 1e-9;

// Z_k = sin(2 phi_k) sin(phi_l + phi_m - phi_k), (k, l, m) cyclic
Angles3 vector_field_Z(const Angles3& u);
Angles3 rk4_step(const Angles3& u, double dt);
// Fixed-step RK4. The state is carried in extended precision: orbits run
// exponentially into critical points, where double angles lose the digits
// that J and lambda depend on.
Angles3 flow(const Angles3& u, double t, double dt = 1e-3);

struct JTriple {
  double j12 = 0, j23 = 0, j31 = 0;
};
// J_lm = -tan(phi_l - phi_m) tan(phi_k); throws OnDegenerateLocus
JTriple j_of(const Angles3& u);
double j_constraint_residual(const JTriple& j);  // J12 + J23 + J31 + J12 J23 J31

struct FlowSample {
  double t = 0;
  Angles3 u{};
  JTriple J;
  double lambda = 0;
  double j = 0;
  bool invariants_defined = false;  // false on the degenerate loci of J or lambda
};
// Samples every `every` steps (and the endpoint); invariants are evaluated
// on the extended-precision state.
std::vector<FlowSample> flow_path(const Angles3& u, double t, double dt = 1e-3, long every = 1);

// prod_k sin(phi_k) cos(phi_l - phi_m)
double delta_of(const Angles3& u);
// s^0..s^3 with prod s = -delta; throws OnDegenerateLocus when delta = 0
std::array<std::complex<double>, 4> s_coeffs(const Angles3& u);
// the three left-hand sides of the s system
std::array<double, 3> s_system_residuals(const Angles3& u, const std::array<std::complex<double>, 4>& s);

struct SklyaninResidual {
  double anticommutator = 0;  // max_k |coefficient of [Sl,Sm]_+ - i J_lm|
  double commutator = 0;      // max_k |coefficient of [S0,Sk]_+ - i|
};
// Substitutes x^mu = S_mu / s^mu into the relations of A_u and compares
// with [S0,Sk]_- = i J [Sl,Sm]_+, [Sl,Sm]_- = i [S0,Sk]_+.
SklyaninResidual sklyanin_residual(const Angles3& u);

// w(phi) = (-phi_1, phi_3 - phi_1, phi_2 - phi_1)
Angles3 weyl_w(const Angles3& u);
// Jacobian of w
std::array<Angles3, 3> weyl_w_jacobian();
Angles3 permute(const Angles3& u, const std::array<int, 3>& p);  // (u[p0], u[p1], u[p2])
Angles3 reduce_mod_pi(const Angles3& u);
double circle_distance(double a, double b);  // distance mod pi
bool same_mod_pi(const Angles3& a, const Angles3& b, double tol = kLocusTol);

// Closure under w and the coordinate permutations, mod pi.
std::vector<Angles3> weyl_orbit(const Angles3& u, double tol = kLocusTol);
// {id, w and its two conjugates}
std::vector<Angles3> k_orbit(const Angles3& u);
Angles3 reduce_to_cell(const Angles3& u);

double lambda_of(const Angles3& u);
double j_from_lambda(double lambda);
double j_invariant(const Angles3& u);

// Tests the defining conditions of the exceptional loci on the Weyl orbit.
CaseLabel classify(const Angles3& u, double tol = kLocusTol);

}  // namespace ncs
