#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ncsphere/rewrite.hpp"

namespace ncs {

// Graded algebra of polynomial forms.  Generators are ranked
// z^1..z^n, zb^1..zb^n, [x], dz^1..dz^n, dzb^1..dzb^n, [dx]; the
// differentials are odd and carry the weight of the coordinate they hit.
struct FormAlgebra {
  Presentation pres;
  int n = 0;
  bool with_x = false;
  std::vector<int> z, zb, dz, dzb;
  int x = -1, dx = -1;
  std::vector<int> d_of;  // d of each generator, -1 for differentials
  std::vector<std::vector<long>> weight;

  explicit FormAlgebra(Presentation p) : pres(std::move(p)) {}
};

FormAlgebra make_forms(int n, const AngleMatrix& theta, bool with_x = false);
// Forms on S^{2n}_theta: quotient of make_forms(n, theta, true) by the
// differential ideal of sum z zb + x^2 - 1.
FormAlgebra make_sphere_forms(int n, const AngleMatrix& theta);

int form_degree(const FormAlgebra& f, const Word& w);
// Component of p of the given form degree.
NCPoly form_component(const FormAlgebra& f, const NCPoly& p, int degree);

// Graded Leibniz extension of z -> dz, x -> dx, d(dz) = 0, then normal form.
NCPoly differential(const FormAlgebra& f, const NCPoly& p);
// Antilinear, conj(w w') = (-1)^{pp'} conj(w') conj(w), zb = conj(z),
// conj(dz) = d conj(z); result in normal form.
NCPoly graded_conj(const FormAlgebra& f, const NCPoly& p);

// prod_mu dzb^mu dz^mu
NCPoly top_form(const FormAlgebra& f);
// zb^mu dz^mu and dzb^mu dz^mu, mu = 1..n
std::vector<NCPoly> invariant_forms(const FormAlgebra& f);

// p g - (-1)^{|p||g|} g p reduces to zero for every generator g; p must be
// homogeneous in form degree.
bool is_graded_central(const FormAlgebra& f, const NCPoly& p);

struct SelfDualityResult {
  double max_residual = 0.0;
  std::size_t resampled = 0;
  std::vector<std::array<double, 6>> samples;  // X_1..X_5, residual
};

// Projection e(X) = 1/2 (1 + sum Gamma^{mu*} u^mu + Gamma^mu ub^mu + sign gamma X_5)
// on the round S^4 (n = 2, theta = 0), u^mu = X_{2mu-1} + i X_{2mu}.
// Returns max |*F - sign i^2 F| over samples, F = e(de)^2.
//
// The tangent frame (t_1..t_4) is oriented so that det(orientation N, t_1, .., t_4) > 0
// with N the outward normal.  The default orientation = -1 (inner normal
// first) is the one in which e is self-dual with *F = i^2 F; the outward
// boundary orientation exchanges e and e_-.  constant = true uses
// e = 1/2 (1 + gamma) instead.
SelfDualityResult selfduality_numeric_s4(std::size_t samples, std::uint64_t seed, int sign = 1,
                                         bool constant = false, int orientation = -1);

}  // namespace ncs
