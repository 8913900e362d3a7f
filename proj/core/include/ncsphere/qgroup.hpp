#pragma once

#include <vector>

#include "ncsphere/diffforms.hpp"
#include "ncsphere/rewrite.hpp"

namespace ncs {

// M_theta(2n, R): generators a^mu_nu, b^mu_nu, abar^mu_nu, bbar^mu_nu with
// weights (e_mu, e_nu), (e_mu, -e_nu), (-e_mu, -e_nu), (-e_mu, e_nu) in
// Z^{2n} and angle matrix theta (+) (-theta).  with_forms adds the odd
// differentials da, db, dabar, dbbar of the same weights.
struct Bialgebra {
  Presentation pres;
  int n = 0;
  AngleMatrix theta;
  bool with_forms = false;
  std::vector<std::vector<long>> weight;
  std::vector<int> d_of;  // -1 for differentials

  explicit Bialgebra(Presentation p) : pres(std::move(p)) {}

  int a(int mu, int nu) const { return mu * n + nu; }
  int b(int mu, int nu) const { return n * n + mu * n + nu; }
  int abar(int mu, int nu) const { return 2 * n * n + mu * n + nu; }
  int bbar(int mu, int nu) const { return 3 * n * n + mu * n + nu; }
  int d(int g) const { return 4 * n * n + g; }  // requires with_forms
};

Bialgebra make_m_theta(int n, const AngleMatrix& theta, bool with_forms = false);

// Product in the graded tensor product of the leg algebras:
// (x0 (x) x1)(y0 (x) y1) = (-1)^{|x1||y0|} x0 y0 (x) x1 y1, each leg reduced.
TensorChain tensor_mul(const TensorChain& x, const TensorChain& y, const std::vector<const Presentation*>& legs);
// Reduce every leg to normal form.
TensorChain reduce_legs(const TensorChain& x, const std::vector<const Presentation*>& legs);
TensorChain tensor_unit(std::size_t arity);

// Algebra-homomorphic extension of the generator table; on differentials
// Delta d = (d (x) I + (-1)^gr (x) d) Delta.
TensorChain coproduct(const Bialgebra& m, const NCPoly& p);
// (Delta (x) I) or (I (x) Delta) applied to a two-leg chain.
TensorChain coproduct_on_leg(const Bialgebra& m, const TensorChain& c, std::size_t leg);
Scalar counit(const Bialgebra& m, const NCPoly& p);
// (eps (x) I) of a two-leg chain, as a polynomial in the second leg.
NCPoly counit_left(const Bialgebra& m, const TensorChain& c);
NCPoly counit_right(const Bialgebra& m, const TensorChain& c);

// Graded derivation on Omega(M_theta) (requires with_forms), then normal form.
NCPoly bialgebra_differential(const Bialgebra& m, const NCPoly& p);
// (d (x) I + (-1)^gr (x) d) on a two-leg chain over Omega(M_theta).
TensorChain differential_on_tensor(const Bialgebra& m, const TensorChain& c);

// delta z = a (x) z + b (x) zb, delta dz = a (x) dz + b (x) dzb, extended
// multiplicatively; legs (M_theta, forms).
TensorChain coaction(const Bialgebra& m, const FormAlgebra& f, const NCPoly& omega);

struct TopComponentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// delta(prod dzb dz) = det_theta (x) prod dzb dz
NCPoly det_theta(const Bialgebra& m, const FormAlgebra& f);

// sum_mu (abar^mu_al a^mu_be + b^mu_al bbar^mu_be) - delta_{al be},
// sum_mu (abar^mu_al b^mu_be + b^mu_al abar^mu_be),
// sum_mu (bbar^mu_al a^mu_be + a^mu_al bbar^mu_be); families 0, 1, 2,
// index family * n^2 + al * n + be.
std::vector<NCPoly> orthogonal_relations(const Bialgebra& m);

// delta(sum zb z) - 1 (x) sum zb z lies in the span of the (normal-formed)
// quotient relations leg by leg.  omit >= 0 drops that relation.
bool orthogonal_quotient_check(const Bialgebra& m, const FormAlgebra& f, int omit = -1);

struct DetSquareCertificate {
  bool in_ideal = false;
  std::size_t candidates = 0;  // ideal elements spanned
  std::size_t rank = 0;
};

// det^2 - 1 in the two-sided ideal of the orthogonal relations: searches the
// span of u J v, J a relation and u, v words read off from the classical
// identity det(L)^2 - 1 = (-1)^n (det(G + R) - det G), R = L^T G L - G.
DetSquareCertificate det_square_in_orthogonal_ideal(const Bialgebra& m, const NCPoly& det);

}  // namespace ncs
