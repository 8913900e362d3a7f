#pragma once

#include <array>
#include <vector>

#include "ncsphere/ncalg.hpp"
#include "ncsphere/rewrite.hpp"

namespace ncs {

struct CliffordRep {
  int n = 0;
  AngleMatrix theta;
  std::vector<ScalarMatrix> Gamma;      // Gamma^mu
  std::vector<ScalarMatrix> GammaStar;  // Gamma^{mu*}
  ScalarMatrix gamma;
};

// Tensor-product representation on (C^2)^{(x)n}: Gamma^{mu*} carries the
// factors diag(-lambda^{k mu}, 1) for k < mu, then [[0,1],[0,0]], then 1.
CliffordRep build_rep(int n, const AngleMatrix& theta);

// Relations Gamma Gamma + lambda^{nu mu} Gamma Gamma = 0 (and starred),
// Gamma^{mu*} Gamma^nu + lambda^{mu nu} Gamma^nu Gamma^{mu*} = delta,
// gamma^2 = 1 and gamma anticommuting with every Gamma.
bool check_rep_relations(const CliffordRep& rep);
// The same three families with lambda^{mu nu} and lambda^{nu mu} exchanged,
// for the matrices G (unstarred) and Gb (starred) and angles theta.
bool check_swapped_relations(const std::vector<ScalarMatrix>& G, const std::vector<ScalarMatrix>& Gb,
                             const AngleMatrix& theta);
// Dimension of the commutant of the represented algebra (1 for irreducible).
std::size_t commutant_dimension(const CliffordRep& rep);

// Hermitian generators gamma_0..gamma_3 of Cliff(R^4) and gamma = g0 g1 g2 g3.
std::array<ScalarMatrix, 4> euclidean_gammas();
ScalarMatrix chirality(const std::array<ScalarMatrix, 4>& g);
// gamma~_0 = gamma_0, gamma~_k = gamma_k (cos phi_k - i sin phi_k gamma)
std::array<ScalarMatrix, 4> twisted_gammas(const AngleTriple& u);

// sum_mu (Gamma^{mu*} z^mu + Gamma^mu zb^mu) over generator indices z[mu], zb[mu]
MatrixPoly gamma_field(const CliffordRep& rep, const GenSetPtr& g, const std::vector<int>& z,
                       const std::vector<int>& zb);

// e = 1/2 (1 + sign (sum Gamma^{mu*} u^mu + Gamma^mu ub^mu + gamma u)) over S^{2n}_theta.
MatrixPoly projection_e_theta(const Presentation& sphere, int n, const AngleMatrix& theta, int sign = 1);
// Upper-right block of the gamma field in a basis where gamma = diag(1, -1),
// over S^{2n-1}_theta (interleaved generators).
MatrixPoly unitary_U_theta(const Presentation& odd_sphere, int n, const AngleMatrix& theta);
// tr(gamma Gamma^{⊛ 2m}) with Gamma the gamma field over the odd sphere.
TensorChain odd_chern_gamma_form(const Presentation& odd_sphere, int n, const AngleMatrix& theta, int m);

// U = 1 x^0 + i sum_k e^{i phi_k} sigma_k x^k over generators x0..x3 of g.
MatrixPoly unitary_U_u(const AngleTriple& u, const GenSetPtr& g);
// e = 1/2 (1 + gamma~_mu x^mu + gamma x^4) over S^4_u.
MatrixPoly projection_e_u(const AngleTriple& u, const Presentation& s4);

// (gamma~_mu x^mu)^2 - 1 (x) sum (x^mu)^2 reduces to zero in A_u.
bool lemma3_check(const AngleTriple& u, const Presentation& au, bool twisted = true);
// The anticommutation identities of Gamma^{mu*} z^mu and Gamma^rho zb^rho.
bool lemma5_check(int n, const AngleMatrix& theta);
// The swapped-twist family realised by build_rep(n, -theta).
bool symbol_rep_check(int n, const AngleMatrix& theta);

ScalarMatrix pauli(int k);  // k = 0 gives the identity

}  // namespace ncs
