#include "ncsphere/clifford.hpp"

#include "ncsphere/homology.hpp"

namespace ncs {

namespace {

Scalar lambda(const AngleMatrix& t, int mu, int nu) { return phase(t[mu][nu]); }

ScalarMatrix diag2(const Scalar& a, const Scalar& b) { return ScalarMatrix::from_rows({{a, 0}, {0, b}}); }

bool zero_or_identity(const ScalarMatrix& m, bool identity) {
  return identity ? m == ScalarMatrix::identity(m.rows()) : m.is_zero();
}

}  // namespace

ScalarMatrix pauli(int k) {
  const Scalar i = imag_unit();
  switch (k) {
    case 0:
      return ScalarMatrix::identity(2);
    case 1:
      return ScalarMatrix::from_rows({{0, 1}, {1, 0}});
    case 2:
      return ScalarMatrix::from_rows({{0, -i}, {i, 0}});
    case 3:
      return diag2(1, -1);
    default:
      throw std::invalid_argument("pauli: index must be 0..3");
  }
}

CliffordRep build_rep(int n, const AngleMatrix& theta) {
  if (n < 1 || static_cast<int>(theta.size()) != n || !is_antisymmetric(theta))
    throw std::invalid_argument("build_rep: need n >= 1 and antisymmetric n x n angles");
  CliffordRep rep;
  rep.n = n;
  rep.theta = theta;
  const ScalarMatrix raise = ScalarMatrix::from_rows({{0, 1}, {0, 0}});
  for (int mu = 0; mu < n; ++mu) {
    ScalarMatrix m = ScalarMatrix::identity(1);
    for (int k = 0; k < n; ++k) {
      if (k < mu)
        m = kron(m, diag2(-lambda(theta, k, mu), 1));
      else if (k == mu)
        m = kron(m, raise);
      else
        m = kron(m, ScalarMatrix::identity(2));
    }
    rep.GammaStar.push_back(m);
    rep.Gamma.push_back(m.adjoint());
  }
  rep.gamma = ScalarMatrix::identity(1);
  for (int k = 0; k < n; ++k) rep.gamma = kron(rep.gamma, diag2(1, -1));
  return rep;
}

bool check_rep_relations(const CliffordRep& rep) {
  const int n = rep.n;
  const auto& G = rep.Gamma;
  const auto& Gs = rep.GammaStar;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      const Scalar lmn = lambda(rep.theta, mu, nu), lnm = lambda(rep.theta, nu, mu);
      if (!(G[mu] * G[nu] + (G[nu] * G[mu]).scaled(lnm)).is_zero()) return false;
      if (!(Gs[mu] * Gs[nu] + (Gs[nu] * Gs[mu]).scaled(lnm)).is_zero()) return false;
      if (!zero_or_identity(Gs[mu] * G[nu] + (G[nu] * Gs[mu]).scaled(lmn), mu == nu)) return false;
    }
  ScalarMatrix prod = ScalarMatrix::identity(rep.gamma.rows());
  for (int mu = 0; mu < n; ++mu) prod = prod * (Gs[mu] * G[mu] - G[mu] * Gs[mu]);
  if (!(prod == rep.gamma)) return false;
  if (!(rep.gamma * rep.gamma == ScalarMatrix::identity(rep.gamma.rows()))) return false;
  for (int mu = 0; mu < n; ++mu) {
    if (!(rep.gamma * G[mu] + G[mu] * rep.gamma).is_zero()) return false;
    if (!(rep.gamma * Gs[mu] + Gs[mu] * rep.gamma).is_zero()) return false;
  }
  return true;
}

bool check_swapped_relations(const std::vector<ScalarMatrix>& G, const std::vector<ScalarMatrix>& Gb,
                             const AngleMatrix& theta) {
  const int n = static_cast<int>(G.size());
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      const Scalar lmn = lambda(theta, mu, nu), lnm = lambda(theta, nu, mu);
      if (!(G[mu] * G[nu] + (G[nu] * G[mu]).scaled(lmn)).is_zero()) return false;
      if (!(Gb[mu] * Gb[nu] + (Gb[nu] * Gb[mu]).scaled(lmn)).is_zero()) return false;
      if (!zero_or_identity(Gb[mu] * G[nu] + (G[nu] * Gb[mu]).scaled(lnm), mu == nu)) return false;
    }
  return true;
}

std::size_t commutant_dimension(const CliffordRep& rep) {
  const std::size_t d = rep.gamma.rows();
  std::vector<const ScalarMatrix*> gens;
  for (int mu = 0; mu < rep.n; ++mu) {
    gens.push_back(&rep.Gamma[mu]);
    gens.push_back(&rep.GammaStar[mu]);
  }
  // unknown X(a,b) is column a*d+b; equation (XA - AX)(i,j) = 0
  ScalarMatrix sys(gens.size() * d * d, d * d);
  std::size_t row = 0;
  for (const ScalarMatrix* A : gens)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row)
        for (std::size_t k = 0; k < d; ++k) {
          sys(row, i * d + k) += (*A)(k, j);
          sys(row, k * d + j) -= (*A)(i, k);
        }
  return d * d - matrix_rank(sys);
}

std::array<ScalarMatrix, 4> euclidean_gammas() {
  CliffordRep r = build_rep(2, zero_angles(2));
  const Scalar mi = -imag_unit();
  return {r.Gamma[0] + r.GammaStar[0], r.Gamma[1] + r.GammaStar[1], (r.Gamma[0] - r.GammaStar[0]).scaled(mi),
          (r.Gamma[1] - r.GammaStar[1]).scaled(mi)};
}

ScalarMatrix chirality(const std::array<ScalarMatrix, 4>& g) { return g[0] * g[1] * g[2] * g[3]; }

std::array<ScalarMatrix, 4> twisted_gammas(const AngleTriple& u) {
  auto g = euclidean_gammas();
  const ScalarMatrix chi = chirality(g);
  const ScalarMatrix one = ScalarMatrix::identity(4);
  std::array<ScalarMatrix, 4> t = g;
  for (int k = 1; k <= 3; ++k) {
    const PiAngle& p = u.phi[k - 1];
    t[k] = g[k] * (one.scaled(cos_pi(p)) - chi.scaled(imag_unit() * sin_pi(p)));
  }
  return t;
}

MatrixPoly gamma_field(const CliffordRep& rep, const GenSetPtr& g, const std::vector<int>& z,
                       const std::vector<int>& zb) {
  std::vector<std::pair<ScalarMatrix, NCPoly>> terms;
  for (int mu = 0; mu < rep.n; ++mu) {
    terms.emplace_back(rep.GammaStar[mu], NCPoly::gen(g, z[mu]));
    terms.emplace_back(rep.Gamma[mu], NCPoly::gen(g, zb[mu]));
  }
  return MatrixPoly::linear(g, terms);
}

MatrixPoly projection_e_theta(const Presentation& sphere, int n, const AngleMatrix& theta, int sign) {
  CliffordRep rep = build_rep(n, theta);
  const GenSetPtr& g = sphere.gens();
  std::vector<int> z, zb;
  for (int mu = 0; mu < n; ++mu) {
    z.push_back(sphere.index("z" + std::to_string(mu + 1)));
    zb.push_back(sphere.index("zb" + std::to_string(mu + 1)));
  }
  MatrixPoly f = gamma_field(rep, g, z, zb) + MatrixPoly::linear(g, {{rep.gamma, NCPoly::gen(g, sphere.index("x"))}});
  const Scalar half(Rational(1, 2));
  return (MatrixPoly::identity(g, f.size()) + f.scaled(Scalar(sign))).scaled(half);
}

namespace {

MatrixPoly odd_field(const Presentation& odd, int n, const AngleMatrix& theta, CliffordRep& rep) {
  rep = build_rep(n, theta);
  std::vector<int> z, zb;
  for (int mu = 0; mu < n; ++mu) {
    z.push_back(odd.index("z" + std::to_string(mu + 1)));
    zb.push_back(odd.index("zb" + std::to_string(mu + 1)));
  }
  return gamma_field(rep, odd.gens(), z, zb);
}

}  // namespace

MatrixPoly unitary_U_theta(const Presentation& odd_sphere, int n, const AngleMatrix& theta) {
  CliffordRep rep;
  MatrixPoly f = odd_field(odd_sphere, n, theta, rep);
  std::vector<std::size_t> plus, minus;
  for (std::size_t i = 0; i < rep.gamma.rows(); ++i) (rep.gamma(i, i) == Scalar(1) ? plus : minus).push_back(i);
  MatrixPoly U(odd_sphere.gens(), plus.size());
  for (std::size_t a = 0; a < plus.size(); ++a)
    for (std::size_t b = 0; b < minus.size(); ++b) U(a, b) = f(plus[a], minus[b]);
  return U;
}

TensorChain odd_chern_gamma_form(const Presentation& odd_sphere, int n, const AngleMatrix& theta, int m) {
  CliffordRep rep;
  MatrixPoly f = odd_field(odd_sphere, n, theta, rep);
  MatrixPoly gf = f;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) gf(i, j) = f(i, j) * rep.gamma(i, i);
  ChainMatrix x = as_chain_matrix(gf);
  for (int k = 1; k < 2 * m; ++k) x = circledcirc(x, f);
  return trace(x);
}

MatrixPoly unitary_U_u(const AngleTriple& u, const GenSetPtr& g) {
  std::vector<std::pair<ScalarMatrix, NCPoly>> terms{{pauli(0), NCPoly::gen(g, 0)}};
  for (int k = 1; k <= 3; ++k) terms.emplace_back(pauli(k).scaled(imag_unit() * phase(u.phi[k - 1])), NCPoly::gen(g, k));
  return MatrixPoly::linear(g, terms);
}

MatrixPoly projection_e_u(const AngleTriple& u, const Presentation& s4) {
  auto t = twisted_gammas(u);
  const GenSetPtr& g = s4.gens();
  std::vector<std::pair<ScalarMatrix, NCPoly>> terms{{ScalarMatrix::identity(4), s4.one()}};
  for (int mu = 0; mu < 4; ++mu) terms.emplace_back(t[mu], s4.gen(mu));
  terms.emplace_back(chirality(euclidean_gammas()), s4.gen(4));
  return MatrixPoly::linear(g, terms).scaled(Scalar(Rational(1, 2)));
}

bool lemma3_check(const AngleTriple& u, const Presentation& au, bool twisted) {
  auto t = twisted ? twisted_gammas(u) : euclidean_gammas();
  std::vector<std::pair<ScalarMatrix, NCPoly>> terms;
  for (int mu = 0; mu < 4; ++mu) terms.emplace_back(t[mu], au.gen(mu));
  MatrixPoly a = MatrixPoly::linear(au.gens(), terms);
  NCPoly r(au.gens());
  for (int mu = 0; mu < 4; ++mu) r += au.word(make_word({mu, mu}));
  MatrixPoly rhs = MatrixPoly::linear(au.gens(), {{ScalarMatrix::identity(4), r}});
  return matrix_mul(a, a, au).operator-(reduce_matrix(rhs, au)).is_zero();
}

bool lemma5_check(int n, const AngleMatrix& theta) {
  Presentation P = make_r2n_theta(n, theta);
  CliffordRep rep = build_rep(n, theta);
  const GenSetPtr& g = P.gens();
  std::vector<MatrixPoly> A, B;
  for (int mu = 0; mu < n; ++mu) {
    A.push_back(MatrixPoly::linear(g, {{rep.GammaStar[mu], P.gen(mu)}}));
    B.push_back(MatrixPoly::linear(g, {{rep.Gamma[mu], P.gen(n + mu)}}));
  }
  const std::size_t d = rep.gamma.rows();
  for (int mu = 0; mu < n; ++mu)
    for (int rho = 0; rho < n; ++rho) {
      if (!(matrix_mul(A[mu], A[rho], P) + matrix_mul(A[rho], A[mu], P)).is_zero()) return false;
      if (!(matrix_mul(B[mu], B[rho], P) + matrix_mul(B[rho], B[mu], P)).is_zero()) return false;
      MatrixPoly mixed = matrix_mul(A[mu], B[rho], P) + matrix_mul(B[rho], A[mu], P);
      if (mu == rho)
        mixed = mixed - MatrixPoly::linear(g, {{ScalarMatrix::identity(d), P.word(make_word({mu, n + mu}))}});
      if (!reduce_matrix(mixed, P).is_zero()) return false;
    }
  return true;
}

bool symbol_rep_check(int n, const AngleMatrix& theta) {
  AngleMatrix neg = theta;
  for (auto& row : neg)
    for (auto& a : row) a = -a;
  CliffordRep rep = build_rep(n, neg);
  return check_swapped_relations(rep.Gamma, rep.GammaStar, theta);
}

}  // namespace ncs
