#include "ncsphere/diffforms.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "ncsphere/clifford.hpp"

namespace ncs {

namespace {

std::vector<long> unit(int n, int i, long s) {
  std::vector<long> v(n, 0);
  v[i] = s;
  return v;
}

}  // namespace

FormAlgebra make_forms(int n, const AngleMatrix& theta, bool with_x) {
  if (n < 1 || static_cast<int>(theta.size()) != n) throw std::invalid_argument("make_forms: theta size");
  const int c = 2 * n + (with_x ? 1 : 0);  // coordinate count
  std::vector<PhaseGenerator> g;
  for (int m = 0; m < n; ++m) g.push_back({"z" + std::to_string(m + 1), n + m, unit(n, m, 1)});
  for (int m = 0; m < n; ++m) g.push_back({"zb" + std::to_string(m + 1), m, unit(n, m, -1)});
  if (with_x) g.push_back({"x", 2 * n, std::vector<long>(n, 0)});
  for (int m = 0; m < n; ++m) g.push_back({"dz" + std::to_string(m + 1), c + n + m, unit(n, m, 1), 1});
  for (int m = 0; m < n; ++m) g.push_back({"dzb" + std::to_string(m + 1), c + m, unit(n, m, -1), 1});
  if (with_x) g.push_back({"dx", c + 2 * n, std::vector<long>(n, 0), 1});

  FormAlgebra f(make_phase_presentation((with_x ? "Omega_R" + std::to_string(2 * n + 1) : "Omega_R" + std::to_string(2 * n)) +
                                            "_theta",
                                        g, theta));
  f.n = n;
  f.with_x = with_x;
  for (int m = 0; m < n; ++m) {
    f.z.push_back(m);
    f.zb.push_back(n + m);
    f.dz.push_back(c + m);
    f.dzb.push_back(c + n + m);
  }
  if (with_x) {
    f.x = 2 * n;
    f.dx = c + 2 * n;
  }
  f.d_of.assign(2 * c, -1);
  for (int i = 0; i < c; ++i) f.d_of[i] = c + i;
  for (const auto& pg : g) f.weight.push_back(pg.degree);
  return f;
}

FormAlgebra make_sphere_forms(int n, const AngleMatrix& theta) {
  FormAlgebra f = make_forms(n, theta, true);
  const Presentation& P = f.pres;
  NCPoly r = P.word(make_word({f.x, f.x})) - P.one();
  for (int m = 0; m < n; ++m) r += P.word(make_word({f.z[m], f.zb[m]}));
  NCPoly dr = differential(f, r);
  f.pres = complete(P, {r, dr}, 4);
  if (!check_confluence(f.pres, 4).empty()) throw ConfluenceFailure("sphere forms: not confluent at degree 4");
  f.pres.set_relations({r, dr});
  f.pres.set_name("Omega_S" + std::to_string(2 * n) + "_theta");
  return f;
}

int form_degree(const FormAlgebra& f, const Word& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += f.pres.gens()->parity(letter(w, i));
  return d;
}

NCPoly form_component(const FormAlgebra& f, const NCPoly& p, int degree) {
  NCPoly out(p.gens());
  for (const auto& [w, c] : p.terms())
    if (form_degree(f, w) == degree) out.add_term(w, c);
  return out;
}

NCPoly differential(const FormAlgebra& f, const NCPoly& p) {
  const auto& gs = f.pres.gens();
  NCPoly out(gs);
  for (const auto& [w, c] : p.terms()) {
    bool odd = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int g = letter(w, i);
      if (f.d_of[g] >= 0) {
        Word v = w;
        v[i] = static_cast<char>(f.d_of[g]);
        out.add_term(v, odd ? -c : c);
      }
      if (gs->parity(g)) odd = !odd;
    }
  }
  return f.pres.normal_form(out);
}

NCPoly graded_conj(const FormAlgebra& f, const NCPoly& p) {
  const auto& gs = f.pres.gens();
  NCPoly out(gs);
  for (const auto& [w, c] : p.terms()) {
    Word v(w.rbegin(), w.rend());
    for (auto& ch : v) ch = static_cast<char>(gs->star(static_cast<unsigned char>(ch)));
    const long m = form_degree(f, w);
    const bool neg = (m * (m - 1) / 2) % 2 != 0;
    out.add_term(v, neg ? -c.conj() : c.conj());
  }
  return f.pres.normal_form(out);
}

NCPoly top_form(const FormAlgebra& f) {
  Word w;
  for (int m = 0; m < f.n; ++m) {
    w.push_back(static_cast<char>(f.dzb[m]));
    w.push_back(static_cast<char>(f.dz[m]));
  }
  return f.pres.normal_form(f.pres.word(w));
}

std::vector<NCPoly> invariant_forms(const FormAlgebra& f) {
  std::vector<NCPoly> out;
  for (int m = 0; m < f.n; ++m) {
    out.push_back(f.pres.normal_form_word(make_word({f.zb[m], f.dz[m]})));
    out.push_back(f.pres.normal_form_word(make_word({f.dzb[m], f.dz[m]})));
  }
  return out;
}

bool is_graded_central(const FormAlgebra& f, const NCPoly& p) {
  if (p.is_zero()) return true;
  const int q = form_degree(f, p.terms().begin()->first);
  for (const auto& [w, c] : p.terms())
    if (form_degree(f, w) != q) throw std::invalid_argument("is_graded_central: inhomogeneous form");
  const auto& gs = f.pres.gens();
  for (std::size_t g = 0; g < gs->size(); ++g) {
    NCPoly x = f.pres.gen(static_cast<int>(g));
    const bool neg = q % 2 && gs->parity(static_cast<int>(g));
    NCPoly comm = ncs::mul(p, x) - (neg ? Scalar(-1) : Scalar(1)) * ncs::mul(x, p);
    if (!f.pres.reduces_to_zero(comm)) return false;
  }
  return true;
}

namespace {

using CMat = Eigen::Matrix4cd;

CMat to_complex(const ScalarMatrix& m) {
  CMat out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m(i, j).embed().value();
  return out;
}

}  // namespace

SelfDualityResult selfduality_numeric_s4(std::size_t samples, std::uint64_t seed, int sign, bool constant,
                                         int orientation) {
  const CliffordRep rep = build_rep(2, zero_angles(2));
  const CMat Gs[2] = {to_complex(rep.GammaStar[0]), to_complex(rep.GammaStar[1])};
  const CMat G[2] = {to_complex(rep.Gamma[0]), to_complex(rep.Gamma[1])};
  const CMat gam = to_complex(rep.gamma);
  const std::complex<double> I(0, 1);

  // e = 1/2 (1 + sum_a X_a E_a), E_a the coefficient of X_a
  std::array<CMat, 5> E;
  E[0] = Gs[0] + G[0];
  E[1] = I * (Gs[0] - G[0]);
  E[2] = Gs[1] + G[1];
  E[3] = I * (Gs[1] - G[1]);
  E[4] = static_cast<double>(sign) * gam;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  SelfDualityResult res;
  while (res.samples.size() < samples) {
    Eigen::Matrix<double, 5, 1> X;
    for (int a = 0; a < 5; ++a) X(a) = normal(rng);
    if (X.norm() < 1e-6) {
      ++res.resampled;
      continue;
    }
    X.normalize();

    // Gram-Schmidt on the coordinate axes against the normal
    std::vector<Eigen::Matrix<double, 5, 1>> basis{X};
    for (int a = 0; a < 5 && basis.size() < 5; ++a) {
      Eigen::Matrix<double, 5, 1> v = Eigen::Matrix<double, 5, 1>::Unit(a);
      for (const auto& b : basis) v -= v.dot(b) * b;
      if (v.norm() < 1e-3) continue;
      basis.push_back(v.normalized());
    }
    if (basis.size() < 5) {
      ++res.resampled;
      continue;
    }
    Eigen::Matrix<double, 5, 5> frame;
    for (int k = 0; k < 5; ++k) frame.col(k) = basis[k];
    if (frame.determinant() * orientation < 0) basis[4] = -basis[4];

    CMat e = CMat::Identity();
    if (constant) {
      e = 0.5 * (CMat::Identity() + gam);
    } else {
      for (int a = 0; a < 5; ++a) e += X(a) * E[a];
      e *= 0.5;
    }
    std::array<CMat, 4> de;
    for (int t = 0; t < 4; ++t) {
      de[t] = CMat::Zero();
      if (!constant)
        for (int a = 0; a < 5; ++a) de[t] += 0.5 * basis[t + 1](a) * E[a];
    }
    CMat F[4][4];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) F[a][b] = e * (de[a] * de[b] - de[b] * de[a]);
    // (*F)_ab = 1/2 eps_abcd F_cd in the oriented frame
    const CMat star[6] = {F[2][3], -F[1][3], F[1][2], F[0][3], -F[0][2], F[0][1]};
    const CMat plain[6] = {F[0][1], F[0][2], F[0][3], F[1][2], F[1][3], F[2][3]};
    double r = 0.0;
    for (int k = 0; k < 6; ++k) {
      // expected *F = sign i^2 F = -sign F
      CMat diff = star[k] + static_cast<double>(sign) * plain[k];
      r = std::max(r, diff.cwiseAbs().maxCoeff());
    }
    res.max_residual = std::max(res.max_residual, r);
    res.samples.push_back({X(0), X(1), X(2), X(3), X(4), r});
  }
  return res;
}

}  // namespace ncs
