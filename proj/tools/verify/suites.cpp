#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "ncsphere/clifford.hpp"
#include "ncsphere/diffforms.hpp"
#include "ncsphere/grassmann.hpp"
#include "ncsphere/homology.hpp"
#include "ncsphere/moduli.hpp"
#include "ncsphere/qgroup.hpp"
#include "ncsphere/splitting.hpp"

namespace ncs::verify {

namespace {

// Tolerances of the numeric suites.
constexpr double kZeroTol = 1e-14;
constexpr double kJFlowTol = 1e-8;
constexpr double kjFlowRelTol = 1e-6;
constexpr double kSklyaninTol = 1e-10;
constexpr double kConstraintTol = 1e-12;
constexpr double kSelfDualTol = 1e-8;

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  // fn returns (pass, got); exceptions become failures.
  void check(const std::string& name, const std::string& claim, const std::string& expected,
             const std::function<std::pair<bool, std::string>()>& fn) {
    Check c{suite_, name, claim, expected, "", false, 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto [ok, got] = fn();
      c.pass = ok;
      c.got = std::move(got);
    } catch (const std::exception& e) {
      c.pass = false;
      c.got = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(c));
  }

  std::vector<Check> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<Check> out_;
};

std::pair<bool, std::string> flag(bool ok) { return {ok, ok ? "true" : "false"}; }

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

double radians(const PiAngle& a) { return a.radians(); }
Angles3 to_radians(const AngleTriple& u) { return {radians(u.phi[0]), radians(u.phi[1]), radians(u.phi[2])}; }

std::vector<AngleTriple> sample_points(const SuiteOptions& opt, std::size_t count, std::uint64_t salt) {
  if (opt.u) return {*opt.u};
  return generic_rational_points(count, opt.seed * 1000003ULL + salt);
}

// (k, l, m) cyclic, k = 1..3
std::array<int, 3> cyc(int k) { return {k, k % 3 + 1, (k + 1) % 3 + 1}; }

// The displayed cycle for ch_{3/2}(U_u): signed sum over permutations of
// cos(phi_a - phi_b + phi_c - phi_d) x^a (x) x^b (x) x^c (x) x^d plus the
// i sin 2(phi_m - phi_n) x^m (x) x^n (x) x^m (x) x^n terms.
TensorChain displayed_ch32(const AngleTriple& u) {
  const PiAngle ph[4] = {PiAngle(0, 1), u.phi[0], u.phi[1], u.phi[2]};
  TensorChain aan(4);
  int perm[4] = {0, 1, 2, 3};
  do {
    int sgn = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) sgn = -sgn;
    const PiAngle a = ph[perm[0]] - ph[perm[1]] + ph[perm[2]] - ph[perm[3]];
    aan.add_term({make_word({perm[0]}), make_word({perm[1]}), make_word({perm[2]}), make_word({perm[3]})},
                 Scalar(-sgn) * cos_pi(a));
  } while (std::next_permutation(perm, perm + 4));
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      aan.add_term({make_word({m}), make_word({n}), make_word({m}), make_word({n})},
                   imag_unit() * sin_pi((ph[m] - ph[n]).scaled(2)));
  return aan;
}

// Normalization between the raw ch_{3/2} chain and the displayed cycle.
const Scalar kCh32Scale(-4);

NCPoly second_central_element(const AngleTriple& u, const Presentation& A) {
  NCPoly c(A.gens());
  for (int k = 1; k <= 3; ++k) {
    auto [kk, l, m] = cyc(k);
    const PiAngle pk = u.phi[kk - 1];
    const Scalar coef = cos_pi(pk - u.phi[l - 1] - u.phi[m - 1]) * cos_pi(pk) * sin_pi(pk);
    c += A.word(make_word({kk, kk}), coef);
  }
  return c;
}

NCPoly radius_central_element(const AngleTriple& u, const Presentation& A) {
  NCPoly s(A.gens());
  for (int m = 0; m < 4; ++m) {
    const NCPoly z = A.gen(m, m == 0 ? Scalar(1) : phase(u.phi[m - 1]));
    s += star(z) * z;
  }
  return s;
}

std::string dims_str(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Built-in presentations for the relation / confluence suites, with the
// degree up to which overlaps are checked.
struct Builtin {
  std::string label;
  std::function<Presentation()> build;
  int overlap_degree;
};

std::vector<Builtin> builtins(const SuiteOptions& opt) {
  std::vector<Builtin> out;
  for (const auto& u : sample_points(opt, 10, 11))
    out.push_back({"A_u" + format_triple(u), [u] { return make_a_u(u, 4); }, 3});
  for (int n = 1; n <= 3; ++n) {
    const AngleMatrix th = random_theta(n, opt.seed + n);
    out.push_back({"R^" + std::to_string(2 * n) + "_theta", [n, th] { return make_r2n_theta(n, th); }, 3});
    out.push_back({"S^" + std::to_string(2 * n) + "_theta", [n, th] { return make_even_sphere(n, th); }, 4});
    if (n >= 2) {
      out.push_back({"S^" + std::to_string(2 * n - 1) + "_theta", [n, th] { return make_odd_sphere(n, th); }, 4});
      out.push_back({"T^" + std::to_string(n) + "_theta", [n, th] { return make_torus(n, th); }, 3});
    }
  }
  {
    const AngleTriple u = sample_points(opt, 1, 12).front();
    out.push_back({"Sklyanin S(J(u))" + format_triple(u), [u] { return make_sklyanin(sklyanin_j(u)); }, 3});
  }
  {
    const AngleMatrix th = random_theta(2, opt.seed + 7);
    out.push_back({"M_theta(4,R)", [th] { return make_m_theta(2, th).pres; }, 3});
  }
  return out;
}

std::vector<Check> suite_relations(const SuiteOptions& opt) {
  Recorder r("relations");
  for (const auto& b : builtins(opt)) {
    r.check(b.label, "every defining relation reduces to zero", "0 nonzero", [&] {
      const Presentation p = b.build();
      std::size_t bad = 0;
      for (const auto& rel : p.relations())
        if (!p.reduces_to_zero(rel)) ++bad;
      return std::pair{bad == 0 && !p.relations().empty(),
                       std::to_string(bad) + " nonzero of " + std::to_string(p.relations().size())};
    });
  }
  return r.take();
}

std::vector<Check> suite_confluence(const SuiteOptions& opt) {
  Recorder r("confluence");
  for (const auto& b : builtins(opt)) {
    r.check(b.label, "no unresolved overlap up to degree " + std::to_string(b.overlap_degree), "0 overlaps", [&] {
      const Presentation p = b.build();
      const auto bad = check_confluence(p, b.overlap_degree);
      return std::pair{bad.empty(), std::to_string(bad.size()) + " overlaps"};
    });
  }
  for (const auto& u : sample_points(opt, 3, 21)) {
    std::vector<std::size_t> want;
    for (int d = 0; d <= 6; ++d) want.push_back(binom(d + 3, 3));
    r.check("PBW A_u" + format_triple(u), "graded dimensions are C(d+3,3) for d <= 6", dims_str(want), [&] {
      const Presentation A = make_a_u(u, 6);
      std::vector<std::size_t> got;
      for (int d = 0; d <= 6; ++d) got.push_back(graded_dimension(A, d));
      return std::pair{got == want, dims_str(got)};
    });
  }
  {
    const AngleMatrix th = random_theta(2, opt.seed + 2);
    std::vector<std::size_t> want;
    for (int d = 0; d <= 6; ++d) want.push_back(binom(d + 3, 3));
    r.check("PBW R^4_theta", "graded dimensions match the commutative count for d <= 6", dims_str(want), [&] {
      const Presentation P = make_r2n_theta(2, th);
      std::vector<std::size_t> got;
      for (int d = 0; d <= 6; ++d) got.push_back(graded_dimension(P, d));
      return std::pair{got == want, dims_str(got)};
    });
  }
  return r.take();
}

std::vector<Check> suite_chern(const SuiteOptions& opt) {
  Recorder r("chern");
  const auto g = au_generators();
  for (const auto& u : generic_rational_points(opt.u ? 0 : 20, opt.seed * 31 + 1, {5, 7, 8, 9, 12})) {
    r.check("ch_1/2 " + format_triple(u), "ch_1/2(U_u) = 0", "0 terms", [&] {
      const auto c = reduce_chain(ch_odd(unitary_U_u(u, g), 0, nullptr), nullptr);
      return std::pair{c.is_zero(), std::to_string(c.size()) + " terms"};
    });
  }
  for (const auto& u : sample_points(opt, 5, 32)) {
    const Presentation A = make_a_u(u, 4);
    const MatrixPoly U = unitary_U_u(u, A.gens());
    r.check("ch_1/2 in A_u " + format_triple(u), "ch_1/2(U_u) = 0 with entries reduced in A_u", "0 terms", [&] {
      const auto c = reduce_chain(ch_odd(U, 0, &A), &A);
      return std::pair{c.is_zero(), std::to_string(c.size()) + " terms"};
    });
    const TensorChain c32 = reduce_chain(ch_odd(U, 1, &A), &A);
    r.check("ch_3/2 cycle " + format_triple(u), "ch_3/2(U_u) = -4 times the displayed cycle, term by term",
            "difference 0 terms", [&] {
              const TensorChain diff = c32 - kCh32Scale * displayed_ch32(u);
              return std::pair{diff.is_zero() && !c32.is_zero(), "difference " + std::to_string(diff.size()) +
                                                                      " terms, ch has " + std::to_string(c32.size())};
            });
    r.check("b ch_3/2 " + format_triple(u), "ch_3/2(U_u) is a Hochschild cycle", "0 terms", [&] {
      const auto b = boundary_b(c32, A);
      return std::pair{b.is_zero(), std::to_string(b.size()) + " terms"};
    });
    r.check("b B ch_3/2 " + format_triple(u), "B ch_3/2(U_u) is a Hochschild cycle", "0 terms", [&] {
      const auto b = boundary_b(operator_B_on_cyclic(c32), A);
      return std::pair{b.is_zero() && is_cyclic(c32), std::to_string(b.size()) + " terms"};
    });
  }
  for (const auto& u : {AngleTriple{{PiAngle(1, 2), PiAngle(1, 2), PiAngle(1, 2)}},
                        AngleTriple{{PiAngle(1, 2), PiAngle(0, 1), PiAngle(0, 1)}}}) {
    r.check("ch_3/2 " + format_triple(u), "ch_3/2(U_u) = 0 at this critical point", "0 terms", [&] {
      const auto c = reduce_chain(ch_odd(unitary_U_u(u, g), 1, nullptr), nullptr);
      return std::pair{c.is_zero(), std::to_string(c.size()) + " terms"};
    });
  }
  return r.take();
}

std::vector<Check> suite_clifford(const SuiteOptions& opt) {
  Recorder r("clifford");
  for (int n : {2, 3}) {
    for (int s = 0; s < 5; ++s) {
      const AngleMatrix th = random_theta(n, opt.seed * 97 + n * 10 + s);
      const std::string tag = " n=" + std::to_string(n) + " #" + std::to_string(s);
      r.check("representation" + tag, "twisted Clifford relations hold in the tensor representation", "true",
              [&] { return flag(check_rep_relations(build_rep(n, th))); });
      const Presentation S = make_even_sphere(n, th);
      const MatrixPoly e = projection_e_theta(S, n, th);
      r.check("projection" + tag, "e = e* = e^2 over S^2n_theta", "true", [&] {
        const MatrixPoly e2 = matrix_mul(e, e, S);
        const MatrixPoly es = reduce_matrix(star(e), S);
        return flag((e2 - e).is_zero() && (es - e).is_zero());
      });
      r.check("even chern" + tag, "ch_m(e) = 0 for m < n and ch_n(e) != 0", "zero below n, nonzero at n", [&] {
        std::string got;
        bool ok = true;
        for (int m = 0; m <= n; ++m) {
          const auto c = reduce_chain(ch_even(e, m, &S), &S);
          got += (m ? "," : "") + std::to_string(c.size());
          ok = ok && (m < n ? c.is_zero() : !c.is_zero());
        }
        return std::pair{ok, "terms " + got};
      });
      const Presentation O = make_odd_sphere(n, th);
      const MatrixPoly V = unitary_U_theta(O, n, th);
      r.check("unitary" + tag, "U U* = U* U = 1 over S^2n-1_theta", "true", [&] {
        const MatrixPoly I = MatrixPoly::identity(O.gens(), V.size());
        const MatrixPoly Vs = star(V);
        return flag((matrix_mul(V, Vs, O) - I).is_zero() && (matrix_mul(Vs, V, O) - I).is_zero());
      });
      r.check("odd chern" + tag, "ch_{m-1/2}(U) = 0 for m < n and equals tr(gamma Gamma^{2m}) for m <= n",
              "true", [&] {
                bool ok = true;
                std::string got;
                for (int m = 1; m <= n; ++m) {
                  const auto c = reduce_chain(ch_odd(V, m - 1, &O), &O);
                  const auto gf = reduce_chain(odd_chern_gamma_form(O, n, th, m), &O);
                  got += (m > 1 ? "," : "") + std::to_string(c.size());
                  ok = ok && c == gf && (m < n ? c.is_zero() : !c.is_zero());
                }
                return std::pair{ok, "terms " + got};
              });
      r.check("anticommutation" + tag, "Gamma^{mu*} z^mu and Gamma^rho zb^rho anticommute up to delta z zb",
              "true", [&] { return flag(lemma5_check(n, th)); });
      r.check("symbol relations" + tag, "the swapped-twist Clifford family is realised", "true",
              [&] { return flag(symbol_rep_check(n, th)); });
    }
  }
  for (const auto& u : sample_points(opt, 5, 41)) {
    const Presentation A = make_a_u(u, 4);
    r.check("center z*z " + format_triple(u), "sum z^{mu*} z^mu is central in A_u", "true",
            [&] { return flag(is_central(radius_central_element(u, A), A)); });
    r.check("center second " + format_triple(u), "sum cos(phi_k-phi_l-phi_m) cos phi_k sin phi_k (x^k)^2 is central",
            "true", [&] { return flag(is_central(second_central_element(u, A), A)); });
    r.check("gamma square " + format_triple(u), "(gamma~_mu x^mu)^2 = 1 (x) sum (x^mu)^2 in A_u", "true",
            [&] { return flag(lemma3_check(u, A)); });
  }
  return r.take();
}

// Classical determinant by permutation expansion over the commuting M_0.
NCPoly leibniz_det(const Bialgebra& m) {
  const int n = m.n, N = 2 * n;
  // rows / columns ordered dzb^1, dz^1, ..., dzb^n, dz^n
  auto entry = [&](int i, int j) {
    const int mu = i / 2, nu = j / 2;
    const bool rb = i % 2 == 0, cb = j % 2 == 0;
    if (rb) return cb ? m.abar(mu, nu) : m.bbar(mu, nu);
    return cb ? m.b(mu, nu) : m.a(mu, nu);
  };
  std::vector<int> perm(N);
  for (int i = 0; i < N; ++i) perm[i] = i;
  NCPoly det(m.pres.gens());
  do {
    int inv = 0;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) inv += perm[i] > perm[j];
    Word w;
    for (int i = 0; i < N; ++i) w.push_back(static_cast<char>(entry(i, perm[i])));
    det += m.pres.normal_form_word(w) * Scalar(inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<Check> suite_det(const SuiteOptions& opt) {
  Recorder r("det");
  const int n = 2;
  const AngleMatrix th = random_theta(n, opt.seed + 7);
  const Bialgebra M = make_m_theta(n, th);
  const FormAlgebra F = make_forms(n, th);
  r.check("coassociativity", "(Delta (x) I) Delta = (I (x) Delta) Delta on all generators", "true", [&] {
    bool ok = true;
    for (int g = 0; g < 4 * n * n; ++g) {
      const auto d = coproduct(M, M.pres.gen(g));
      ok = ok && coproduct_on_leg(M, d, 0) == coproduct_on_leg(M, d, 1);
    }
    return flag(ok);
  });
  r.check("counit", "(eps (x) I) Delta = id = (I (x) eps) Delta on all generators", "true", [&] {
    bool ok = true;
    for (int g = 0; g < 4 * n * n; ++g) {
      const auto d = coproduct(M, M.pres.gen(g));
      ok = ok && counit_left(M, d) == M.pres.gen(g) && counit_right(M, d) == M.pres.gen(g);
    }
    return flag(ok);
  });
  r.check("coproduct on relations", "Delta and eps vanish on the defining relations", "true", [&] {
    bool ok = true;
    for (const auto& rel : M.pres.relations()) ok = ok && coproduct(M, rel).is_zero() && counit(M, rel).is_zero();
    return flag(ok);
  });
  r.check("coaction on relations", "the coaction vanishes on the relations of the forms", "true", [&] {
    bool ok = true;
    for (const auto& rel : F.pres.relations()) ok = ok && coaction(M, F, rel).is_zero();
    return flag(ok);
  });
  const NCPoly det = det_theta(M, F);
  r.check("det central", "det_theta commutes with every generator", "true", [&] { return flag(is_central(det, M.pres)); });
  r.check("det hermitian", "det_theta* = det_theta", "true",
          [&] { return flag(M.pres.normal_form(star(det)) == det); });
  r.check("det grouplike", "Delta det = det (x) det and eps(det) = 1", "true", [&] {
    return flag(coproduct(M, det) == TensorChain::tensor({det, det}) && counit(M, det) == Scalar(1));
  });
  r.check("det classical", "det_theta at theta = 0 is the permutation-expansion determinant", "equal", [&] {
    const Bialgebra M0 = make_m_theta(n, zero_angles(n));
    const NCPoly d0 = det_theta(M0, make_forms(n, zero_angles(n)));
    const NCPoly ref = leibniz_det(M0);
    return std::pair{d0 == ref, d0 == ref ? "equal" : "differ by " + std::to_string((d0 - ref).size()) + " terms"};
  });
  r.check("orthogonal quotient", "the quotient relations make the coaction preserve sum zb z", "true",
          [&] { return flag(orthogonal_quotient_check(M, F)); });
  r.check("det squared", "(det_theta)^2 - 1 lies in the orthogonal ideal", "certificate found", [&] {
    const auto c = det_square_in_orthogonal_ideal(M, det);
    return std::pair{c.in_ideal, std::string(c.in_ideal ? "certificate found" : "no certificate") + " (rank " +
                                     std::to_string(c.rank) + " of " + std::to_string(c.candidates) + ")"};
  });
  return r.take();
}

std::vector<Check> suite_splitting(const SuiteOptions& opt) {
  Recorder r("splitting");
  const int n = 2;
  const AngleMatrix th = random_theta(n, opt.seed + 3);
  const Presentation P = make_r2n_theta(n, th);
  const Splitter sp = splitter_plane(n, th);
  r.check("plane relations", "st maps every relation of R^4_theta to zero", "true",
          [&] { return flag(split_relations_vanish(sp, P)); });
  r.check("plane phase", "st(z2 z1) = lambda^21 st(z1 z2)", "true", [&] {
    return flag(st(sp, P.word(make_word({1, 0}))) == phase(th[1][0]) * st(sp, P.word(make_word({0, 1}))));
  });
  r.check("plane injectivity", "images of the normal words of degree <= 5 are independent", "full rank", [&] {
    std::string got;
    bool ok = true;
    for (const auto& x : injectivity_ranks(sp, P, 5)) {
      got += (got.empty() ? "" : ",") + std::to_string(x.rank) + "/" + std::to_string(x.words);
      ok = ok && x.rank == x.words && x.words == binom(x.degree + 2 * n - 1, x.degree);
    }
    return std::pair{ok, got};
  });
  const Presentation S = make_even_sphere(n, th);
  const Splitter ss = splitter_sphere(n, th, true);
  r.check("sphere relations", "st maps every relation of S^4_theta to zero", "true",
          [&] { return flag(split_relations_vanish(ss, S)); });
  r.check("sphere injectivity", "images of the normal words of degree <= 5 are independent", "full rank", [&] {
    std::string got;
    bool ok = true;
    for (const auto& x : injectivity_ranks(ss, S, 5)) {
      got += (got.empty() ? "" : ",") + std::to_string(x.rank) + "/" + std::to_string(x.words);
      ok = ok && x.rank == x.words;
    }
    return std::pair{ok, got};
  });
  {
    const AngleMatrix th3 = random_theta(3, opt.seed + 5);
    r.check("odd sphere relations", "st maps every relation of S^5_theta to zero", "true",
            [&] { return flag(split_relations_vanish(splitter_sphere(3, th3, false), make_odd_sphere(3, th3))); });
  }
  const Bialgebra M = make_m_theta(n, th);
  const FormAlgebra F = make_forms(n, th);
  const Splitter sq = splitter_qgroup(n, th);
  r.check("qgroup relations", "st maps every relation of M_theta(4,R) to zero", "true",
          [&] { return flag(split_relations_vanish(sq, M.pres)); });
  r.check("qgroup det", "st(det_theta) = det (x) 1 (x) 1", "true", [&] {
    const NCPoly det = det_theta(M, F);
    const NCPoly det0 = det_theta(make_m_theta(n, zero_angles(n)), make_forms(n, zero_angles(n)));
    return flag(st(sq, det) == classical_part(sq, det0));
  });
  const Splitter sf = splitter_forms(n, th);
  r.check("forms relations", "st maps every relation of Omega(R^4_theta) to zero", "true",
          [&] { return flag(split_relations_vanish(sf, F.pres)); });
  r.check("forms differential", "st d = (d (x) I) st on words of length <= 2", "true", [&] {
    const FormAlgebra F0 = make_forms(n, zero_angles(n));
    bool ok = true;
    const int G = static_cast<int>(F.pres.gens()->size());
    for (int a = 0; a < G; ++a)
      for (int b = 0; b < G; ++b) {
        const NCPoly w = F.pres.normal_form_word(make_word({a, b}));
        ok = ok && st(sf, differential(F, w)) == split_differential(F0, st(sf, w)) &&
             diagonal_invariant(sf, st(sf, w));
      }
    return flag(ok);
  });
  return r.take();
}

std::vector<Check> suite_moduli_flow(const SuiteOptions& opt) {
  Recorder r("moduli-flow");
  const double pi = std::numbers::pi, h = pi / 2;
  auto norm = [](const Angles3& z) { return std::max({std::abs(z[0]), std::abs(z[1]), std::abs(z[2])}); };
  r.check("Z critical set", "Z vanishes on C+, C- and the W-orbit of P", "<= " + sci(kZeroTol), [&] {
    double worst = 0;
    for (double s : {0.1, 0.6, 1.3, 2.2}) {
      worst = std::max(worst, norm(vector_field_Z({s, s, 0})));
      worst = std::max(worst, norm(vector_field_Z({h + s, h, s})));
    }
    for (const auto& v : weyl_orbit({h, h, h})) worst = std::max(worst, norm(vector_field_Z(v)));
    return std::pair{worst <= kZeroTol, sci(worst)};
  });
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ang(0.0, pi);
  std::vector<Angles3> generic;
  while (generic.size() < 20) {
    const Angles3 u{ang(rng), ang(rng), ang(rng)};
    try {
      if (classify(u, 1e-3) == CaseLabel::GENERIC && std::abs(delta_of(u)) > 1e-3) {
        (void)j_of(u);
        generic.push_back(u);
      }
    } catch (const std::exception&) {
    }
  }
  r.check("Z nonzero", "Z does not vanish at random generic points", "> 0", [&] {
    double least = 1e300;
    for (const auto& u : generic) least = std::min(least, norm(vector_field_Z(u)));
    return std::pair{least > 0, "min " + sci(least)};
  });
  r.check("J constraint", "J12 + J23 + J31 + J12 J23 J31 = 0", "<= " + sci(kConstraintTol), [&] {
    double worst = 0;
    for (const auto& u : generic) worst = std::max(worst, std::abs(j_constraint_residual(j_of(u))));
    return std::pair{worst <= kConstraintTol, sci(worst)};
  });
  r.check("s system", "the s^mu solve the three quadratic equations with prod s = -delta", "<= " + sci(kConstraintTol),
          [&] {
            double worst = 0;
            for (const auto& u : generic) {
              const auto s = s_coeffs(u);
              for (double x : s_system_residuals(u, s)) worst = std::max(worst, x);
              worst = std::max(worst, std::abs(s[0] * s[1] * s[2] * s[3] + delta_of(u)));
            }
            return std::pair{worst <= kConstraintTol, sci(worst)};
          });
  r.check("Sklyanin form", "S = s x turns the A_u relations into the Sklyanin relations with J", "<= " + sci(kSklyaninTol),
          [&] {
            double worst = 0;
            for (const auto& u : generic) {
              const auto res = sklyanin_residual(u);
              worst = std::max({worst, res.anticommutator, res.commutator});
            }
            return std::pair{worst <= kSklyaninTol, sci(worst)};
          });
  const Angles3 u0{pi / 3, pi / 4, pi / 5};
  r.check("flow invariants", "J, lambda and j are constant along the RK4 orbit, t in [0,10], dt = 1e-3",
          "J <= " + sci(kJFlowTol) + ", lambda and j rel <= " + sci(kjFlowRelTol), [&] {
            const auto path = flow_path(u0, 10.0, 1e-3, 100);
            const auto& s0 = path.front();
            double dJ = 0, dl = 0, dj = 0;
            bool defined = true;
            for (const auto& s : path) {
              defined = defined && s.invariants_defined;
              dJ = std::max({dJ, std::abs(s.J.j12 - s0.J.j12), std::abs(s.J.j23 - s0.J.j23),
                             std::abs(s.J.j31 - s0.J.j31)});
              dl = std::max(dl, std::abs(s.lambda - s0.lambda) / std::abs(s0.lambda));
              dj = std::max(dj, std::abs(s.j - s0.j) / std::abs(s0.j));
            }
            const bool ok = defined && dJ <= kJFlowTol && dl <= kjFlowRelTol && dj <= kjFlowRelTol;
            return std::pair{ok, "J " + sci(dJ) + ", lambda rel " + sci(dl) + ", j rel " + sci(dj)};
          });
  r.check("flow at critical point", "the flow fixes a critical point", "<= 1e-12", [&] {
    const Angles3 c{0.7, 0.7, 0.0};
    const Angles3 v = flow(c, 5.0, 1e-3);
    const double d = std::max({std::abs(v[0] - c[0]), std::abs(v[1] - c[1]), std::abs(v[2] - c[2])});
    return std::pair{d <= 1e-12, sci(d)};
  });
  r.check("Weyl equivariance", "Dw Z = Z o w and permutations permute Z", "<= 1e-10", [&] {
    const auto Jw = weyl_w_jacobian();
    double worst = 0;
    for (const auto& u : generic) {
      const Angles3 z = vector_field_Z(u), zw = vector_field_Z(weyl_w(u));
      for (int i = 0; i < 3; ++i) {
        double push = 0;
        for (int j = 0; j < 3; ++j) push += Jw[i][j] * z[j];
        worst = std::max(worst, std::abs(push - zw[i]));
      }
      const Angles3 zp = vector_field_Z(permute(u, {1, 2, 0}));
      const Angles3 pz = permute(z, {1, 2, 0});
      worst = std::max(worst, norm({zp[0] - pz[0], zp[1] - pz[1], zp[2] - pz[2]}));
    }
    return std::pair{worst <= 1e-10, sci(worst)};
  });
  r.check("Weyl group", "w is an involution, K is abelian of order 4, |W u| = 24 generically", "true", [&] {
    bool ok = true;
    for (const auto& u : generic) {
      ok = ok && same_mod_pi(weyl_w(weyl_w(u)), u, 1e-12);
      ok = ok && weyl_orbit(u).size() == 24;
      const auto k = k_orbit(u);
      // the four images are distinct and each nontrivial element squares to id
      for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j) ok = ok && !same_mod_pi(k[i], k[j], 1e-9);
      for (std::size_t i = 1; i < k.size(); ++i) {
        const auto kk = k_orbit(k[i]);
        ok = ok && same_mod_pi(kk[i], u, 1e-12);
      }
    }
    return flag(ok);
  });
  r.check("j at lambda = -1", "j(-1) = 1728", "1728", [&] {
    const double j = j_from_lambda(-1.0);
    return std::pair{std::abs(j - 1728.0) < 1e-9, sci(j)};
  });
  return r.take();
}

std::vector<Check> suite_classify(const SuiteOptions& opt) {
  Recorder r("classify");
  const double pi = std::numbers::pi, h = pi / 2;
  const std::vector<std::pair<Angles3, CaseLabel>> probes = {
      {{h, h, h}, CaseLabel::P_ORBIT},        {{h, h, 0}, CaseLabel::P_PRIME_ORBIT},
      {{0, 0, 0}, CaseLabel::O_ORBIT},        {{0.6, 0.6, 0}, CaseLabel::C_PLUS},
      {{h + 0.3, h, 0.3}, CaseLabel::C_MINUS}, {{h, 0.4, 0.4}, CaseLabel::L},
      {{h, h, 0.4}, CaseLabel::L_PRIME},      {{h, 0.3, 0.8}, CaseLabel::F2},
      {{0.9, 0.4, 0.4}, CaseLabel::F1},       {{pi / 3, pi / 4, pi / 5}, CaseLabel::GENERIC},
  };
  for (const auto& [u, want] : probes) {
    std::ostringstream name;
    name.precision(4);
    name << "probe (" << u[0] << "," << u[1] << "," << u[2] << ")";
    r.check(name.str(), "classification of a hand-placed point", to_string(want), [&, u = u, want = want] {
      const CaseLabel got = classify(u);
      return std::pair{got == want, to_string(got)};
    });
  }
  r.check("Weyl invariance", "classify(g u) = classify(u) for every g in W", "true", [&] {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> ang(0.0, pi);
    bool ok = true;
    std::vector<Angles3> pts;
    for (const auto& p : probes) pts.push_back(p.first);
    for (int i = 0; i < 10; ++i) pts.push_back({ang(rng), ang(rng), ang(rng)});
    for (const auto& u : pts) {
      const CaseLabel c = classify(u);
      for (const auto& v : weyl_orbit(u)) ok = ok && classify(v) == c;
    }
    return flag(ok);
  });
  r.check("cell reduction", "reduce_to_cell lands in pi > phi1 >= phi2 >= phi3 >= 0", "true", [&] {
    const Angles3 v = reduce_to_cell({pi / 5, 4 * pi / 5, pi / 2});
    return flag(v[0] < pi && v[0] >= v[1] && v[1] >= v[2] && v[2] >= 0);
  });
  return r.take();
}

std::vector<Check> suite_grassmann(const SuiteOptions& opt) {
  Recorder r("grassmann");
  const MuReport mu = mu_and_commutator();
  const Scalar i32 = imag_unit() * Scalar(Rational(1, 32));
  for (const char* w : {"U^3 s2 U s2", "U^3 s1 U s1"}) {
    r.check(std::string("coefficient ") + w, "coefficient of the word in mu", i32.str(), [&] {
      const Scalar c = mu.mu.coeff(parse_fp_word(w));
      return std::pair{c == i32, c.str()};
    });
  }
  r.check("mu in A", "mu commutes with every sigma(a)", "true", [&] {
    bool ok = true;
    for (int a = 0; a < 4; ++a) ok = ok && FPElement::sigma(a) * mu.mu * FPElement::sigma(a) == mu.mu;
    return flag(ok);
  });
  r.check("[mu, mu*] nonzero", "mu mu* - mu* mu != 0 in the free Grassmannian", "nonzero", [&] {
    return std::pair{!mu.commutator.is_zero(), std::to_string(mu.commutator.size()) + " terms"};
  });
  r.check("mu* mu ordering", "no word of mu* mu starts with a positive power of U", "true",
          [&] { return flag(!has_word_starting_with_positive_u(mu.mu_star_mu)); });
  r.check("separating word", "U^3 s1 U s3 U^-1 s2 U^-3 occurs in mu mu* with |c| = 1/1024 and not in mu* mu",
          "|c| = 1/1024, absent", [&] {
            const FPWord w = parse_fp_word("U^3 s1 U s3 U^-1 s2 U^-3");
            const Scalar c = mu.mu_mu_star.coeff(w);
            const bool ok = (c * c.conj()) == Scalar(Rational(1, 1024 * 1024)) && mu.mu_star_mu.coeff(w).is_zero();
            return std::pair{ok, "c = " + c.str()};
          });
  for (const auto& u : sample_points(opt, 5, 51)) {
    r.check("[m, m*] in A_u " + format_triple(u), "[m, m*] = 0 in A_u", "true",
            [&] { return flag(mu_vanishes_in_Au(u)); });
  }
  r.check("[m, m*] free", "[m, m*] != 0 in the free *-algebra", "false", [&] {
    const bool v = mu_vanishes_free();
    return std::pair{!v, v ? "true" : "false"};
  });
  return r.take();
}

std::vector<Check> suite_selfduality(const SuiteOptions& opt) {
  Recorder r("selfduality");
  r.check("e self-dual", "*F = i^2 F for F = e (de)^2 on S^4, 100 random points", "<= " + sci(kSelfDualTol), [&] {
    const auto res = selfduality_numeric_s4(100, opt.seed, 1);
    return std::pair{res.max_residual <= kSelfDualTol, sci(res.max_residual)};
  });
  r.check("e- anti-self-dual", "*F = -i^2 F for the opposite projection", "<= " + sci(kSelfDualTol), [&] {
    const auto res = selfduality_numeric_s4(100, opt.seed, -1);
    return std::pair{res.max_residual <= kSelfDualTol, sci(res.max_residual)};
  });
  r.check("orientation control", "with the opposite orientation the residual is large", "> 0.1", [&] {
    const auto res = selfduality_numeric_s4(20, opt.seed, 1, false, 1);
    return std::pair{res.max_residual > 0.1, sci(res.max_residual)};
  });
  return r.take();
}

NCPoly random_form(const FormAlgebra& f, std::mt19937_64& rng) {
  const int G = static_cast<int>(f.pres.gens()->size());
  std::uniform_int_distribution<int> gen(0, G - 1), len(1, 3), nterms(1, 3), coef(-3, 3);
  NCPoly p(f.pres.gens());
  const int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Word w;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(static_cast<char>(gen(rng)));
    p += f.pres.word(w, Scalar(coef(rng)) + imag_unit() * Scalar(coef(rng)));
  }
  return f.pres.normal_form(p);
}

std::vector<Check> suite_forms(const SuiteOptions& opt) {
  Recorder r("forms");
  const AngleMatrix th = random_theta(2, opt.seed + 13);
  const FormAlgebra f = make_forms(2, th);
  std::mt19937_64 rng(opt.seed);
  std::vector<NCPoly> forms;
  for (int i = 0; i < 50; ++i) forms.push_back(random_form(f, rng));
  r.check("d^2 on generators", "d d g = 0 for every generator", "true", [&] {
    bool ok = true;
    for (int g = 0; g < static_cast<int>(f.pres.gens()->size()); ++g)
      ok = ok && differential(f, differential(f, f.pres.gen(g))).is_zero();
    return flag(ok);
  });
  r.check("d^2 random", "d d w = 0 for 50 random forms", "true", [&] {
    bool ok = true;
    for (const auto& w : forms) ok = ok && differential(f, differential(f, w)).is_zero();
    return flag(ok);
  });
  r.check("d commutes with conjugation", "d(conj w) = conj(d w) for 50 random forms", "true", [&] {
    bool ok = true;
    for (const auto& w : forms) ok = ok && differential(f, graded_conj(f, w)) == graded_conj(f, differential(f, w));
    return flag(ok);
  });
  r.check("top form", "prod dzb dz is graded-central and closed", "true", [&] {
    const NCPoly t = top_form(f);
    return flag(!t.is_zero() && is_graded_central(f, t) && differential(f, t).is_zero());
  });
  r.check("invariant forms", "zb dz and dzb dz are graded-central", "true", [&] {
    bool ok = true;
    for (const auto& x : invariant_forms(f)) ok = ok && is_graded_central(f, x);
    return flag(ok);
  });
  r.check("forms confluence", "the forms presentation has no unresolved overlap of degree 3", "0 overlaps", [&] {
    const auto bad = check_confluence(f.pres, 3);
    return std::pair{bad.empty(), std::to_string(bad.size()) + " overlaps"};
  });
  r.check("sphere forms", "Omega(S^4_theta) is confluent at degree 4 and d(radius) = 0", "true", [&] {
    const FormAlgebra s = make_sphere_forms(2, th);
    NCPoly rad = s.pres.word(make_word({s.x, s.x})) - s.pres.one();
    for (int m = 0; m < 2; ++m) rad += s.pres.word(make_word({s.z[m], s.zb[m]}));
    return flag(check_confluence(s.pres, 4).empty() && s.pres.reduces_to_zero(rad) &&
                s.pres.normal_form(differential(s, rad)).is_zero());
  });
  return r.take();
}

using SuiteFn = std::vector<Check> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"relations", suite_relations},     {"confluence", suite_confluence},   {"chern", suite_chern},
      {"clifford", suite_clifford},       {"det", suite_det},                 {"splitting", suite_splitting},
      {"moduli-flow", suite_moduli_flow}, {"classify", suite_classify},       {"grassmann", suite_grassmann},
      {"selfduality", suite_selfduality}, {"forms", suite_forms},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

std::string canonical_suite(const std::string& name) {
  if (name == "detθ" || name == "det-theta" || name == "dettheta") return "det";
  return name;
}

bool is_suite(const std::string& raw) {
  const std::string name = canonical_suite(raw);
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<Check> run_suite(const std::string& raw, const SuiteOptions& opt) {
  const std::string name = canonical_suite(raw);
  std::vector<Check> out;
  for (const auto& [k, f] : registry()) {
    if (name != "all" && name != k) continue;
    auto c = f(opt);
    out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  if (out.empty() && !is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  return out;
}

std::vector<AngleTriple> generic_rational_points(std::size_t count, std::uint64_t seed,
                                                 const std::vector<long>& denominators) {
  std::mt19937_64 rng(seed);
  std::vector<AngleTriple> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100000) throw std::runtime_error("generic_rational_points: no generic point found");
    const long q = denominators[std::uniform_int_distribution<std::size_t>(0, denominators.size() - 1)(rng)];
    std::uniform_int_distribution<long> pd(1, q - 1);
    const AngleTriple u{{PiAngle(pd(rng), q), PiAngle(pd(rng), q), PiAngle(pd(rng), q)}};
    const Angles3 r = to_radians(u);
    try {
      if (classify(r, 1e-6) != CaseLabel::GENERIC) continue;
      if (std::abs(delta_of(r)) < 1e-6) continue;
      bool k_generic = true;
      for (const auto& v : k_orbit(r)) k_generic = k_generic && std::abs(delta_of(v)) > 1e-6;
      if (!k_generic) continue;
      (void)j_of(r);
    } catch (const std::exception&) {
      continue;
    }
    bool dup = false;
    for (const auto& o : out) dup = dup || (o.phi[0] == u.phi[0] && o.phi[1] == u.phi[1] && o.phi[2] == u.phi[2]);
    if (!dup) out.push_back(u);
  }
  return out;
}

AngleMatrix random_theta(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static const long qs[] = {3, 4, 6};
  AngleMatrix t = zero_angles(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const long q = qs[std::uniform_int_distribution<int>(0, 2)(rng)];
      const long p = std::uniform_int_distribution<long>(1, q - 1)(rng) * (rng() % 2 ? 1 : -1);
      t[i][j] = PiAngle(p, q);
      t[j][i] = PiAngle(-p, q);
    }
  return t;
}

std::string format_triple(const AngleTriple& u) {
  return "(" + u.phi[0].str() + "," + u.phi[1].str() + "," + u.phi[2].str() + ")";
}

}  // namespace ncs::verify
