#include "ncsphere/qgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ncs {

namespace {

int word_parity(const GeneratorSet& g, const Word& w) {
  int p = 0;
  for (std::size_t i = 0; i < w.size(); ++i) p ^= g.parity(letter(w, i));
  return p;
}

Word one_letter(int g) { return Word(1, static_cast<char>(g)); }

}  // namespace

Bialgebra make_m_theta(int n, const AngleMatrix& theta, bool with_forms) {
  if (n < 1 || static_cast<int>(theta.size()) != n) throw std::invalid_argument("make_m_theta: theta size");
  const int nn = n * n;
  const int total = with_forms ? 8 * nn : 4 * nn;
  auto w = [&](int mu, long smu, int nu, long snu) {
    std::vector<long> v(2 * n, 0);
    v[mu] = smu;
    v[n + nu] = snu;
    return v;
  };
  const char* base[4] = {"a", "b", "ab", "bb"};
  const long sign[4][2] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
  const int partner[4] = {2, 3, 0, 1};
  std::vector<PhaseGenerator> g;
  for (int f = 0; f < (with_forms ? 2 : 1); ++f)
    for (int k = 0; k < 4; ++k)
      for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu) {
          std::string name = std::string(f ? "d" : "") + base[k] + std::to_string(mu + 1) + std::to_string(nu + 1);
          int star = f * 4 * nn + partner[k] * nn + mu * n + nu;
          g.push_back({name, star, w(mu, sign[k][0], nu, sign[k][1]), f});
        }
  Bialgebra m(make_phase_presentation(with_forms ? "Omega_M_theta" : "M_theta", g, angle_sum_neg(theta)));
  m.n = n;
  m.theta = theta;
  m.with_forms = with_forms;
  for (const auto& pg : g) m.weight.push_back(pg.degree);
  m.d_of.assign(total, -1);
  if (with_forms)
    for (int i = 0; i < 4 * nn; ++i) m.d_of[i] = 4 * nn + i;
  return m;
}

TensorChain tensor_unit(std::size_t arity) {
  TensorChain u(arity);
  u.add_term(WordTuple(arity), Scalar(1));
  return u;
}

TensorChain reduce_legs(const TensorChain& x, const std::vector<const Presentation*>& legs) {
  TensorChain out(x.arity());
  for (const auto& [t, c] : x.terms()) {
    std::vector<NCPoly> f;
    for (std::size_t i = 0; i < t.size(); ++i) f.push_back(legs[i]->normal_form_word(t[i]));
    out += c * TensorChain::tensor(f);
  }
  return out;
}

TensorChain tensor_mul(const TensorChain& x, const TensorChain& y, const std::vector<const Presentation*>& legs) {
  const std::size_t k = x.arity();
  if (y.arity() != k || legs.size() != k) throw std::invalid_argument("tensor_mul: arity mismatch");
  TensorChain out(k);
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) {
      int sign = 0;
      for (std::size_t i = 1; i < k; ++i)
        if (word_parity(*legs[i]->gens(), tx[i]))
          for (std::size_t j = 0; j < i; ++j) sign ^= word_parity(*legs[j]->gens(), ty[j]);
      std::vector<NCPoly> f;
      for (std::size_t i = 0; i < k; ++i) f.push_back(legs[i]->normal_form_word(tx[i] + ty[i]));
      Scalar c = cx * cy;
      out += (sign ? -c : c) * TensorChain::tensor(f);
    }
  return out;
}

namespace {

// Delta of one generator
TensorChain coproduct_gen(const Bialgebra& m, int g) {
  const int n = m.n, nn = n * n;
  TensorChain out(2);
  if (g >= 4 * nn) {
    TensorChain base = coproduct_gen(m, g - 4 * nn);
    for (const auto& [t, c] : base.terms()) {
      out.add_term({Word(1, static_cast<char>(m.d_of[letter(t[0], 0)])), t[1]}, c);
      out.add_term({t[0], Word(1, static_cast<char>(m.d_of[letter(t[1], 0)]))}, c);
    }
    return out;
  }
  const int kind = g / nn, mu = (g % nn) / n, nu = g % n;
  for (int l = 0; l < n; ++l) {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    switch (kind) {
      case 0:  // a
        x0 = m.a(mu, l), y0 = m.a(l, nu), x1 = m.b(mu, l), y1 = m.bbar(l, nu);
        break;
      case 1:  // b
        x0 = m.a(mu, l), y0 = m.b(l, nu), x1 = m.b(mu, l), y1 = m.abar(l, nu);
        break;
      case 2:  // abar
        x0 = m.abar(mu, l), y0 = m.abar(l, nu), x1 = m.bbar(mu, l), y1 = m.b(l, nu);
        break;
      default:  // bbar
        x0 = m.abar(mu, l), y0 = m.bbar(l, nu), x1 = m.bbar(mu, l), y1 = m.a(l, nu);
    }
    out.add_term({one_letter(x0), one_letter(y0)}, Scalar(1));
    out.add_term({one_letter(x1), one_letter(y1)}, Scalar(1));
  }
  return out;
}

TensorChain homomorphic_image(const NCPoly& p, const std::vector<TensorChain>& table,
                              const std::vector<const Presentation*>& legs) {
  TensorChain out(legs.size());
  for (const auto& [w, c] : p.terms()) {
    TensorChain acc = tensor_unit(legs.size());
    for (std::size_t i = 0; i < w.size() && !acc.is_zero(); ++i) acc = tensor_mul(acc, table[letter(w, i)], legs);
    out += c * acc;
  }
  return out;
}

std::vector<TensorChain> coproduct_table(const Bialgebra& m) {
  std::vector<TensorChain> t;
  for (std::size_t g = 0; g < m.pres.gens()->size(); ++g) t.push_back(coproduct_gen(m, static_cast<int>(g)));
  return t;
}

}  // namespace

TensorChain coproduct(const Bialgebra& m, const NCPoly& p) {
  const std::vector<const Presentation*> legs{&m.pres, &m.pres};
  return homomorphic_image(p, coproduct_table(m), legs);
}

TensorChain coproduct_on_leg(const Bialgebra& m, const TensorChain& c, std::size_t leg) {
  if (c.arity() != 2 || leg > 1) throw std::invalid_argument("coproduct_on_leg: two-leg chain expected");
  TensorChain out(3);
  for (const auto& [t, x] : c.terms()) {
    TensorChain d = coproduct(m, m.pres.word(t[leg]));
    for (const auto& [u, y] : d.terms()) {
      WordTuple v = leg == 0 ? WordTuple{u[0], u[1], t[1]} : WordTuple{t[0], u[0], u[1]};
      out.add_term(v, x * y);
    }
  }
  return out;
}

Scalar counit(const Bialgebra& m, const NCPoly& p) {
  const int n = m.n, nn = n * n;
  Scalar out;
  for (const auto& [w, c] : p.terms()) {
    bool nonzero = true;
    for (std::size_t i = 0; i < w.size() && nonzero; ++i) {
      const int g = letter(w, i);
      const int kind = g / nn;
      // a and abar map to delta, b, bbar and all differentials to 0
      nonzero = (kind == 0 || kind == 2) && (g % nn) / n == g % n;
    }
    if (nonzero) out += c;
  }
  return out;
}

NCPoly counit_left(const Bialgebra& m, const TensorChain& c) {
  NCPoly out(m.pres.gens());
  for (const auto& [t, x] : c.terms()) out.add_term(t[1], x * counit(m, m.pres.word(t[0])));
  return out;
}

NCPoly counit_right(const Bialgebra& m, const TensorChain& c) {
  NCPoly out(m.pres.gens());
  for (const auto& [t, x] : c.terms()) out.add_term(t[0], x * counit(m, m.pres.word(t[1])));
  return out;
}

NCPoly bialgebra_differential(const Bialgebra& m, const NCPoly& p) {
  if (!m.with_forms) throw std::invalid_argument("bialgebra_differential: forms not adjoined");
  const auto& gs = m.pres.gens();
  NCPoly out(gs);
  for (const auto& [w, c] : p.terms()) {
    bool odd = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int g = letter(w, i);
      if (m.d_of[g] >= 0) {
        Word v = w;
        v[i] = static_cast<char>(m.d_of[g]);
        out.add_term(v, odd ? -c : c);
      }
      if (gs->parity(g)) odd = !odd;
    }
  }
  return m.pres.normal_form(out);
}

TensorChain differential_on_tensor(const Bialgebra& m, const TensorChain& c) {
  TensorChain out(2);
  for (const auto& [t, x] : c.terms()) {
    const NCPoly left = m.pres.word(t[0]), right = m.pres.word(t[1]);
    out += x * TensorChain::tensor({bialgebra_differential(m, left), m.pres.normal_form(right)});
    const bool odd = word_parity(*m.pres.gens(), t[0]);
    out += (odd ? -x : x) * TensorChain::tensor({m.pres.normal_form(left), bialgebra_differential(m, right)});
  }
  return out;
}

TensorChain coaction(const Bialgebra& m, const FormAlgebra& f, const NCPoly& omega) {
  if (f.with_x) throw std::invalid_argument("coaction: odd-dimensional planes are not supported");
  if (f.n != m.n) throw std::invalid_argument("coaction: dimension mismatch");
  const int n = m.n;
  std::vector<TensorChain> table(f.pres.gens()->size(), TensorChain(2));
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      auto add = [&](int target, int mgen, int fgen) {
        table[target].add_term({one_letter(mgen), one_letter(fgen)}, Scalar(1));
      };
      add(f.z[mu], m.a(mu, nu), f.z[nu]);
      add(f.z[mu], m.b(mu, nu), f.zb[nu]);
      add(f.zb[mu], m.abar(mu, nu), f.zb[nu]);
      add(f.zb[mu], m.bbar(mu, nu), f.z[nu]);
      add(f.dz[mu], m.a(mu, nu), f.dz[nu]);
      add(f.dz[mu], m.b(mu, nu), f.dzb[nu]);
      add(f.dzb[mu], m.abar(mu, nu), f.dzb[nu]);
      add(f.dzb[mu], m.bbar(mu, nu), f.dz[nu]);
    }
  return homomorphic_image(omega, table, {&m.pres, &f.pres});
}

NCPoly det_theta(const Bialgebra& m, const FormAlgebra& f) {
  Word top;
  for (int mu = 0; mu < f.n; ++mu) {
    top.push_back(static_cast<char>(f.dzb[mu]));
    top.push_back(static_cast<char>(f.dz[mu]));
  }
  const NCPoly top_nf = f.pres.normal_form_word(top);
  if (top_nf.size() != 1) throw TopComponentError("det_theta: top form does not reduce to one word");
  const Word& tw = top_nf.leading_word();
  const Scalar inv = top_nf.leading_coeff().inverse();
  TensorChain img = coaction(m, f, f.pres.word(top));
  NCPoly det(m.pres.gens());
  for (const auto& [t, c] : img.terms()) {
    if (t[1] != tw) throw TopComponentError("det_theta: coaction of the top form leaves the top component");
    det.add_term(t[0], c * inv);
  }
  return det;
}

std::vector<NCPoly> orthogonal_relations(const Bialgebra& m) {
  const int n = m.n;
  std::vector<NCPoly> out;
  const Presentation& P = m.pres;
  for (int fam = 0; fam < 3; ++fam)
    for (int al = 0; al < n; ++al)
      for (int be = 0; be < n; ++be) {
        NCPoly r(P.gens());
        for (int mu = 0; mu < n; ++mu) {
          switch (fam) {
            case 0:
              r.add_term(make_word({m.abar(mu, al), m.a(mu, be)}), 1);
              r.add_term(make_word({m.b(mu, al), m.bbar(mu, be)}), 1);
              break;
            case 1:
              r.add_term(make_word({m.abar(mu, al), m.b(mu, be)}), 1);
              r.add_term(make_word({m.b(mu, al), m.abar(mu, be)}), 1);
              break;
            default:
              r.add_term(make_word({m.bbar(mu, al), m.a(mu, be)}), 1);
              r.add_term(make_word({m.a(mu, al), m.bbar(mu, be)}), 1);
          }
        }
        if (fam == 0 && al == be) r.add_term(Word(), -1);
        out.push_back(r);
      }
  return out;
}

namespace {

using WordVec = SparseSpan<Word, DegLexLess>::Vec;

WordVec as_vec(const NCPoly& p) { return WordVec(p.terms().begin(), p.terms().end()); }

}  // namespace

bool orthogonal_quotient_check(const Bialgebra& m, const FormAlgebra& f, int omit) {
  SparseSpan<Word, DegLexLess> span;
  const auto rels = orthogonal_relations(m);
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (static_cast<int>(i) != omit) span.insert(as_vec(m.pres.normal_form(rels[i])));
  NCPoly q(f.pres.gens());
  for (int mu = 0; mu < f.n; ++mu) q.add_term(make_word({f.zb[mu], f.z[mu]}), 1);
  TensorChain img = coaction(m, f, q) - TensorChain::tensor({m.pres.one(), f.pres.normal_form(q)});
  std::map<Word, NCPoly, DegLexLess> by_right;
  for (const auto& [t, c] : img.terms()) {
    auto it = by_right.try_emplace(t[1], NCPoly(m.pres.gens())).first;
    it->second.add_term(t[0], c);
  }
  for (const auto& [w, left] : by_right)
    if (!span.contains(as_vec(left))) return false;
  return true;
}

namespace {

// Commutative polynomial: sorted multiset of generator indices -> coefficient.
using CPoly = std::map<std::vector<int>, Scalar>;

void cadd(CPoly& p, const std::vector<int>& k, const Scalar& c) {
  auto [it, ins] = p.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

CPoly cmul(const CPoly& a, const CPoly& b) {
  CPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      std::sort(k.begin(), k.end());
      cadd(out, k, ca * cb);
    }
  return out;
}

}  // namespace

DetSquareCertificate det_square_in_orthogonal_ideal(const Bialgebra& m, const NCPoly& det) {
  const int n = m.n, N = 2 * n;
  auto L = [&](int i, int j) {
    if (i < n) return j < n ? m.a(i, j) : m.b(i, j - n);
    return j < n ? m.bbar(i - n, j) : m.abar(i - n, j - n);
  };
  // R = L^T G L - G with G swapping the two blocks
  std::vector<std::vector<CPoly>> R(N, std::vector<CPoly>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      for (int k = 0; k < N; ++k) {
        std::vector<int> key{L(k, i), L((k + n) % N, j)};
        std::sort(key.begin(), key.end());
        cadd(R[i][j], key, 1);
      }
      if ((i + n) % N == j) cadd(R[i][j], {}, -1);
    }
  // quantum relation matching R_ij classically
  const auto rels = orthogonal_relations(m);
  auto rel_index = [&](int i, int j) {
    if (i < n && j < n) return 2 * n * n + i * n + j;
    if (i >= n && j < n) return (i - n) * n + j;
    if (i < n && j >= n) return (j - n) * n + i;
    return n * n + (i - n) * n + (j - n);
  };
  const CPoly one{{{}, Scalar(1)}};

  // det(G + R) - det G: for each permutation and each choice of R-rows, the
  // first R factor is the relation, the rest is its cofactor.
  std::set<std::pair<std::vector<int>, int>> pairs;
  std::vector<int> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 1; mask < (1 << N); ++mask) {
      CPoly cof = one;
      int first = -1;
      bool dead = false;
      for (int i = 0; i < N && !dead; ++i) {
        const int j = perm[i];
        if (mask >> i & 1) {
          if (first < 0) {
            first = i;
            continue;
          }
          cof = cmul(cof, R[i][j]);
        } else if ((i + n) % N != j) {
          dead = true;  // G entry vanishes
        }
      }
      if (dead || cof.empty()) continue;
      const int k = rel_index(first, perm[first]);
      for (const auto& [mono, c] : cof) pairs.insert({mono, k});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  SparseSpan<Word, DegLexLess> span;
  DetSquareCertificate cert;
  for (const auto& [mono, k] : pairs) {
    Word w;
    for (int g : mono) w.push_back(static_cast<char>(g));
    span.insert(as_vec(m.pres.normal_form(ncs::mul(m.pres.word(w), rels[k]))));
    ++cert.candidates;
  }
  cert.rank = span.rank();
  NCPoly target = m.pres.normal_form(ncs::mul(det, det)) - m.pres.one();
  cert.in_ideal = span.contains(as_vec(target));
  return cert;
}

}  // namespace ncs
