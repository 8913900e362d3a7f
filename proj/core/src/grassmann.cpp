#include "ncsphere/grassmann.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncs {

namespace {

// sigma_a sigma_b = phase * sigma_c; c = 0 means the identity.
std::pair<Scalar, int> pauli_product(int a, int b) {
  if (a == 0) return {Scalar(1), b};
  if (b == 0) return {Scalar(1), a};
  if (a == b) return {Scalar(1), 0};
  const int c = 6 - a - b;
  // epsilon_{abc}: +1 for cyclic (1,2,3)
  const bool cyclic = (b - a + 3) % 3 == 1;
  const Scalar i = imag_unit();
  return {cyclic ? i : -i, c};
}

// Appends one letter, normalizing at the junction. Returns the phase picked up.
Scalar push_token(FPWord& w, FPToken t) {
  Scalar ph(1);
  while (true) {
    if (t.v == 0) return ph;  // identity sigma or U^0
    if (w.empty() || w.back().is_u != t.is_u) {
      w.push_back(t);
      return ph;
    }
    FPToken back = w.back();
    w.pop_back();
    if (t.is_u) {
      t = {true, back.v + t.v};
    } else {
      auto [p, c] = pauli_product(back.v, t.v);
      ph *= p;
      t = {false, c};
    }
  }
}

Scalar concat(FPWord& w, const FPWord& tail) {
  Scalar ph(1);
  for (const auto& t : tail) ph *= push_token(w, t);
  return ph;
}

}  // namespace

std::string to_string(const FPWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += ' ';
    if (t.is_u)
      out += t.v == 1 ? "U" : "U^" + std::to_string(t.v);
    else
      out += "s" + std::to_string(t.v);
  }
  return out;
}

FPWord parse_fp_word(const std::string& s) {
  std::istringstream in(s);
  std::string tok;
  FPWord w;
  Scalar ph(1);
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok[0] == 's' && tok.size() == 2 && tok[1] >= '0' && tok[1] <= '3') {
      ph *= push_token(w, {false, tok[1] - '0'});
    } else if (tok[0] == 'U') {
      int p = 1;
      if (tok.size() > 1) {
        if (tok[1] != '^') throw std::invalid_argument("parse_fp_word: bad token " + tok);
        p = std::stoi(tok.substr(2));
      }
      ph *= push_token(w, {true, p});
    } else {
      throw std::invalid_argument("parse_fp_word: bad token " + tok);
    }
  }
  if (ph != Scalar(1)) throw std::invalid_argument("parse_fp_word: word is not in normal form: " + s);
  return w;
}

FPElement FPElement::scalar(const Scalar& c) {
  FPElement e;
  e.add_term({}, c);
  return e;
}

FPElement FPElement::sigma(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("sigma: index must be 0..3");
  FPElement e;
  e.add_term(k ? FPWord{{false, k}} : FPWord{}, Scalar(1));
  return e;
}

FPElement FPElement::u_power(int j) {
  FPElement e;
  e.add_term(j ? FPWord{{true, j}} : FPWord{}, Scalar(1));
  return e;
}

Scalar FPElement::coeff(const FPWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

Rational FPElement::l1_norm_bound() const {
  Rational s = 0;
  for (const auto& [w, c] : terms_) {
    if (c.order() != 4) throw std::logic_error("l1_norm_bound: coefficient outside Q(i)");
    for (const auto& q : c.coeffs()) s += abs(q);
  }
  return s;
}

void FPElement::add_term(const FPWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(w, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FPElement& FPElement::operator+=(const FPElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FPElement& FPElement::operator-=(const FPElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FPElement operator*(const Scalar& c, FPElement a) {
  if (c.is_zero()) return {};
  for (auto& [w, x] : a.terms_) x *= c;
  return a;
}

std::string FPElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*" + to_string(w);
  }
  return out;
}

FPElement fp_mul(const FPElement& a, const FPElement& b) {
  FPElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      FPWord w = wa;
      const Scalar ph = concat(w, wb);
      out.add_term(w, ca * cb * ph);
    }
  return out;
}

FPElement fp_star(const FPElement& a) {
  FPElement out;
  for (const auto& [w, c] : a.terms()) {
    FPWord r;
    Scalar ph(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) ph *= push_token(r, it->is_u ? FPToken{true, -it->v} : *it);
    out.add_term(r, c.conj() * ph);
  }
  return out;
}

int gamma_pairing(int a, int b) {
  const int al = a >> 1, be = a & 1, al2 = b >> 1, be2 = b & 1;
  return ((al * be2 - al2 * be) % 2 + 2) % 2;
}

FPElement proj_P(const FPElement& t) {
  FPElement sum;
  for (int a = 0; a < 4; ++a) sum += FPElement::sigma(a) * t * FPElement::sigma(a);
  return Scalar(Rational(1, 4)) * sum;
}

FPElement x_generator(int a) { return proj_P(FPElement::sigma(a) * FPElement::u_power(1)); }

FPElement antisym_bracket(const std::vector<FPElement>& xs) {
  std::vector<int> perm(xs.size());
  std::iota(perm.begin(), perm.end(), 0);
  FPElement out;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    FPElement prod = FPElement::scalar(Scalar(inversions % 2 ? -1 : 1));
    for (int p : perm) prod = prod * xs[p];
    out += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MuReport mu_and_commutator() {
  MuReport r;
  r.mu = antisym_bracket({x_generator(0), x_generator(1), x_generator(2), x_generator(3)});
  r.mu_star = fp_star(r.mu);
  r.mu_mu_star = r.mu * r.mu_star;
  r.mu_star_mu = r.mu_star * r.mu;
  r.commutator = r.mu_mu_star - r.mu_star_mu;
  return r;
}

bool has_word_starting_with_positive_u(const FPElement& x) {
  return std::any_of(x.terms().begin(), x.terms().end(),
                     [](const auto& t) { return !t.first.empty() && t.first[0].is_u && t.first[0].v > 0; });
}

namespace {

NCPoly bracket_poly(const std::vector<NCPoly>& zs) {
  std::vector<int> perm(zs.size());
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly out(zs[0].gens());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    NCPoly prod = NCPoly::constant(zs[0].gens(), Scalar(inversions % 2 ? -1 : 1));
    for (int p : perm) prod = prod * zs[p];
    out += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

bool mu_vanishes_in_Au(const AngleTriple& u) {
  const Presentation A = make_a_u(u);
  const auto& g = A.gens();
  std::vector<NCPoly> z;
  for (int m = 0; m < 4; ++m) z.push_back(NCPoly::gen(g, m, m == 0 ? Scalar(1) : phase(u.phi[m - 1])));
  const NCPoly m = bracket_poly(z);
  const NCPoly ms = star(m);
  return A.normal_form(m * ms - ms * m).is_zero();
}

bool mu_vanishes_free() {
  auto g = std::make_shared<const GeneratorSet>(
      std::vector<std::string>{"z0", "z1", "z2", "z3", "zb0", "zb1", "zb2", "zb3"}, std::vector<int>{4, 5, 6, 7, 0, 1, 2, 3});
  std::vector<NCPoly> z;
  for (int m = 0; m < 4; ++m) z.push_back(NCPoly::gen(g, m));
  const NCPoly m = bracket_poly(z);
  const NCPoly ms = star(m);
  return (m * ms - ms * m).is_zero();
}

}  // namespace ncs
