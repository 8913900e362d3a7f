#include "ncsphere/homology.hpp"

namespace ncs {

TensorChain reduce_chain(const TensorChain& c, const Presentation* pres) {
  TensorChain out(c.arity());
  for (const auto& [t, coef] : c.terms()) {
    TensorChain piece(0);
    piece.add_term({}, coef);
    for (std::size_t i = 0; i < t.size(); ++i) {
      NCPoly f = pres ? pres->word(t[i]) : NCPoly::monomial(nullptr, t[i]);
      if (pres && !pres->is_normal(t[i])) f = pres->normal_form(f);
      if (i > 0) f.add_term(Word(), -f.coeff(Word()));
      piece = piece.append(f);
      if (piece.is_zero()) break;
    }
    out += piece;
  }
  return out;
}

TensorChain boundary_b(const TensorChain& c, const Presentation& pres) {
  const std::size_t k = c.arity() - 1;
  if (c.arity() < 2) throw std::invalid_argument("boundary_b: arity must be at least 2");
  TensorChain raw(k);
  for (const auto& [t, coef] : c.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      NCPoly prod = pres.normal_form_word(t[i] + t[i + 1]);
      for (const auto& [w, d] : prod.terms()) {
        WordTuple u;
        for (std::size_t j = 0; j < i; ++j) u.push_back(t[j]);
        u.push_back(w);
        for (std::size_t j = i + 2; j <= k; ++j) u.push_back(t[j]);
        raw.add_term(u, (i % 2 ? -coef : coef) * d);
      }
    }
    NCPoly prod = pres.normal_form_word(t[k] + t[0]);
    for (const auto& [w, d] : prod.terms()) {
      WordTuple u{w};
      for (std::size_t j = 1; j < k; ++j) u.push_back(t[j]);
      raw.add_term(u, (k % 2 ? -coef : coef) * d);
    }
  }
  return reduce_chain(raw, &pres);
}

TensorChain cyclic_permutation(const TensorChain& c) {
  const std::size_t k = c.arity() - 1;
  TensorChain out(c.arity());
  for (const auto& [t, coef] : c.terms()) {
    WordTuple u{t[k]};
    for (std::size_t j = 0; j < k; ++j) u.push_back(t[j]);
    out.add_term(u, k % 2 ? -coef : coef);
  }
  return out;
}

bool is_cyclic(const TensorChain& c) { return cyclic_permutation(c) == c; }

TensorChain operator_B_on_cyclic(const TensorChain& c) {
  if (!is_cyclic(c)) throw NotCyclic("operator_B_on_cyclic: chain is not fixed by the cyclic permutation");
  TensorChain out(c.arity() + 1);
  for (const auto& [t, coef] : c.terms()) {
    WordTuple u{Word()};
    u.insert(u.end(), t.begin(), t.end());
    out.add_term(u, coef);
  }
  return out;
}

MatrixPoly reduce_matrix(const MatrixPoly& m, const Presentation& pres) {
  MatrixPoly r = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = pres.normal_form(m(i, j));
  return r;
}

MatrixPoly matrix_mul(const MatrixPoly& a, const MatrixPoly& b, const Presentation& pres) {
  return reduce_matrix(a * b, pres);
}

namespace {

// drop constant terms of every entry, for use in slots >= 1
MatrixPoly strip_units(MatrixPoly m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m(i, j).add_term(Word(), -m(i, j).coeff(Word()));
  return m;
}

TensorChain alternating(const MatrixPoly& first, const MatrixPoly& second, std::size_t factors) {
  ChainMatrix x = as_chain_matrix(first);
  const MatrixPoly s1 = strip_units(first), s2 = strip_units(second);
  for (std::size_t f = 1; f < factors; ++f) x = circledcirc(x, f % 2 ? s2 : s1);
  return trace(x);
}

}  // namespace

TensorChain ch_even(const MatrixPoly& e, int k, const Presentation* pres) {
  MatrixPoly er = pres ? reduce_matrix(e, *pres) : e;
  if (pres) {
    if (!(matrix_mul(er, er, *pres) - er).is_zero()) throw NotIdempotent("ch_even: e^2 != e");
    if (!(reduce_matrix(star(er), *pres) - er).is_zero()) throw NotIdempotent("ch_even: e != e*");
  }
  MatrixPoly first = er - MatrixPoly::identity(er.gens(), er.size()).scaled(Scalar(Rational(1, 2)));
  return alternating(first, er, static_cast<std::size_t>(2 * k + 1));
}

TensorChain ch_odd(const MatrixPoly& U, int k, const Presentation* pres) {
  MatrixPoly ur = pres ? reduce_matrix(U, *pres) : U;
  MatrixPoly us = star(ur);
  if (pres) {
    us = reduce_matrix(us, *pres);
    MatrixPoly a = matrix_mul(ur, us, *pres), b = matrix_mul(us, ur, *pres);
    if (!(a - b).is_zero()) throw NotUnitary("ch_odd: U U* != U* U");
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (i != j && !a(i, j).is_zero()) throw NotUnitary("ch_odd: U U* is not scalar-diagonal");
        if (i == j && (a(i, i) != a(0, 0) || !is_central(a(i, i), *pres)))
          throw NotUnitary("ch_odd: U U* is not central");
      }
  }
  const std::size_t factors = static_cast<std::size_t>(2 * k + 2);
  return alternating(ur, us, factors) - alternating(us, ur, factors);
}

}  // namespace ncs
