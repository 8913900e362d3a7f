#include "ncsphere/splitting.hpp"

namespace ncs {

void SplitElement::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SplitElement& SplitElement::operator+=(const SplitElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SplitElement& SplitElement::operator-=(const SplitElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SplitElement operator*(const Scalar& c, SplitElement a) {
  if (c.is_zero()) return {};
  for (auto& [k, x] : a.terms_) x *= c;
  return a;
}

Scalar torus_phase(const AngleMatrix& t, const std::vector<long>& k, const std::vector<long>& l) {
  PiAngle acc;
  for (std::size_t mu = 0; mu < k.size(); ++mu)
    for (std::size_t nu = 0; nu < mu; ++nu)
      if (k[mu] && l[nu]) acc = acc + t[mu][nu].scaled(k[mu] * l[nu]);
  return phase(acc);
}

Splitter splitter_plane(int n, const AngleMatrix& theta, bool with_x) {
  Presentation c = make_r2n_theta(n, zero_angles(n), with_x);
  std::vector<std::vector<long>> w;
  for (int m = 0; m < n; ++m) {
    w.emplace_back(n, 0);
    w.back()[m] = 1;
  }
  for (int m = 0; m < n; ++m) {
    w.emplace_back(n, 0);
    w.back()[m] = -1;
  }
  if (with_x) w.emplace_back(n, 0);
  return Splitter(std::move(c), std::move(w), theta);
}

Splitter splitter_sphere(int n, const AngleMatrix& theta, bool even) {
  if (even) {
    Splitter s = splitter_plane(n, theta, true);
    s.classical = make_even_sphere(n, zero_angles(n));
    return s;
  }
  std::vector<std::vector<long>> w;
  for (int m = 0; m < n; ++m)
    for (long sign : {1L, -1L}) {
      w.emplace_back(n, 0);
      w.back()[m] = sign;
    }
  return Splitter(make_odd_sphere(n, zero_angles(n)), std::move(w), theta);
}

Splitter splitter_forms(int n, const AngleMatrix& theta, bool with_x) {
  FormAlgebra f = make_forms(n, zero_angles(n), with_x);
  return Splitter(f.pres, f.weight, theta);
}

Splitter splitter_qgroup(int n, const AngleMatrix& theta) {
  Bialgebra m = make_m_theta(n, zero_angles(n));
  return Splitter(m.pres, m.weight, angle_sum_neg(theta));
}

SplitElement st(const Splitter& s, const NCPoly& p) {
  SplitElement out;
  const std::size_t dim = s.big_theta.size();
  for (const auto& [w, c] : p.terms()) {
    std::vector<long> k(dim, 0);
    Scalar ph(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& wt = s.weight[letter(w, i)];
      ph *= torus_phase(s.big_theta, k, wt);
      for (std::size_t j = 0; j < dim; ++j) k[j] += wt[j];
    }
    const NCPoly cl = s.classical.normal_form_word(w);
    for (const auto& [v, d] : cl.terms()) out.add_term({v, k}, c * ph * d);
  }
  return out;
}

SplitElement split_mul(const Splitter& s, const SplitElement& a, const SplitElement& b) {
  SplitElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const NCPoly cl = s.classical.normal_form_word(ka.first + kb.first);
      if (cl.is_zero()) continue;
      std::vector<long> k = ka.second;
      for (std::size_t j = 0; j < k.size(); ++j) k[j] += kb.second[j];
      const Scalar c = ca * cb * torus_phase(s.big_theta, ka.second, kb.second);
      for (const auto& [v, d] : cl.terms()) out.add_term({v, k}, c * d);
    }
  return out;
}

SplitElement classical_part(const Splitter& s, const NCPoly& p) {
  SplitElement out;
  const NCPoly cl = s.classical.normal_form(rebase(p, s.classical.gens()));
  for (const auto& [v, d] : cl.terms()) out.add_term({v, std::vector<long>(s.big_theta.size(), 0)}, d);
  return out;
}

SplitElement split_differential(const FormAlgebra& f, const SplitElement& x) {
  SplitElement out;
  for (const auto& [k, c] : x.terms()) {
    const NCPoly d = differential(f, f.pres.word(k.first));
    for (const auto& [v, e] : d.terms()) out.add_term({v, k.second}, c * e);
  }
  return out;
}

bool diagonal_invariant(const Splitter& s, const SplitElement& x) {
  for (const auto& [k, c] : x.terms()) {
    std::vector<long> w(s.big_theta.size(), 0);
    for (std::size_t i = 0; i < k.first.size(); ++i) {
      const auto& wt = s.weight[letter(k.first, i)];
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += wt[j];
    }
    if (w != k.second) return false;
  }
  return true;
}

namespace {

Scalar sigma_factor(const std::vector<std::vector<long>>& weight, const Word& w, const std::vector<PiAngle>& t) {
  PiAngle acc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& wt = weight[letter(w, i)];
    for (std::size_t j = 0; j < t.size(); ++j)
      if (wt[j]) acc = acc + t[j].scaled(wt[j]);
  }
  return phase(acc);
}

}  // namespace

NCPoly sigma_action(const std::vector<std::vector<long>>& weight, const NCPoly& p, const std::vector<PiAngle>& t) {
  NCPoly out(p.gens());
  for (const auto& [w, c] : p.terms()) out.add_term(w, c * sigma_factor(weight, w, t));
  return out;
}

SplitElement sigma_on_classical(const Splitter& s, const SplitElement& x, const std::vector<PiAngle>& t) {
  SplitElement out;
  for (const auto& [k, c] : x.terms()) out.add_term(k, c * sigma_factor(s.weight, k.first, t));
  return out;
}

bool split_relations_vanish(const Splitter& s, const Presentation& deformed) {
  for (const auto& r : deformed.relations())
    if (!st(s, r).is_zero()) return false;
  return true;
}

std::vector<InjectivityReport> injectivity_ranks(const Splitter& s, const Presentation& deformed, int max_degree) {
  std::vector<InjectivityReport> out;
  using Key = SplitElement::Key;
  for (int d = 0; d <= max_degree; ++d) {
    SparseSpan<Key, SplitElement::KeyLess> span;
    const auto words = normal_words(deformed, d);
    for (const auto& w : words) {
      const SplitElement img = st(s, deformed.word(w));
      span.insert(SparseSpan<Key, SplitElement::KeyLess>::Vec(img.terms().begin(), img.terms().end()));
    }
    out.push_back({d, words.size(), span.rank()});
  }
  return out;
}

}  // namespace ncs
