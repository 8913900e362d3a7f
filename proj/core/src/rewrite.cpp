#include "ncsphere/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace ncs {

AngleMatrix zero_angles(std::size_t n) { return AngleMatrix(n, std::vector<PiAngle>(n)); }

AngleMatrix angles2(const PiAngle& t) {
  AngleMatrix m = zero_angles(2);
  m[0][1] = t;
  m[1][0] = -t;
  return m;
}

bool is_antisymmetric(const AngleMatrix& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].size() != t.size()) return false;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (!(t[i][j] == -t[j][i])) return false;
  }
  return true;
}

AngleMatrix angle_sum_neg(const AngleMatrix& t) {
  const std::size_t n = t.size();
  AngleMatrix m = zero_angles(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = t[i][j];
      m[n + i][n + j] = -t[i][j];
    }
  return m;
}

Presentation::Presentation(std::string name, GenSetPtr gens) : name_(std::move(name)), gens_(std::move(gens)) {
  rebuild_index();
}

Presentation::Presentation(const Presentation& o)
    : name_(o.name_), gens_(o.gens_), rules_(o.rules_), relations_(o.relations_) {
  rebuild_index();
}

Presentation& Presentation::operator=(const Presentation& o) {
  if (this == &o) return *this;
  name_ = o.name_;
  gens_ = o.gens_;
  rules_ = o.rules_;
  relations_ = o.relations_;
  rebuild_index();
  return *this;
}

void Presentation::clear_cache() const {
  std::unique_lock lk(cache_mutex_);
  cache_.clear();
}

void Presentation::rebuild_index() {
  const std::size_t n = gens_ ? gens_->size() : 0;
  pair_table_.assign(n * n, -1);
  long_rules_.clear();
  long_lengths_.clear();
  max_len_ = 0;
  std::set<std::size_t> lens;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& l = rules_[i].lhs;
    max_len_ = std::max(max_len_, l.size());
    if (l.size() == 2) {
      pair_table_[letter(l, 0) * n + letter(l, 1)] = static_cast<int32_t>(i);
    } else {
      long_rules_[l] = i;
      lens.insert(l.size());
    }
  }
  long_lengths_.assign(lens.begin(), lens.end());
  clear_cache();
}

void Presentation::add_rule(const Word& lhs, const NCPoly& rhs) {
  if (lhs.size() < 2) throw std::invalid_argument("add_rule: lhs must have length >= 2");
  for (const auto& r : rules_)
    if (r.lhs == lhs) throw std::invalid_argument("add_rule: duplicate lhs " + gens_->word_str(lhs));
  for (const auto& [w, c] : rhs.terms())
    if (!DegLexLess()(w, lhs)) throw std::invalid_argument("add_rule: rhs not below lhs " + gens_->word_str(lhs));
  NCPoly r = rhs;
  if (!r.gens()) r = rebase(r, gens_);
  rules_.push_back({lhs, r});
  rebuild_index();
}

void Presentation::add_rule_from(const NCPoly& r) {
  if (r.is_zero()) return;
  Word lhs = r.leading_word();
  Scalar inv = r.leading_coeff().inverse();
  NCPoly rhs = NCPoly::monomial(gens_, lhs) - r * inv;
  add_rule(lhs, rhs);
}

bool Presentation::remove_rule(const Word& lhs) {
  auto it = std::find_if(rules_.begin(), rules_.end(), [&](const RewriteRule& r) { return r.lhs == lhs; });
  if (it == rules_.end()) return false;
  rules_.erase(it);
  rebuild_index();
  return true;
}

void Presentation::replace_rhs(std::size_t i, const NCPoly& rhs) {
  rules_.at(i).rhs = rhs;
  clear_cache();
}

bool Presentation::find_reducible(const Word& w, std::size_t& rule, std::size_t& pos) const {
  const std::size_t n = gens_->size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int32_t r = pair_table_[letter(w, i) * n + letter(w, i + 1)];
    if (r >= 0) {
      rule = static_cast<std::size_t>(r);
      pos = i;
      return true;
    }
    for (std::size_t L : long_lengths_) {
      if (i + L > w.size()) break;
      auto it = long_rules_.find(w.substr(i, L));
      if (it != long_rules_.end()) {
        rule = it->second;
        pos = i;
        return true;
      }
    }
  }
  return false;
}

bool Presentation::is_normal(const Word& w) const {
  std::size_t r, p;
  return !find_reducible(w, r, p);
}

NCPoly Presentation::nf_word_rec(const Word& w, std::size_t& steps, std::size_t budget) const {
  {
    std::shared_lock lk(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  std::size_t ri, pos;
  NCPoly out(gens_);
  if (!find_reducible(w, ri, pos)) {
    out.add_term(w, Scalar(1));
    return out;
  }
  if (++steps > budget) throw BudgetExceeded("normal_form: step budget exhausted in " + name_);
  const RewriteRule& r = rules_[ri];
  const Word prefix = w.substr(0, pos);
  const Word suffix = w.substr(pos + r.lhs.size());
  for (const auto& [t, c] : r.rhs.terms()) {
    NCPoly sub = nf_word_rec(prefix + t + suffix, steps, budget);
    for (const auto& [u, d] : sub.terms()) out.add_term(u, c * d);
  }
  std::unique_lock lk(cache_mutex_);
  if (cache_.size() > 4000000) cache_.clear();
  cache_.emplace(w, out);
  return out;
}

NCPoly Presentation::normal_form_word(const Word& w, std::size_t budget) const {
  std::size_t steps = 0;
  return nf_word_rec(w, steps, budget);
}

NCPoly Presentation::normal_form(const NCPoly& p, std::size_t budget) const {
  std::size_t steps = 0;
  NCPoly out(gens_);
  for (const auto& [w, c] : p.terms()) {
    if (is_normal(w)) {
      out.add_term(w, c);
      continue;
    }
    NCPoly sub = nf_word_rec(w, steps, budget);
    for (const auto& [u, d] : sub.terms()) out.add_term(u, c * d);
  }
  return out;
}

NCPoly normal_form(const NCPoly& p, const Presentation& pres, std::size_t budget) {
  return pres.normal_form(p, budget);
}

NCPoly rebase(const NCPoly& p, const GenSetPtr& g) {
  NCPoly r(g);
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (static_cast<std::size_t>(letter(w, i)) >= g->size()) throw std::invalid_argument("rebase: letter out of range");
    r.add_term(w, c);
  }
  return r;
}

namespace {

// rhs_i * c - a * rhs_j for lhs_i = a b, lhs_j = b c
NCPoly overlap_spoly(const Presentation& P, const RewriteRule& ri, const RewriteRule& rj, std::size_t k) {
  const Word a = ri.lhs.substr(0, ri.lhs.size() - k);
  const Word c = rj.lhs.substr(k);
  return mul(ri.rhs, P.word(c)) - mul(P.word(a), rj.rhs);
}

bool suffix_prefix(const Word& l1, const Word& l2, std::size_t k) {
  return l1.compare(l1.size() - k, k, l2, 0, k) == 0;
}

}  // namespace

std::vector<Overlap> check_confluence(const Presentation& pres, int max_degree) {
  std::vector<Overlap> out;
  const auto& rules = pres.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l1 = rules[i].lhs;
      const Word& l2 = rules[j].lhs;
      const std::size_t kmax = std::min(l1.size(), l2.size());
      for (std::size_t k = 1; k < kmax; ++k) {
        if (static_cast<int>(l1.size() + l2.size() - k) > max_degree) continue;
        if (!suffix_prefix(l1, l2, k)) continue;
        NCPoly d = pres.normal_form(overlap_spoly(pres, rules[i], rules[j], k));
        if (!d.is_zero()) out.push_back({l1 + l2.substr(k), d});
      }
      if (i != j && l2.size() < l1.size() && static_cast<int>(l1.size()) <= max_degree) {
        for (std::size_t pos = l1.find(l2); pos != Word::npos; pos = l1.find(l2, pos + 1)) {
          NCPoly alt = mul(mul(pres.word(l1.substr(0, pos)), rules[j].rhs), pres.word(l1.substr(pos + l2.size())));
          NCPoly d = pres.normal_form(rules[i].rhs - alt);
          if (!d.is_zero()) out.push_back({l1, d});
        }
      }
    }
  }
  return out;
}

bool is_central(const NCPoly& p, const Presentation& pres) {
  for (std::size_t g = 0; g < pres.gens()->size(); ++g) {
    NCPoly x = pres.gen(static_cast<int>(g));
    if (!pres.normal_form(mul(p, x) - mul(x, p)).is_zero()) return false;
  }
  return true;
}

namespace {

// Depth-first walk over the words of length d avoiding every lhs.
template <class Visit>
void walk_normal_words(const Presentation& pres, int d, Visit&& visit) {
  const int n = static_cast<int>(pres.gens()->size());
  const std::size_t maxl = pres.max_lhs_length();
  std::set<Word> lhs;
  for (const auto& r : pres.rules()) lhs.insert(r.lhs);
  Word w;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(w.size()) == d) {
      visit(w);
      return;
    }
    for (int g = 0; g < n; ++g) {
      w.push_back(static_cast<char>(g));
      bool bad = lhs.count(w.substr(w.size() - 1)) > 0;
      for (std::size_t L = 2; L <= std::min(maxl, w.size()) && !bad; ++L)
        bad = lhs.count(w.substr(w.size() - L)) > 0;
      if (!bad) rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace

std::size_t graded_dimension(const Presentation& pres, int d) {
  if (d < 0) return 0;
  std::size_t count = 0;
  walk_normal_words(pres, d, [&](const Word&) { ++count; });
  return count;
}

std::vector<Word> normal_words(const Presentation& pres, int d) {
  std::vector<Word> out;
  if (d >= 0) walk_normal_words(pres, d, [&](const Word& w) { out.push_back(w); });
  return out;
}

Presentation complete(Presentation P, const std::vector<NCPoly>& relations, int max_degree) {
  struct Item {
    int deg;
    std::uint64_t seq;
    NCPoly p;
  };
  auto cmp = [](const Item& a, const Item& b) { return a.deg != b.deg ? a.deg > b.deg : a.seq > b.seq; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pending(cmp);
  std::uint64_t seq = 0;
  for (const auto& r : relations) pending.push({r.degree(), seq++, rebase(r, P.gens())});

  auto push_overlaps = [&](const RewriteRule& nr) {
    for (const auto& r : P.rules()) {
      for (int side = 0; side < 2; ++side) {
        const RewriteRule& a = side ? r : nr;
        const RewriteRule& b = side ? nr : r;
        const std::size_t kmax = std::min(a.lhs.size(), b.lhs.size());
        for (std::size_t k = 1; k < kmax; ++k) {
          int len = static_cast<int>(a.lhs.size() + b.lhs.size() - k);
          if (len > max_degree || !suffix_prefix(a.lhs, b.lhs, k)) continue;
          pending.push({len, seq++, overlap_spoly(P, a, b, k)});
        }
      }
    }
  };

  while (!pending.empty()) {
    Item it = pending.top();
    pending.pop();
    NCPoly r = P.normal_form(it.p);
    if (r.is_zero()) continue;
    const Word lead = r.leading_word();
    std::vector<Word> doomed;
    for (const auto& rule : P.rules())
      if (rule.lhs.find(lead) != Word::npos) doomed.push_back(rule.lhs);
    for (const auto& l : doomed) {
      auto rit = std::find_if(P.rules().begin(), P.rules().end(), [&](const RewriteRule& x) { return x.lhs == l; });
      NCPoly back = P.word(rit->lhs) - rit->rhs;
      P.remove_rule(l);
      pending.push({back.degree(), seq++, back});
    }
    P.add_rule_from(r);
    push_overlaps(P.rules().back());
  }
  for (std::size_t i = 0; i < P.rules().size(); ++i) {
    NCPoly rhs = P.normal_form(P.rules()[i].rhs);
    P.replace_rhs(i, rhs);
  }
  std::vector<NCPoly> rels = P.relations();
  for (const auto& r : relations) rels.push_back(rebase(r, P.gens()));
  P.set_relations(std::move(rels));
  return P;
}

Scalar weight_phase(const std::vector<long>& a, const AngleMatrix& t, const std::vector<long>& b) {
  PiAngle s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) s = s + t[i][j].scaled(a[i] * b[j]);
  }
  return phase(s);
}

Presentation make_phase_presentation(const std::string& name, const std::vector<PhaseGenerator>& gens,
                                     const AngleMatrix& big_theta) {
  if (!is_antisymmetric(big_theta)) throw std::invalid_argument(name + ": angle matrix is not antisymmetric");
  std::vector<std::string> names;
  std::vector<int> star, parity;
  for (const auto& g : gens) {
    if (g.degree.size() != big_theta.size()) throw std::invalid_argument(name + ": weight dimension mismatch");
    names.push_back(g.name);
    star.push_back(g.star);
    parity.push_back(g.parity);
  }
  auto gs = std::make_shared<const GeneratorSet>(names, star, parity);
  Presentation P(name, gs);
  const int n = static_cast<int>(gens.size());
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < h; ++g) {
      Scalar c = weight_phase(gens[h].degree, big_theta, gens[g].degree);
      if (gens[h].parity && gens[g].parity) c = -c;
      Word lhs = make_word({h, g});
      NCPoly rhs = P.word(make_word({g, h}), c);
      P.add_rule(lhs, rhs);
      P.add_relation(P.word(lhs) - rhs);
    }
    if (gens[h].parity) {
      P.add_rule(make_word({h, h}), NCPoly(gs));
      P.add_relation(P.word(make_word({h, h})));
    }
  }
  return P;
}

namespace {

std::vector<long> unit_vec(std::size_t n, std::size_t i, long s) {
  std::vector<long> v(n, 0);
  v[i] = s;
  return v;
}

}  // namespace

Presentation make_r2n_theta(int n, const AngleMatrix& theta, bool with_x) {
  if (static_cast<int>(theta.size()) != n) throw std::invalid_argument("make_r2n_theta: theta size");
  std::vector<PhaseGenerator> g;
  for (int m = 0; m < n; ++m) g.push_back({"z" + std::to_string(m + 1), n + m, unit_vec(n, m, 1)});
  for (int m = 0; m < n; ++m) g.push_back({"zb" + std::to_string(m + 1), m, unit_vec(n, m, -1)});
  if (with_x) g.push_back({"x", 2 * n, std::vector<long>(n, 0)});
  return make_phase_presentation((with_x ? "R" + std::to_string(2 * n + 1) : "R" + std::to_string(2 * n)) + "_theta",
                                 g, theta);
}

Presentation make_torus(int n, const AngleMatrix& theta) {
  // U^m and its inverse are adjacent in the ranking; with the inverses ranked
  // after all U's the overlaps U^2 U^1 Ub^1 do not resolve.
  std::vector<PhaseGenerator> g;
  for (int m = 0; m < n; ++m) {
    g.push_back({"U" + std::to_string(m + 1), 2 * m + 1, unit_vec(n, m, 1)});
    g.push_back({"Ub" + std::to_string(m + 1), 2 * m, unit_vec(n, m, -1)});
  }
  Presentation P = make_phase_presentation("T" + std::to_string(n) + "_theta", g, theta);
  std::vector<NCPoly> rels;
  for (const auto& r : P.relations()) {
    const Word& w = r.leading_word();
    if (letter(w, 0) == letter(w, 1) + 1 && letter(w, 1) % 2 == 0) continue;
    rels.push_back(r);
  }
  for (int m = 0; m < n; ++m) {
    Word bu = make_word({2 * m + 1, 2 * m}), ub = make_word({2 * m, 2 * m + 1});
    P.remove_rule(bu);
    P.add_rule(bu, P.one());
    P.add_rule(ub, P.one());
    rels.push_back(P.word(bu) - P.one());
    rels.push_back(P.word(ub) - P.one());
  }
  P.set_relations(std::move(rels));
  return P;
}

Presentation make_sphere_quotient(const Presentation& p, const NCPoly& radius_relation, int max_degree) {
  NCPoly rel = rebase(radius_relation, p.gens());
  if (!is_central(rel, p)) throw std::invalid_argument(p.name() + ": radius relation is not central");
  Presentation Q = p;
  Q.add_rule_from(p.normal_form(rel));
  Q.add_relation(rel);
  if (!check_confluence(Q, max_degree).empty()) {
    Q = complete(p, {rel}, max_degree);
    if (!check_confluence(Q, max_degree).empty())
      throw ConfluenceFailure(p.name() + ": sphere quotient not confluent");
  }
  return Q;
}

Presentation make_even_sphere(int n, const AngleMatrix& theta) {
  Presentation P = make_r2n_theta(n, theta, true);
  NCPoly rel = P.word(make_word({2 * n, 2 * n})) - P.one();
  for (int m = 0; m < n; ++m) rel += P.word(make_word({m, n + m}));
  Presentation S = make_sphere_quotient(P, rel, 4);
  S.set_name("S" + std::to_string(2 * n) + "_theta");
  return S;
}

Presentation make_odd_sphere(int n, const AngleMatrix& theta) {
  std::vector<PhaseGenerator> g;
  for (int m = 0; m < n; ++m) {
    g.push_back({"z" + std::to_string(m + 1), 2 * m + 1, unit_vec(n, m, 1)});
    g.push_back({"zb" + std::to_string(m + 1), 2 * m, unit_vec(n, m, -1)});
  }
  Presentation P = make_phase_presentation("C" + std::to_string(n) + "_theta", g, theta);
  NCPoly rel = -P.one();
  for (int m = 0; m < n; ++m) rel += P.word(make_word({2 * m, 2 * m + 1}));
  Presentation S = make_sphere_quotient(P, rel, 4);
  S.set_name("S" + std::to_string(2 * n - 1) + "_theta");
  return S;
}

GenSetPtr au_generators() {
  return std::make_shared<const GeneratorSet>(std::vector<std::string>{"x0", "x1", "x2", "x3"}, std::vector<int>{});
}

namespace {

// (k, l, m) cyclic with k = 1, 2, 3
std::array<int, 3> cyclic(int k) { return {k, k % 3 + 1, (k + 1) % 3 + 1}; }

}  // namespace

std::vector<NCPoly> au_relations(const AngleTriple& u, const GenSetPtr& g) {
  std::vector<NCPoly> out;
  const Scalar i = imag_unit();
  auto x = [&](int a, int b) { return NCPoly::monomial(g, make_word({a, b})); };
  for (int k = 1; k <= 3; ++k) {
    auto [kk, l, m] = cyclic(k);
    const PiAngle pk = u.phi[kk - 1], dlm = u.phi[l - 1] - u.phi[m - 1];
    out.push_back(cos_pi(pk) * (x(0, kk) - x(kk, 0)) - i * sin_pi(dlm) * (x(l, m) + x(m, l)));
    out.push_back(cos_pi(dlm) * (x(l, m) - x(m, l)) + i * sin_pi(pk) * (x(0, kk) + x(kk, 0)));
  }
  return out;
}

Presentation make_a_u(const AngleTriple& u, int max_degree) {
  for (int k = 1; k <= 3; ++k) {
    auto [kk, l, m] = cyclic(k);
    if (cos_pi(u.phi[kk - 1]).is_zero())
      throw SingularElimination("A_u: cos(phi_" + std::to_string(kk) + ") = 0 in triple " + std::to_string(k), k);
    if (cos_pi(u.phi[l - 1] - u.phi[m - 1]).is_zero())
      throw SingularElimination("A_u: cos(phi_" + std::to_string(l) + " - phi_" + std::to_string(m) +
                                    ") = 0 in triple " + std::to_string(k),
                                k);
  }
  auto g = au_generators();
  std::string name = "A_u(" + u.phi[0].str() + "," + u.phi[1].str() + "," + u.phi[2].str() + ")";
  Presentation P = complete(Presentation(name, g), au_relations(u, g), max_degree);
  std::size_t quad = 0;
  for (const auto& r : P.rules()) quad += r.lhs.size() == 2;
  if (quad != 6) throw SingularElimination(name + ": quadratic relations have rank " + std::to_string(quad), 0);
  return P;
}

Presentation make_s3_u(const AngleTriple& u) {
  Presentation A = make_a_u(u, 4);
  NCPoly rel = -A.one();
  for (int m = 0; m < 4; ++m) rel += A.word(make_word({m, m}));
  Presentation S = make_sphere_quotient(A, rel, 4);
  S.set_name("S3_u(" + u.phi[0].str() + "," + u.phi[1].str() + "," + u.phi[2].str() + ")");
  return S;
}

Presentation make_r5_u(const AngleTriple& u, bool sphere) {
  Presentation A = make_a_u(u, 4);
  auto g = std::make_shared<const GeneratorSet>(std::vector<std::string>{"x0", "x1", "x2", "x3", "x4"},
                                                std::vector<int>{});
  const std::string tag = "(" + u.phi[0].str() + "," + u.phi[1].str() + "," + u.phi[2].str() + ")";
  Presentation P(sphere ? "S4_u" + tag : "R5_u" + tag, g);
  for (const auto& r : A.rules()) P.add_rule(r.lhs, rebase(r.rhs, g));
  for (const auto& r : A.relations()) P.add_relation(rebase(r, g));
  for (int m = 0; m < 4; ++m) {
    P.add_rule(make_word({4, m}), P.word(make_word({m, 4})));
    P.add_relation(P.word(make_word({4, m})) - P.word(make_word({m, 4})));
  }
  if (sphere) {
    NCPoly rest = P.one();
    for (int m = 0; m < 4; ++m) rest -= P.word(make_word({m, m}));
    P.add_rule(make_word({4, 4}), P.normal_form(rest));
    P.add_relation(P.word(make_word({4, 4})) - rest);
  }
  return P;
}

std::array<Scalar, 3> sklyanin_j(const AngleTriple& u) {
  std::array<Scalar, 3> j;
  for (int k = 1; k <= 3; ++k) {
    auto [kk, l, m] = cyclic(k);
    const PiAngle pk = u.phi[kk - 1], dlm = u.phi[l - 1] - u.phi[m - 1];
    if (cos_pi(pk).is_zero() || cos_pi(dlm).is_zero())
      throw SingularElimination("J undefined: vanishing cosine in triple " + std::to_string(k), k);
    j[kk - 1] = -(sin_pi(dlm) / cos_pi(dlm)) * (sin_pi(pk) / cos_pi(pk));
  }
  return j;
}

Presentation make_sklyanin(const std::array<Scalar, 3>& j, int max_degree) {
  auto g = std::make_shared<const GeneratorSet>(std::vector<std::string>{"S0", "S1", "S2", "S3"}, std::vector<int>{});
  const Scalar i = imag_unit();
  auto s = [&](int a, int b) { return NCPoly::monomial(g, make_word({a, b})); };
  std::vector<NCPoly> rels;
  for (int k = 1; k <= 3; ++k) {
    auto [kk, l, m] = cyclic(k);
    rels.push_back(s(0, kk) - s(kk, 0) - i * j[kk - 1] * (s(l, m) + s(m, l)));
    rels.push_back(s(l, m) - s(m, l) - i * (s(0, kk) + s(kk, 0)));
  }
  return complete(Presentation("Sklyanin", g), rels, max_degree);
}

}  // namespace ncs
