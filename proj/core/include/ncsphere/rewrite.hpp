#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncsphere/ncalg.hpp"

namespace ncs {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularElimination : std::runtime_error {
  SingularElimination(const std::string& what, int k) : std::runtime_error(what), triple(k) {}
  int triple;  // k of the cyclic triple (k, l, m) that degenerated
};

struct ConfluenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

// Angles in units of pi; theta[i][j] = -theta[j][i].
using AngleMatrix = std::vector<std::vector<PiAngle>>;

AngleMatrix zero_angles(std::size_t n);
// n = 2 shorthand: theta_12 = t
AngleMatrix angles2(const PiAngle& t);
bool is_antisymmetric(const AngleMatrix& t);
// block diagonal t (+) (-t)
AngleMatrix angle_sum_neg(const AngleMatrix& t);

constexpr std::size_t kDefaultBudget = 1000000;

class Presentation {
 public:
  Presentation(std::string name, GenSetPtr gens);
  Presentation(const Presentation& o);
  Presentation& operator=(const Presentation& o);

  const std::string& name() const { return name_; }
  const GenSetPtr& gens() const { return gens_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::vector<NCPoly>& relations() const { return relations_; }

  NCPoly gen(int i, const Scalar& c = Scalar(1)) const { return NCPoly::gen(gens_, i, c); }
  NCPoly one(const Scalar& c = Scalar(1)) const { return NCPoly::constant(gens_, c); }
  NCPoly word(const Word& w, const Scalar& c = Scalar(1)) const { return NCPoly::monomial(gens_, w, c); }
  int index(const std::string& name) const { return gens_->index(name); }

  // lhs must be the leading word of lhs - rhs; rhs is stored as given
  void add_rule(const Word& lhs, const NCPoly& rhs);
  // adds the rule lead(r) -> lead(r) - r/lc(r)
  void add_rule_from(const NCPoly& r);
  bool remove_rule(const Word& lhs);
  void replace_rhs(std::size_t i, const NCPoly& rhs);
  void add_relation(const NCPoly& r) { relations_.push_back(r); }
  void set_relations(std::vector<NCPoly> r) { relations_ = std::move(r); }
  void set_name(std::string n) { name_ = std::move(n); }

  // index of the rule whose lhs occurs leftmost in w, with its position
  bool find_reducible(const Word& w, std::size_t& rule, std::size_t& pos) const;
  bool is_normal(const Word& w) const;

  NCPoly normal_form(const NCPoly& p, std::size_t budget = kDefaultBudget) const;
  NCPoly normal_form_word(const Word& w, std::size_t budget = kDefaultBudget) const;
  NCPoly mul(const NCPoly& a, const NCPoly& b) const { return normal_form(ncs::mul(a, b)); }
  bool reduces_to_zero(const NCPoly& p) const { return normal_form(p).is_zero(); }

  std::size_t max_lhs_length() const { return max_len_; }

 private:
  void rebuild_index();
  void clear_cache() const;
  NCPoly nf_word_rec(const Word& w, std::size_t& steps, std::size_t budget) const;

  std::string name_;
  GenSetPtr gens_;
  std::vector<RewriteRule> rules_;
  std::vector<NCPoly> relations_;

  std::vector<int32_t> pair_table_;  // g * ngens + h -> rule index for length-2 lhs
  std::unordered_map<std::string, std::size_t> long_rules_;
  std::vector<std::size_t> long_lengths_;
  std::size_t max_len_ = 0;

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<Word, NCPoly> cache_;
};

NCPoly normal_form(const NCPoly& p, const Presentation& pres, std::size_t budget = kDefaultBudget);

struct Overlap {
  Word word;
  NCPoly difference;
};

// All overlap and inclusion ambiguities of total length <= max_degree whose
// two reductions disagree.
std::vector<Overlap> check_confluence(const Presentation& pres, int max_degree);

bool is_central(const NCPoly& p, const Presentation& pres);

// Number of normal words of length d.
std::size_t graded_dimension(const Presentation& pres, int d);
std::vector<Word> normal_words(const Presentation& pres, int d);

// Truncated Bergman completion: adds `relations` to `base` and resolves every
// ambiguity of length <= max_degree.
Presentation complete(Presentation base, const std::vector<NCPoly>& relations, int max_degree);

// Copy of p with polynomials moved to generator set g (same leading names).
NCPoly rebase(const NCPoly& p, const GenSetPtr& g);

struct PhaseGenerator {
  std::string name;
  int star;
  std::vector<long> degree;  // weight in Z^m
  int parity = 0;
};

// Generators are listed in rank order.  For rank(h) > rank(g) the rule is
// h g -> exp(i pi <p_h, Theta p_g>) (-1)^{|h||g|} g h, and odd g have g g -> 0.
Presentation make_phase_presentation(const std::string& name, const std::vector<PhaseGenerator>& gens,
                                     const AngleMatrix& big_theta);

Scalar weight_phase(const std::vector<long>& a, const AngleMatrix& t, const std::vector<long>& b);

// Pol(R^{2n}_theta) with z^1..z^n, zb^1..zb^n; with_x adds a central hermitian x.
Presentation make_r2n_theta(int n, const AngleMatrix& theta, bool with_x = false);
// Noncommutative torus, generators interleaved U^1, Ub^1, ..., Ub^mu = (U^mu)^{-1}.
Presentation make_torus(int n, const AngleMatrix& theta);
// Pol(S^{2n}_theta): sum z zb + x^2 = 1.
Presentation make_even_sphere(int n, const AngleMatrix& theta);
// Pol(S^{2n-1}_theta), generators interleaved z^1, zb^1, ..., z^n, zb^n.
Presentation make_odd_sphere(int n, const AngleMatrix& theta);

// Adds the rule for a central radius relation and re-checks confluence up
// to max_degree, completing when overlaps fail.
Presentation make_sphere_quotient(const Presentation& p, const NCPoly& radius_relation, int max_degree = 4);

struct AngleTriple {
  PiAngle phi[3];
};

// Relations (cos phi_k [x0,xk]_- - i sin(phi_l - phi_m)[xl,xm]_+, ...), k = 1,2,3.
std::vector<NCPoly> au_relations(const AngleTriple& u, const GenSetPtr& g);
GenSetPtr au_generators();
Presentation make_a_u(const AngleTriple& u, int max_degree = 6);
Presentation make_s3_u(const AngleTriple& u);
// x^4 central and hermitian, ranked last; radius relation added when sphere.
Presentation make_r5_u(const AngleTriple& u, bool sphere);

std::array<Scalar, 3> sklyanin_j(const AngleTriple& u);  // J_23, J_31, J_12
Presentation make_sklyanin(const std::array<Scalar, 3>& j, int max_degree = 4);

}  // namespace ncs
