#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncsphere/diffforms.hpp"
#include "ncsphere/qgroup.hpp"
#include "ncsphere/rewrite.hpp"

namespace ncs {

// Element of (classical algebra) (x) (noncommutative torus): classical part
// is a normal word of the theta = 0 presentation, torus part a
// normal-ordered multi-exponent U^k = (U^1)^{k_1} ... (U^m)^{k_m}.
class SplitElement {
 public:
  using Key = std::pair<Word, std::vector<long>>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      DegLexLess l;
      if (l(a.first, b.first)) return true;
      if (l(b.first, a.first)) return false;
      return a.second < b.second;
    }
  };
  using Terms = std::map<Key, Scalar, KeyLess>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const Key& k, const Scalar& c);
  SplitElement& operator+=(const SplitElement& o);
  SplitElement& operator-=(const SplitElement& o);
  friend SplitElement operator+(SplitElement a, const SplitElement& b) { return a += b; }
  friend SplitElement operator-(SplitElement a, const SplitElement& b) { return a -= b; }
  friend SplitElement operator*(const Scalar& c, SplitElement a);
  friend bool operator==(const SplitElement& a, const SplitElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

// st(g) = g_(0) (x) U^{weight(g)} for every generator g.
struct Splitter {
  Presentation classical;  // same generators at theta = 0
  std::vector<std::vector<long>> weight;
  AngleMatrix big_theta;  // torus angles

  Splitter(Presentation c, std::vector<std::vector<long>> w, AngleMatrix t)
      : classical(std::move(c)), weight(std::move(w)), big_theta(std::move(t)) {}
};

// U^k U^l = exp(i pi sum_{mu > nu} k_mu l_nu Theta_{mu nu}) U^{k+l}
Scalar torus_phase(const AngleMatrix& big_theta, const std::vector<long>& k, const std::vector<long>& l);

// Pol(R^{2n}_theta) (with_x adds the central x of weight 0).
Splitter splitter_plane(int n, const AngleMatrix& theta, bool with_x = false);
// S^{2n}_theta (even) or S^{2n-1}_theta with the classical sphere as first factor.
Splitter splitter_sphere(int n, const AngleMatrix& theta, bool even);
// Omega(R^{2n}_theta); the classical side is make_forms(n, 0, with_x).
Splitter splitter_forms(int n, const AngleMatrix& theta, bool with_x = false);
// M_theta(2n, R) into classical M(2n, R) (x) T_theta (x) T_{-theta}.
Splitter splitter_qgroup(int n, const AngleMatrix& theta);

SplitElement st(const Splitter& s, const NCPoly& p);
SplitElement split_mul(const Splitter& s, const SplitElement& a, const SplitElement& b);
// classical (x) 1
SplitElement classical_part(const Splitter& s, const NCPoly& p);

// (d (x) I) with d the differential of the classical forms algebra.
SplitElement split_differential(const FormAlgebra& classical_forms, const SplitElement& x);

// Every term has classical weight equal to its torus exponent, i.e. is
// fixed by sigma_s (x) tau_{-s}.
bool diagonal_invariant(const Splitter& s, const SplitElement& x);

// sigma_s on generators: g -> e^{i pi <t, weight(g)>} g, angles t in units of pi.
NCPoly sigma_action(const std::vector<std::vector<long>>& weight, const NCPoly& p, const std::vector<PiAngle>& t);
SplitElement sigma_on_classical(const Splitter& s, const SplitElement& x, const std::vector<PiAngle>& t);

// Every relation of the deformed presentation maps to zero.
bool split_relations_vanish(const Splitter& s, const Presentation& deformed);

struct InjectivityReport {
  int degree = 0;
  std::size_t words = 0;
  std::size_t rank = 0;
};
// Rank of the images of the normal words of each degree 0..max_degree.
std::vector<InjectivityReport> injectivity_ranks(const Splitter& s, const Presentation& deformed, int max_degree);

}  // namespace ncs
