#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ncsphere/rewrite.hpp"
#include "ncsphere/scalar.hpp"

namespace ncs {

// One letter of the free product M_2(C) * C[U, U^-1]: a Pauli matrix
// sigma_v (v in 1..3) or a power U^v (v != 0).
struct FPToken {
  bool is_u = false;
  int v = 0;
  friend auto operator<=>(const FPToken&, const FPToken&) = default;
};

// Alternating sigma / U-power word; the empty word is the unit.
using FPWord = std::vector<FPToken>;

std::string to_string(const FPWord& w);
// Parses words such as "U^3 s2 U s2" or "s1 U^-1"; "1" is the empty word.
FPWord parse_fp_word(const std::string& s);

class FPElement {
 public:
  using Terms = std::map<FPWord, Scalar>;

  FPElement() = default;
  static FPElement scalar(const Scalar& c);
  static FPElement sigma(int k);  // k = 0 gives the unit
  static FPElement u_power(int j);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const FPWord& w) const;
  Rational l1_norm_bound() const;  // sum of |re| + |im| over Gaussian-rational coefficients

  void add_term(const FPWord& w, const Scalar& c);
  FPElement& operator+=(const FPElement& o);
  FPElement& operator-=(const FPElement& o);
  friend FPElement operator+(FPElement a, const FPElement& b) { return a += b; }
  friend FPElement operator-(FPElement a, const FPElement& b) { return a -= b; }
  friend FPElement operator*(const Scalar& c, FPElement a);
  friend bool operator==(const FPElement& a, const FPElement& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

// Concatenation followed by merging U powers and multiplying Pauli matrices
// at the junction.
FPElement fp_mul(const FPElement& a, const FPElement& b);
inline FPElement operator*(const FPElement& a, const FPElement& b) { return fp_mul(a, b); }
// sigma_k hermitian, U unitary, coefficients conjugated.
FPElement fp_star(const FPElement& a);

// Gamma = (Z/2)^2 indexed by a = 2 alpha + beta, so sigma(a) = sigma_a.
int gamma_pairing(int a, int b);  // <a, b> = alpha beta' - alpha' beta mod 2

// P(T) = 1/4 sum_a sigma(a) T sigma(a)^{-1}
FPElement proj_P(const FPElement& t);
FPElement x_generator(int a);  // P(sigma(a) U)

// sum over permutations of sign * product
FPElement antisym_bracket(const std::vector<FPElement>& xs);

struct MuReport {
  FPElement mu;
  FPElement mu_star;
  FPElement mu_mu_star;
  FPElement mu_star_mu;
  FPElement commutator;  // mu mu* - mu* mu
};
MuReport mu_and_commutator();

// True iff some word of x starts with a positive power of U.
bool has_word_starting_with_positive_u(const FPElement& x);

// Normal form of [m, m*] in A_u with m = [z0, z1, z2, z3], z0 = x0,
// zk = e^{i phi_k} xk. True iff it vanishes.
bool mu_vanishes_in_Au(const AngleTriple& u);
// The same expression in the free *-algebra on z0..z3 and their adjoints.
bool mu_vanishes_free();

}  // namespace ncs
