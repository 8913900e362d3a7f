#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncsphere/scalar.hpp"

namespace ncs {

// A word is a string of generator indices (one char per letter); the
// generator numbering is the ranking used by the word order.
using Word = std::string;

inline Word make_word(std::initializer_list<int> idx) {
  Word w;
  for (int i : idx) w.push_back(static_cast<char>(i));
  return w;
}
inline int letter(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

// Graded lexicographic: shorter first, then lexicographic by rank.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class GeneratorSet {
 public:
  GeneratorSet(std::vector<std::string> names, std::vector<int> star, std::vector<int> parity = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_.at(i); }
  int star(int i) const { return star_.at(i); }
  int parity(int i) const { return parity_.at(i); }
  int index(const std::string& name) const;  // -1 when absent
  const std::vector<std::string>& names() const { return names_; }

  std::string word_str(const Word& w) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> star_;
  std::vector<int> parity_;
};

using GenSetPtr = std::shared_ptr<const GeneratorSet>;

class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, DegLexLess>;

  NCPoly() = default;
  explicit NCPoly(GenSetPtr g) : gens_(std::move(g)) {}

  static NCPoly constant(GenSetPtr g, const Scalar& c);
  static NCPoly gen(GenSetPtr g, int i, const Scalar& c = Scalar(1));
  static NCPoly monomial(GenSetPtr g, Word w, const Scalar& c = Scalar(1));

  const GenSetPtr& gens() const { return gens_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }
  Scalar coeff(const Word& w) const;
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Word& w, const Scalar& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator-(NCPoly a) { return a *= Scalar(-1); }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  // homogeneous component of the given word length
  NCPoly component(std::size_t len) const;
  std::string str() const;

 private:
  GenSetPtr gens_;
  Terms terms_;
};

GenSetPtr common_gens(const GenSetPtr& a, const GenSetPtr& b);

// Free-algebra product (no relations applied).
NCPoly mul(const NCPoly& p, const NCPoly& q);
inline NCPoly operator*(const NCPoly& p, const NCPoly& q) { return mul(p, q); }
// Antilinear, antimultiplicative involution through the star pairing.
NCPoly star(const NCPoly& p);

using WordTuple = std::vector<Word>;

struct TupleLess {
  bool operator()(const WordTuple& a, const WordTuple& b) const {
    DegLexLess l;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (l(a[i], b[i])) return true;
      if (l(b[i], a[i])) return false;
    }
    return a.size() < b.size();
  }
};

class TensorChain {
 public:
  using Terms = std::map<WordTuple, Scalar, TupleLess>;

  TensorChain() = default;
  explicit TensorChain(std::size_t arity) : arity_(arity) {}

  static TensorChain tensor(const std::vector<NCPoly>& factors);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const WordTuple& t) const;

  void add_term(const WordTuple& t, const Scalar& c);
  TensorChain& operator+=(const TensorChain& o);
  TensorChain& operator-=(const TensorChain& o);
  TensorChain& operator*=(const Scalar& c);
  friend TensorChain operator+(TensorChain a, const TensorChain& b) { return a += b; }
  friend TensorChain operator-(TensorChain a, const TensorChain& b) { return a -= b; }
  friend TensorChain operator*(const Scalar& c, TensorChain a) { return a *= c; }
  friend bool operator==(const TensorChain& a, const TensorChain& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // a (x) p, appending p as a new last factor
  TensorChain append(const NCPoly& p) const;
  std::string str(const GeneratorSet& g) const;

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols);
  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const Scalar& s) const;
  ScalarMatrix adjoint() const;
  ScalarMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Scalar trace() const;
  bool is_zero() const;
  bool operator==(const ScalarMatrix& o) const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b);

// Exact rank by Gaussian elimination.
std::size_t matrix_rank(ScalarMatrix m);

// Incremental row-echelon basis of sparse vectors keyed by K.
template <class K, class Less = std::less<K>>
class SparseSpan {
 public:
  using Vec = std::map<K, Scalar, Less>;

  // Reduces v against the basis; returns the remainder.
  Vec reduce(Vec v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      Scalar c = it->second;
      for (const auto& [k, x] : row) {
        auto [jt, ins] = v.try_emplace(k, -(c * x));
        if (!ins) {
          jt->second -= c * x;
          if (jt->second.is_zero()) v.erase(jt);
        }
      }
    }
    return v;
  }
  // Adds v; returns false when v was already in the span.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const K pivot = v.rbegin()->first;
    Scalar inv = v.rbegin()->second.inverse();
    for (auto& [k, x] : v) x *= inv;
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Scalar c = it->second;
      for (const auto& [k, x] : v) {
        auto [jt, ins] = row.try_emplace(k, -(c * x));
        if (!ins) {
          jt->second -= c * x;
          if (jt->second.is_zero()) row.erase(jt);
        }
      }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }
  bool contains(const Vec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<K, Vec, Less> rows_;  // pivot = largest key of the row
};

class MatrixPoly {
 public:
  MatrixPoly() = default;
  MatrixPoly(GenSetPtr g, std::size_t q);

  static MatrixPoly identity(GenSetPtr g, std::size_t q);
  // sum_k M_k (x) p_k
  static MatrixPoly linear(GenSetPtr g, const std::vector<std::pair<ScalarMatrix, NCPoly>>& terms);

  std::size_t size() const { return q_; }
  const GenSetPtr& gens() const { return gens_; }
  NCPoly& operator()(std::size_t i, std::size_t j) { return e_[i * q_ + j]; }
  const NCPoly& operator()(std::size_t i, std::size_t j) const { return e_[i * q_ + j]; }

  MatrixPoly operator+(const MatrixPoly& o) const;
  MatrixPoly operator-(const MatrixPoly& o) const;
  MatrixPoly operator*(const MatrixPoly& o) const;  // free-algebra products
  MatrixPoly scaled(const Scalar& s) const;
  bool is_zero() const;

 private:
  GenSetPtr gens_;
  std::size_t q_ = 0;
  std::vector<NCPoly> e_;
};

MatrixPoly star(const MatrixPoly& m);  // conjugate transpose

class ChainMatrix {
 public:
  ChainMatrix() = default;
  ChainMatrix(std::size_t q, std::size_t arity);
  std::size_t size() const { return q_; }
  TensorChain& operator()(std::size_t i, std::size_t j) { return e_[i * q_ + j]; }
  const TensorChain& operator()(std::size_t i, std::size_t j) const { return e_[i * q_ + j]; }
  ChainMatrix operator-(const ChainMatrix& o) const;

 private:
  std::size_t q_ = 0;
  std::vector<TensorChain> e_;
};

// (M ⊛ N)^a_b = M^a_c (x) N^c_b
ChainMatrix circledcirc(const MatrixPoly& m, const MatrixPoly& n);
ChainMatrix circledcirc(const ChainMatrix& m, const MatrixPoly& n);
ChainMatrix as_chain_matrix(const MatrixPoly& m);
TensorChain trace(const ChainMatrix& m);

}  // namespace ncs
