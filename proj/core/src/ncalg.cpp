#include "ncsphere/ncalg.hpp"

#include <sstream>
#include <stdexcept>

namespace ncs {

GeneratorSet::GeneratorSet(std::vector<std::string> names, std::vector<int> star, std::vector<int> parity)
    : names_(std::move(names)), star_(std::move(star)), parity_(std::move(parity)) {
  if (names_.size() > 255) throw std::invalid_argument("GeneratorSet: at most 255 generators");
  if (star_.empty()) {
    for (std::size_t i = 0; i < names_.size(); ++i) star_.push_back(static_cast<int>(i));
  }
  if (parity_.empty()) parity_.assign(names_.size(), 0);
  if (star_.size() != names_.size() || parity_.size() != names_.size())
    throw std::invalid_argument("GeneratorSet: size mismatch");
  for (std::size_t i = 0; i < star_.size(); ++i) {
    int s = star_[i];
    if (s < 0 || static_cast<std::size_t>(s) >= names_.size() || star_[s] != static_cast<int>(i))
      throw std::invalid_argument("GeneratorSet: star is not an involution");
  }
}

int GeneratorSet::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string GeneratorSet::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += names_.at(letter(w, i));
  }
  return out;
}

NCPoly NCPoly::constant(GenSetPtr g, const Scalar& c) { return monomial(std::move(g), Word(), c); }

NCPoly NCPoly::gen(GenSetPtr g, int i, const Scalar& c) {
  return monomial(std::move(g), Word(1, static_cast<char>(i)), c);
}

NCPoly NCPoly::monomial(GenSetPtr g, Word w, const Scalar& c) {
  NCPoly p(std::move(g));
  p.add_term(w, c);
  return p;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GenSetPtr common_gens(const GenSetPtr& a, const GenSetPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (a->names() != b->names()) throw std::invalid_argument("polynomials over different generator sets");
  return a;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  gens_ = common_gens(gens_, o.gens_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  gens_ = common_gens(gens_, o.gens_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly NCPoly::component(std::size_t len) const {
  NCPoly r(gens_);
  for (const auto& [w, c] : terms_)
    if (w.size() == len) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!w.empty()) os << "*" << (gens_ ? gens_->word_str(w) : std::string("?"));
  }
  return os.str();
}

NCPoly mul(const NCPoly& p, const NCPoly& q) {
  NCPoly r(common_gens(p.gens(), q.gens()));
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) r.add_term(a + b, ca * cb);
  return r;
}

NCPoly star(const NCPoly& p) {
  if (!p.gens()) throw std::invalid_argument("star: polynomial has no generator set");
  const auto& g = *p.gens();
  NCPoly r(p.gens());
  for (const auto& [w, c] : p.terms()) {
    Word s(w.rbegin(), w.rend());
    for (auto& ch : s) ch = static_cast<char>(g.star(static_cast<unsigned char>(ch)));
    r.add_term(s, c.conj());
  }
  return r;
}

TensorChain TensorChain::tensor(const std::vector<NCPoly>& factors) {
  TensorChain t(0);
  t.add_term({}, Scalar(1));
  for (const auto& f : factors) t = t.append(f);
  return t;
}

Scalar TensorChain::coeff(const WordTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar() : it->second;
}

void TensorChain::add_term(const WordTuple& t, const Scalar& c) {
  if (t.size() != arity_) throw std::invalid_argument("TensorChain: arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorChain& TensorChain::operator+=(const TensorChain& o) {
  if (terms_.empty() && arity_ != o.arity_) arity_ = o.arity_;
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

TensorChain& TensorChain::operator-=(const TensorChain& o) {
  if (terms_.empty() && arity_ != o.arity_) arity_ = o.arity_;
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

TensorChain& TensorChain::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

TensorChain TensorChain::append(const NCPoly& p) const {
  TensorChain r(arity_ + 1);
  for (const auto& [t, c] : terms_) {
    for (const auto& [w, d] : p.terms()) {
      WordTuple u = t;
      u.push_back(w);
      r.add_term(u, c * d);
    }
  }
  return r;
}

std::string TensorChain::str(const GeneratorSet& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " (x) " : " ") << g.word_str(t[i]);
  }
  return os.str();
}

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  ScalarMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.r_; ++i) {
    if (rows[i].size() != m.c_) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  ScalarMatrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
  return m;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  ScalarMatrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  ScalarMatrix m(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
    }
  return m;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
  ScalarMatrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

ScalarMatrix ScalarMatrix::adjoint() const {
  ScalarMatrix m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

ScalarMatrix ScalarMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  ScalarMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Scalar ScalarMatrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

std::size_t matrix_rank(ScalarMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(piv, j));
    Scalar inv = m(rank, col).inverse();
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      Scalar f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(rank, j).is_zero()) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

MatrixPoly::MatrixPoly(GenSetPtr g, std::size_t q) : gens_(g), q_(q), e_(q * q, NCPoly(g)) {}

MatrixPoly MatrixPoly::identity(GenSetPtr g, std::size_t q) {
  MatrixPoly m(g, q);
  for (std::size_t i = 0; i < q; ++i) m(i, i) = NCPoly::constant(g, Scalar(1));
  return m;
}

MatrixPoly MatrixPoly::linear(GenSetPtr g, const std::vector<std::pair<ScalarMatrix, NCPoly>>& terms) {
  if (terms.empty()) throw std::invalid_argument("MatrixPoly::linear: no terms");
  const std::size_t q = terms[0].first.rows();
  MatrixPoly m(g, q);
  for (const auto& [s, p] : terms) {
    if (s.rows() != q || s.cols() != q) throw std::invalid_argument("MatrixPoly::linear: shape mismatch");
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (!s(i, j).is_zero()) m(i, j) += s(i, j) * p;
  }
  return m;
}

MatrixPoly MatrixPoly::operator+(const MatrixPoly& o) const {
  MatrixPoly m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
  return m;
}

MatrixPoly MatrixPoly::operator-(const MatrixPoly& o) const {
  MatrixPoly m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
  return m;
}

MatrixPoly MatrixPoly::operator*(const MatrixPoly& o) const {
  if (q_ != o.q_) throw std::invalid_argument("MatrixPoly: size mismatch");
  MatrixPoly m(common_gens(gens_, o.gens_), q_);
  for (std::size_t i = 0; i < q_; ++i)
    for (std::size_t k = 0; k < q_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < q_; ++j)
        if (!o(k, j).is_zero()) m(i, j) += mul((*this)(i, k), o(k, j));
    }
  return m;
}

MatrixPoly MatrixPoly::scaled(const Scalar& s) const {
  MatrixPoly m = *this;
  for (auto& p : m.e_) p *= s;
  return m;
}

bool MatrixPoly::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

MatrixPoly star(const MatrixPoly& m) {
  MatrixPoly r(m.gens(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(j, i) = star(m(i, j));
  return r;
}

ChainMatrix::ChainMatrix(std::size_t q, std::size_t arity) : q_(q), e_(q * q, TensorChain(arity)) {}

ChainMatrix ChainMatrix::operator-(const ChainMatrix& o) const {
  ChainMatrix m = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
  return m;
}

ChainMatrix as_chain_matrix(const MatrixPoly& m) {
  ChainMatrix c(m.size(), 1);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) c(i, j) = TensorChain::tensor({m(i, j)});
  return c;
}

ChainMatrix circledcirc(const ChainMatrix& m, const MatrixPoly& n) {
  if (m.size() != n.size()) throw std::invalid_argument("circledcirc: size mismatch");
  const std::size_t q = m.size();
  const std::size_t ar = q ? m(0, 0).arity() : 0;
  ChainMatrix r(q, ar + 1);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t c = 0; c < q; ++c) {
      if (m(a, c).is_zero()) continue;
      for (std::size_t b = 0; b < q; ++b)
        if (!n(c, b).is_zero()) r(a, b) += m(a, c).append(n(c, b));
    }
  return r;
}

ChainMatrix circledcirc(const MatrixPoly& m, const MatrixPoly& n) {
  return circledcirc(as_chain_matrix(m), n);
}

TensorChain trace(const ChainMatrix& m) {
  if (m.size() == 0) return TensorChain();
  TensorChain t(m(0, 0).arity());
  for (std::size_t i = 0; i < m.size(); ++i) t += m(i, i);
  return t;
}

}  // namespace ncs
