#include "mnhd/exact_matrix.hpp"

#include "mnhd/error.hpp"

namespace mnhd {

namespace {

using Entries = std::vector<mpz_class>;

// c += a * b for n x n integer matrices.
void addmul(Entries& c, const Entries& a, const Entries& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class& aik = a[i * n + k];
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        mpz_addmul(c[i * n + j].get_mpz_t(), aik.get_mpz_t(),
                   b[k * n + j].get_mpz_t());
    }
}

bool all_zero(const Entries& e) {
  for (const auto& x : e)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t n)
    : n_(n), rational_(n * n), surd_(n * n) {}

ExactMatrix::ExactMatrix(const IntMatrix& m) : ExactMatrix(m.dim()) {
  for (std::size_t i = 0; i < rational_.size(); ++i)
    rational_[i] = static_cast<long>(m.flat()[i]);
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix e(n);
  for (std::size_t i = 0; i < n; ++i) e.rational_[i * n + i] = 1;
  return e;
}

ExactMatrix ExactMatrix::uniform(std::size_t n) {
  ExactMatrix e(n);
  for (auto& x : e.rational_) x = 1;
  e.den_ = static_cast<unsigned long>(n);
  return e;
}

QuadValue ExactMatrix::at(std::size_t i, std::size_t j) const {
  const std::size_t k = i * n_ + j;
  if (m_ == 0) return QuadValue(mpq_class(rational_[k], den_));
  return QuadValue(mpq_class(rational_[k], den_), mpq_class(surd_[k], den_),
                   m_);
}

QuadValue ExactMatrix::trace() const {
  mpz_class a = 0, b = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    a += rational_[i * n_ + i];
    b += surd_[i * n_ + i];
  }
  if (m_ == 0) return QuadValue(mpq_class(a, den_));
  return QuadValue(mpq_class(a, den_), mpq_class(b, den_), m_);
}

bool ExactMatrix::is_zero() const {
  return all_zero(rational_) && all_zero(surd_);
}

bool ExactMatrix::surd_part_zero() const { return all_zero(surd_); }

bool ExactMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (rational_[i * n_ + j] != rational_[j * n_ + i] ||
          surd_[i * n_ + j] != surd_[j * n_ + i])
        return false;
  return true;
}

unsigned long ExactMatrix::merge_radicand(const ExactMatrix& x,
                                          const ExactMatrix& y) {
  if (x.m_ == 0) return y.m_;
  if (y.m_ == 0 || x.m_ == y.m_) return x.m_;
  throw Error(ErrorCode::MixedRadicands,
              "matrices over sqrt(" + std::to_string(x.m_) + ") and sqrt(" +
                  std::to_string(y.m_) + ")");
}

void ExactMatrix::rescale_to(const mpz_class& den) {
  if (den == den_) return;
  const mpz_class f = den / den_;
  for (auto& x : rational_) x *= f;
  for (auto& x : surd_) x *= f;
  den_ = den;
}

void ExactMatrix::reduce() {
  mpz_class g = den_;
  for (const auto& x : rational_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  for (const auto& x : surd_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g != 1) {
    for (auto& x : rational_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (auto& x : surd_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    den_ /= g;
  }
  if (m_ != 0 && surd_part_zero()) m_ = 0;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  m_ = merge_radicand(*this, o);
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
  rescale_to(l);
  const mpz_class f = l / o.den_;
  for (std::size_t i = 0; i < rational_.size(); ++i) {
    mpz_addmul(rational_[i].get_mpz_t(), o.rational_[i].get_mpz_t(), f.get_mpz_t());
    mpz_addmul(surd_[i].get_mpz_t(), o.surd_[i].get_mpz_t(), f.get_mpz_t());
  }
  reduce();
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  ExactMatrix neg = o;
  for (auto& x : neg.rational_) x = -x;
  for (auto& x : neg.surd_) x = -x;
  return *this += neg;
}

ExactMatrix& ExactMatrix::operator*=(const QuadValue& s) {
  if (m_ != 0 && s.radicand() != 0 && s.radicand() != m_)
    throw Error(ErrorCode::MixedRadicands, "matrix and scalar radicands differ");
  const unsigned long m = m_ != 0 ? m_ : s.radicand();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), s.a().get_den_mpz_t(), s.b().get_den_mpz_t());
  const mpz_class pa = s.a().get_num() * (l / s.a().get_den());
  const mpz_class pb = s.b().get_num() * (l / s.b().get_den());
  for (std::size_t i = 0; i < rational_.size(); ++i) {
    const mpz_class a = rational_[i];
    const mpz_class b = surd_[i];
    rational_[i] = pa * a + pb * b * m;
    surd_[i] = pb * a + pa * b;
  }
  m_ = m;
  den_ *= l;
  reduce();
  return *this;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
  const unsigned long m = ExactMatrix::merge_radicand(x, y);
  const std::size_t n = x.n_;
  ExactMatrix c(n);
  c.m_ = m;
  addmul(c.rational_, x.rational_, y.rational_, n);
  if (x.m_ != 0 && y.m_ != 0) {
    Entries bb(n * n);
    addmul(bb, x.surd_, y.surd_, n);
    for (std::size_t i = 0; i < bb.size(); ++i)
      mpz_addmul_ui(c.rational_[i].get_mpz_t(), bb[i].get_mpz_t(), m);
  }
  if (y.m_ != 0) addmul(c.surd_, x.rational_, y.surd_, n);
  if (x.m_ != 0) addmul(c.surd_, x.surd_, y.rational_, n);
  c.den_ = x.den_ * y.den_;
  c.reduce();
  return c;
}

bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.n_ != y.n_ || x.m_ != y.m_) return false;
  for (std::size_t i = 0; i < x.rational_.size(); ++i) {
    if (x.rational_[i] * y.den_ != y.rational_[i] * x.den_) return false;
    if (x.surd_[i] * y.den_ != y.surd_[i] * x.den_) return false;
  }
  return true;
}

RealMatrix ExactMatrix::to_real() const {
  RealMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(i, j) = at(i, j).to_double();
  return r;
}

}  // namespace mnhd
