#include "mnhd/quad.hpp"

#include <cmath>
#include <ostream>

#include "mnhd/error.hpp"

namespace mnhd {

SquareFreeSplit split_square_free(unsigned long value) {
  unsigned long root = 1;
  unsigned long rest = value;
  for (unsigned long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  return {root, rest};
}

QuadValue::QuadValue(const mpq_class& a, const mpq_class& b, unsigned long m)
    : a_(a), b_(b), m_(m) {
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

void QuadValue::normalize() {
  if (m_ >= 2) {
    const auto [root, rest] = split_square_free(m_);
    b_ *= root;
    m_ = rest;
  }
  if (m_ == 1) a_ += b_;
  if (m_ <= 1 || sgn(b_) == 0) {
    b_ = 0;
    m_ = 0;
  }
}

QuadValue QuadValue::sqrt(const mpq_class& q) {
  if (sgn(q) < 0)
    throw Error(ErrorCode::InvalidRadicand, "square root of negative rational");
  // sqrt(p/r) = sqrt(p r) / r
  const mpz_class pr = q.get_num() * q.get_den();
  if (!pr.fits_ulong_p())
    throw Error(ErrorCode::InvalidRadicand, "radicand too large");
  const auto [root, rest] = split_square_free(pr.get_ui());
  const mpq_class coeff(mpz_class(root), q.get_den());
  if (rest == 1) return QuadValue(coeff);
  return QuadValue(0, coeff, rest);
}

unsigned long QuadValue::merge_radicand(const QuadValue& x, const QuadValue& y) {
  if (x.m_ == 0) return y.m_;
  if (y.m_ == 0 || x.m_ == y.m_) return x.m_;
  throw Error(ErrorCode::MixedRadicands,
              "sqrt(" + std::to_string(x.m_) + ") and sqrt(" +
                  std::to_string(y.m_) + ") in one expression");
}

int QuadValue::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and m b^2 wins (never equal, m is not
  // a perfect square).
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = b_ * b_ * m_;
  return lhs > rhs ? sa : sb;
}

QuadValue QuadValue::conjugate() const {
  QuadValue c = *this;
  c.b_ = -c.b_;
  return c;
}

mpq_class QuadValue::norm() const { return a_ * a_ - b_ * b_ * m_; }

double QuadValue::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(m_));
}

QuadValue QuadValue::operator-() const {
  QuadValue r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadValue& QuadValue::operator+=(const QuadValue& o) {
  m_ = merge_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& o) {
  m_ = merge_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadValue& QuadValue::operator*=(const QuadValue& o) {
  const unsigned long m = merge_radicand(*this, o);
  const mpq_class a = a_ * o.a_ + b_ * o.b_ * m;
  const mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  m_ = m;
  normalize();
  return *this;
}

QuadValue& QuadValue::operator/=(const QuadValue& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "QuadValue / 0");
  const mpq_class n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

std::string QuadValue::str() const {
  if (m_ == 0) return a_.get_str();
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  const mpz_class p = a_.get_num() * (r / a_.get_den());
  const mpz_class q = b_.get_num() * (r / b_.get_den());
  const std::string root = "sqrt(" + std::to_string(m_) + ")";
  std::string surd;
  if (q == 1)
    surd = root;
  else if (q == -1)
    surd = "-" + root;
  else
    surd = q.get_str() + "*" + root;

  std::string body;
  if (p == 0) {
    body = surd;
  } else {
    body = p.get_str();
    if (sgn(q) < 0)
      body += " - " + surd.substr(1);
    else
      body += " + " + surd;
  }
  if (r == 1) return body;
  if (p == 0) return body + "/" + r.get_str();
  return "(" + body + ")/" + r.get_str();
}

std::ostream& operator<<(std::ostream& os, const QuadValue& q) {
  return os << q.str();
}

}  // namespace mnhd
