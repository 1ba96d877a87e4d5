#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace mnhd {

/// Exact element a + b*sqrt(m) of Q(sqrt(m)), m square-free.
///
/// Canonical form: m >= 2 and b != 0, or m == 0 and b == 0 (a rational).
/// Rationals combine with any radicand; two irrational operands must share
/// the radicand, otherwise MixedRadicands is thrown.
class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadValue(const mpq_class& value) : a_(value) {  // NOLINT
    a_.canonicalize();
  }
  /// Any m >= 0; square factors are pulled out into b.
  QuadValue(const mpq_class& a, const mpq_class& b, unsigned long m);

  /// sqrt(q) for rational q >= 0.
  static QuadValue sqrt(const mpq_class& q);

  const mpq_class& a() const noexcept { return a_; }
  const mpq_class& b() const noexcept { return b_; }
  unsigned long radicand() const noexcept { return m_; }
  bool is_rational() const noexcept { return m_ == 0; }
  bool is_zero() const { return m_ == 0 && sgn(a_) == 0; }

  /// -1, 0, +1 decided exactly.
  int sign() const;

  QuadValue conjugate() const;
  /// a^2 - m b^2, the field norm.
  mpq_class norm() const;

  double to_double() const;

  QuadValue operator-() const;
  QuadValue& operator+=(const QuadValue& o);
  QuadValue& operator-=(const QuadValue& o);
  QuadValue& operator*=(const QuadValue& o);
  QuadValue& operator/=(const QuadValue& o);

  friend QuadValue operator+(QuadValue x, const QuadValue& y) { return x += y; }
  friend QuadValue operator-(QuadValue x, const QuadValue& y) { return x -= y; }
  friend QuadValue operator*(QuadValue x, const QuadValue& y) { return x *= y; }
  friend QuadValue operator/(QuadValue x, const QuadValue& y) { return x /= y; }

  friend bool operator==(const QuadValue& x, const QuadValue& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadValue& x,
                                          const QuadValue& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : s > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  /// "(p + q*sqrt(m))/r" with a common denominator, or a plain rational.
  std::string str() const;

 private:
  void normalize();
  static unsigned long merge_radicand(const QuadValue& x, const QuadValue& y);

  mpq_class a_;
  mpq_class b_;
  unsigned long m_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadValue& q);

/// Square-free part s and square root k with value = k^2 * s.
struct SquareFreeSplit {
  unsigned long square_root;
  unsigned long square_free;
};
SquareFreeSplit split_square_free(unsigned long value);

}  // namespace mnhd
