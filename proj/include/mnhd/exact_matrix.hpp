#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "mnhd/dense.hpp"
#include "mnhd/quad.hpp"

namespace mnhd {

/// Square matrix over Q(sqrt(m)) stored as (A + B*sqrt(m)) / den with integer
/// matrices A, B and a positive common denominator. radicand() == 0 means
/// B is identically zero.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n);
  explicit ExactMatrix(const IntMatrix& m);

  static ExactMatrix identity(std::size_t n);
  /// J / n
  static ExactMatrix uniform(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  unsigned long radicand() const noexcept { return m_; }

  QuadValue at(std::size_t i, std::size_t j) const;
  QuadValue trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const QuadValue& s);

  friend ExactMatrix operator+(ExactMatrix x, const ExactMatrix& y) {
    return x += y;
  }
  friend ExactMatrix operator-(ExactMatrix x, const ExactMatrix& y) {
    return x -= y;
  }
  friend ExactMatrix operator*(ExactMatrix x, const QuadValue& s) {
    return x *= s;
  }
  friend ExactMatrix operator*(const QuadValue& s, ExactMatrix x) {
    return x *= s;
  }
  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y);

  RealMatrix to_real() const;

 private:
  void reduce();
  void rescale_to(const mpz_class& den);
  static unsigned long merge_radicand(const ExactMatrix& x,
                                      const ExactMatrix& y);
  bool surd_part_zero() const;

  std::size_t n_ = 0;
  unsigned long m_ = 0;
  std::vector<mpz_class> rational_;
  std::vector<mpz_class> surd_;
  mpz_class den_ = 1;
};

}  // namespace mnhd
