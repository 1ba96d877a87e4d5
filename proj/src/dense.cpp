#include "mnhd/dense.hpp"

#include <cmath>

#include "mnhd/kernels.hpp"

namespace mnhd {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RealMatrix to_real(const IntMatrix& m) {
  RealMatrix r(m.dim());
  for (std::size_t i = 0; i < m.flat().size(); ++i)
    r.flat()[i] = static_cast<double>(m.flat()[i]);
  return r;
}

RealMatrix multiply(const RealMatrix& a, const RealMatrix& b) {
  const std::size_t n = a.dim();
  RealMatrix c(n);
  // i-k-j order: each step is a contiguous row axpy.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik != 0.0) kernels::axpy(aik, b.row(k), c.row(i));
    }
  return c;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  return kernels::active().max_abs_diff(a.flat().data(), b.flat().data(),
                                        a.flat().size());
}

double frobenius_norm(const RealMatrix& a) {
  return std::sqrt(kernels::dot(a.flat(), a.flat()));
}

}  // namespace mnhd
