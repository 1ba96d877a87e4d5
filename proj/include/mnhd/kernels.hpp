#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel double kernels used by the numeric path. Every kernel has a
// scalar reference implementation; SIMD variants (AVX2+FMA on x86-64, NEON on
// AArch64) are selected at runtime and must agree with the reference to a few
// ulps.

namespace mnhd::kernels {

struct KernelTable {
  std::string_view name;
  /// x <- c*x - s*y, y <- s*x + c*y (Givens plane rotation of two rows).
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  /// y <- y + a*x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*max_abs_diff)(const double* x, const double* y, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_table();
const KernelTable* neon_table();

/// All tables usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

/// The table used by library code. Chosen once: the best available variant,
/// unless the MNHD_KERNELS environment variable names another ("scalar",
/// "avx2", "neon").
const KernelTable& active();

/// Overrides the active table by name; returns false if unavailable.
bool select(std::string_view name);

inline void rotate(std::span<double> x, std::span<double> y, double c,
                   double s) {
  active().rotate(x.data(), y.data(), x.size(), c, s);
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}

}  // namespace mnhd::kernels
