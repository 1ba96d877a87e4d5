#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mnhd/dense.hpp"
#include "mnhd/exact_matrix.hpp"
#include "mnhd/quad.hpp"

namespace mnhd {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kJacobiSweepCap = 100;

struct SpectrumEntry {
  double value;
  std::size_t multiplicity;
};

/// Numeric spectral decomposition: distinct eigenvalues (ascending) with
/// multiplicities and orthogonal projectors.
struct Eigensystem {
  std::size_t n = 0;
  std::vector<double> eigenvalues;  // raw, ascending
  RealMatrix eigenvectors;          // row k is the unit eigenvector of eigenvalues[k]
  std::vector<SpectrumEntry> spectrum;
  std::vector<RealMatrix> projectors;
};

/// Exact decomposition over Q(sqrt(radicand)).
struct ExactEigensystem {
  std::size_t n = 0;
  unsigned long radicand = 0;
  std::vector<QuadValue> values;  // ascending
  std::vector<std::size_t> multiplicities;
  std::vector<ExactMatrix> projectors;
};

struct RawEigen {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // rows, matching values
  int sweeps = 0;
};

/// Cyclic Jacobi on a symmetric matrix. Sweeps run until the off-diagonal
/// mass is at rounding level; NoConvergence if after the sweep cap some
/// off-diagonal entry still exceeds tol * ||M||_F.
RawEigen jacobi_eigen(const RealMatrix& m, double tol = kDefaultTolerance,
                      int sweep_cap = kJacobiSweepCap);

Eigensystem jacobi_eigendecompose(const RealMatrix& m,
                                  double tol = kDefaultTolerance);

struct Cluster {
  double value;  // cluster mean
  std::size_t first;
  std::size_t count;
};

/// Greedy clustering of a sorted list: neighbours within tol * max(1, |x|)
/// merge. A gap in (tol, 10 tol) (same scaling) is AmbiguousGap.
std::vector<Cluster> group_spectrum(std::span<const double> sorted,
                                    double tol = kDefaultTolerance);

/// Product over j != i of (x - sigma_j)/(sigma_i - sigma_j), as polynomial
/// coefficients c_0..c_{k-1}.
std::vector<QuadValue> lagrange_basis(std::span<const QuadValue> sigma,
                                      std::size_t i);

/// P_i = prod_{j != i} (L - sigma_j I)/(sigma_i - sigma_j), exactly.
ExactMatrix lagrange_projector(const IntMatrix& l,
                               std::span<const QuadValue> sigma,
                               std::size_t i);
/// All projectors, sharing the powers of L.
std::vector<ExactMatrix> lagrange_projectors(const IntMatrix& l,
                                             std::span<const QuadValue> sigma);

/// Incidence-graph spectrum with the constants of the closed-form
/// projectors: C1 = 1/(2 l2 s), C2 = -1/(2 l1 s), C3 = 1/(l1 l2), s =
/// sqrt(d - lambda).
struct FourSpectrum {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t lambda = 0;
  QuadValue root;  // sqrt(d - lambda)
  std::array<QuadValue, 4> eigenvalues;
  QuadValue c1, c2, c3;
};
FourSpectrum four_spectrum(std::size_t n, std::size_t d, std::size_t lambda);

struct ClosedFormProjectors {
  FourSpectrum spectrum;
  std::array<ExactMatrix, 3> projectors;  // P_{l1}, P_{l2}, P_{l3}
};
/// P_{li} = Ci { L^2 - (lj + lk) L + lj lk (I - P0) } with P0 = J/n.
ClosedFormProjectors closed_form_projectors(const IntMatrix& l, std::size_t d,
                                            std::size_t lambda);

/// Turns a numeric spectrum of an integer matrix into exact values when every
/// eigenvalue is an integer or part of a conjugate pair over one common
/// radicand, and verifies the result exactly (L P = value P, trace P =
/// multiplicity, sum P = I). nullopt otherwise.
std::optional<ExactEigensystem> exact_eigensystem(const IntMatrix& l,
                                                  const Eigensystem& numeric);

enum class VanDamCase { CaseI, CaseII, CaseIII };

struct VanDamResult {
  VanDamCase kind;
  // CaseII: surd pair d - (a +- sqrt(b))/2.
  long a = 0;
  long b = 0;
  // CaseIII: common multiplicity.
  std::size_t m = 0;
};

/// Expects exactly four distinct eigenvalues with the first equal to 0.
VanDamResult classify_spectrum(std::span<const SpectrumEntry> sigma,
                               std::size_t n, std::size_t d,
                               double tol = 1e-7);

const char* to_string(VanDamCase c);

}  // namespace mnhd
