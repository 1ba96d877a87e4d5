#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mnhd/dense.hpp"
#include "mnhd/exact_matrix.hpp"
#include "mnhd/quad.hpp"
#include "mnhd/spectral.hpp"

namespace mnhd {

/// H_t = sum_k exp(-t lambda_k) P_k.
RealMatrix heat_at(const Eigensystem& es, double t);

/// H_t(u,v) / H_t(u,u).
double ratio(const Eigensystem& es, std::size_t u, std::size_t v, double t);

std::vector<std::pair<double, double>> ratio_curve(
    const Eigensystem& es, std::size_t u, std::size_t v,
    std::span<const double> grid);

/// t = 0 followed by `points` log-spaced values on [1e-3, t_max],
/// t_max = max(50, 30 / smallest nonzero eigenvalue).
std::vector<double> default_grid(const Eigensystem& es,
                                 std::size_t points = 60);

template <typename T>
struct DeltaSet {
  T d1{}, d2{}, d3{};
  T d12{}, d13{}, d23{};

  std::array<T, 6> values() const { return {d1, d2, d3, d12, d13, d23}; }
  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
};

/// Delta_i = P_i(u,u) - P_i(u,v); Delta_ij = P_i(u,v) P_j(u,u) - P_j(u,v)
/// P_i(u,u). `projectors` are P_{l1}, P_{l2}, P_{l3}.
DeltaSet<QuadValue> delta_set(std::span<const ExactMatrix> projectors,
                              std::size_t u, std::size_t v);
DeltaSet<double> delta_set(std::span<const RealMatrix> projectors,
                           std::size_t u, std::size_t v);

/// h_{u,v}(t) from the four-eigenvalue expansion
///   sum_i (l_i/n) D_i e^{-t l_i} + sum_{i<j} (l_j - l_i) D_ij e^{-t(l_i+l_j)}.
double h_function(std::span<const double> eigenvalues,
                  const DeltaSet<double>& ds, std::size_t n, double t);

/// h_{u,v}(t) = H'(u,v) H(u,u) - H(u,v) H'(u,u) with H' = -L H.
double h_direct(const RealMatrix& laplacian, const Eigensystem& es,
                std::size_t u, std::size_t v, double t);

/// Exponential sum sum_k c_k exp(-t mu_k), exponents strictly ascending,
/// zero coefficients dropped.
struct ExpTerm {
  QuadValue rate;
  QuadValue coefficient;
  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};
using ExpSum = std::vector<ExpTerm>;

void add_term(ExpSum& sum, const QuadValue& rate, const QuadValue& coefficient);
QuadValue value_at_zero(const ExpSum& sum);

/// Coefficients of h read off the four-eigenvalue expansion.
ExpSum h_coefficients(std::span<const QuadValue> eigenvalues,
                      const DeltaSet<QuadValue>& ds, std::size_t n);

/// Coefficients of h expanded straight from H'(u,v)H(u,u) - H(u,v)H'(u,u),
/// summing over all ordered pairs of spectral components (P0 included).
ExpSum h_coefficients_direct(const ExactEigensystem& es, std::size_t u,
                             std::size_t v);

}  // namespace mnhd
