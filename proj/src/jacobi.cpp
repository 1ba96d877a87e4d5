#include <algorithm>
#include <cmath>
#include <numeric>

#include "mnhd/error.hpp"
#include "mnhd/kernels.hpp"
#include "mnhd/spectral.hpp"

namespace mnhd {

namespace {

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double max_off_diagonal(const RealMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) m = std::max(m, std::fabs(a(i, j)));
  return m;
}

// Zeroes a(p,q) by a plane rotation and records it in the eigenvector rows.
void rotate(RealMatrix& a, RealMatrix& vt, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double app = a(p, p) - t * apq;
  const double aqq = a(q, q) + t * apq;

  kernels::rotate(a.row(p), a.row(q), c, s);
  // Rows p and q are now final off the 2x2 block; mirror them into columns.
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    a(r, p) = a(p, r);
    a(r, q) = a(q, r);
  }
  a(p, p) = app;
  a(q, q) = aqq;
  a(p, q) = a(q, p) = 0.0;

  kernels::rotate(vt.row(p), vt.row(q), c, s);
}

}  // namespace

RawEigen jacobi_eigen(const RealMatrix& m, double tol, int sweep_cap) {
  const std::size_t n = m.dim();
  const double norm = frobenius_norm(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(m(i, j) - m(j, i)) > tol * std::max(1.0, norm))
        throw Error(ErrorCode::NonSymmetric,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") differs from its transpose");

  RealMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
  RealMatrix vt = RealMatrix::identity(n);

  const double target = 1e-15 * norm;
  int sweeps = 0;
  double off = off_diagonal_norm(a);
  while (off > target && sweeps < sweep_cap) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, vt, p, q);
    ++sweeps;
    const double next = off_diagonal_norm(a);
    if (next >= off) {  // stalled at rounding level
      off = next;
      break;
    }
    off = next;
  }
  if (max_off_diagonal(a) > tol * norm)
    throw Error(ErrorCode::NoConvergence,
                "off-diagonal mass " + std::to_string(off) + " after " +
                    std::to_string(sweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  RawEigen out;
  out.sweeps = sweeps;
  out.vectors = RealMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]));
    std::copy(vt.row(order[k]).begin(), vt.row(order[k]).end(),
              out.vectors.row(k).begin());
  }
  return out;
}

std::vector<Cluster> group_spectrum(std::span<const double> sorted, double tol) {
  std::vector<Cluster> out;
  double sum = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const double x = sorted[k];
    if (!out.empty()) {
      const double gap = x - sorted[k - 1];
      const double scale = std::max(1.0, std::fabs(x));
      if (gap <= tol * scale) {
        ++out.back().count;
        sum += x;
        out.back().value = sum / static_cast<double>(out.back().count);
        continue;
      }
      if (gap < 10.0 * tol * scale)
        throw Error(ErrorCode::AmbiguousGap,
                    "gap " + std::to_string(gap) + " near " + std::to_string(x) +
                        " is within (tol, 10 tol); tighten the tolerance");
    }
    out.push_back({x, k, 1});
    sum = x;
  }
  return out;
}

Eigensystem jacobi_eigendecompose(const RealMatrix& m, double tol) {
  RawEigen raw = jacobi_eigen(m, tol);
  const std::size_t n = m.dim();
  Eigensystem es;
  es.n = n;
  for (const Cluster& c : group_spectrum(raw.values, tol)) {
    es.spectrum.push_back({c.value, c.count});
    RealMatrix p(n);
    for (std::size_t k = c.first; k < c.first + c.count; ++k) {
      const auto v = raw.vectors.row(k);
      for (std::size_t i = 0; i < n; ++i)
        if (v[i] != 0.0) kernels::axpy(v[i], v, p.row(i));
    }
    es.projectors.push_back(std::move(p));
  }
  es.eigenvalues = std::move(raw.values);
  es.eigenvectors = std::move(raw.vectors);
  return es;
}

}  // namespace mnhd
