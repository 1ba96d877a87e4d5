#include <cmath>

#include "mnhd/error.hpp"
#include "mnhd/spectral.hpp"

namespace mnhd {

std::vector<QuadValue> lagrange_basis(std::span<const QuadValue> sigma,
                                      std::size_t i) {
  std::vector<QuadValue> poly{QuadValue(1)};
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (j == i) continue;
    const QuadValue gap = sigma[i] - sigma[j];
    if (gap.is_zero())
      throw Error(ErrorCode::RepeatedEigenvalue,
                  "eigenvalue " + sigma[j].str() + " listed twice");
    const QuadValue inv = QuadValue(1) / gap;
    // poly <- poly * (x - sigma_j) / gap
    std::vector<QuadValue> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k] * inv;
      next[k] -= poly[k] * sigma[j] * inv;
    }
    poly = std::move(next);
  }
  return poly;
}

namespace {

std::vector<ExactMatrix> powers(const IntMatrix& l, std::size_t count) {
  std::vector<ExactMatrix> out{ExactMatrix::identity(l.dim())};
  const ExactMatrix el(l);
  while (out.size() < count) out.push_back(out.back() * el);
  return out;
}

ExactMatrix evaluate(const std::vector<QuadValue>& poly,
                     const std::vector<ExactMatrix>& pw) {
  ExactMatrix acc(pw.front().dim());
  for (std::size_t k = 0; k < poly.size(); ++k)
    if (!poly[k].is_zero()) acc += pw[k] * poly[k];
  return acc;
}

}  // namespace

ExactMatrix lagrange_projector(const IntMatrix& l,
                               std::span<const QuadValue> sigma,
                               std::size_t i) {
  const auto poly = lagrange_basis(sigma, i);
  return evaluate(poly, powers(l, sigma.size()));
}

std::vector<ExactMatrix> lagrange_projectors(const IntMatrix& l,
                                             std::span<const QuadValue> sigma) {
  const auto pw = powers(l, sigma.size());
  std::vector<ExactMatrix> out;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    out.push_back(evaluate(lagrange_basis(sigma, i), pw));
  return out;
}

FourSpectrum four_spectrum(std::size_t n, std::size_t d, std::size_t lambda) {
  if (d <= lambda)
    throw Error(ErrorCode::DegenerateDLambda,
                "d = " + std::to_string(d) + " <= lambda = " +
                    std::to_string(lambda) + " gives fewer than four eigenvalues");
  FourSpectrum fs;
  fs.n = n;
  fs.d = d;
  fs.lambda = lambda;
  fs.root = QuadValue::sqrt(mpq_class(static_cast<unsigned long>(d - lambda)));
  const QuadValue dd(static_cast<long>(d));
  fs.eigenvalues = {QuadValue(0), dd - fs.root, dd + fs.root, dd * 2};
  const QuadValue& l1 = fs.eigenvalues[1];
  const QuadValue& l2 = fs.eigenvalues[2];
  fs.c1 = QuadValue(1) / (QuadValue(2) * l2 * fs.root);
  fs.c2 = -(QuadValue(1) / (QuadValue(2) * l1 * fs.root));
  fs.c3 = QuadValue(1) / (l1 * l2);
  return fs;
}

ClosedFormProjectors closed_form_projectors(const IntMatrix& l, std::size_t d,
                                            std::size_t lambda) {
  const std::size_t n = l.dim();
  ClosedFormProjectors out{four_spectrum(n, d, lambda), {}};
  const auto& ev = out.spectrum.eigenvalues;
  const ExactMatrix el(l);
  const ExactMatrix l2 = el * el;
  const ExactMatrix complement =
      ExactMatrix::identity(n) - ExactMatrix::uniform(n);  // I - P0
  const std::array<QuadValue, 3> c{out.spectrum.c1, out.spectrum.c2,
                                   out.spectrum.c3};
  for (std::size_t i = 1; i <= 3; ++i) {
    const std::size_t j = i == 1 ? 2 : 1;
    const std::size_t k = i == 3 ? 2 : 3;
    ExactMatrix p = l2 - el * (ev[j] + ev[k]) + complement * (ev[j] * ev[k]);
    out.projectors[i - 1] = p * c[i - 1];
  }
  return out;
}

}  // namespace mnhd
