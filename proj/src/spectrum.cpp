#include <algorithm>
#include <cmath>
#include <numeric>

#include "mnhd/error.hpp"
#include "mnhd/spectral.hpp"

namespace mnhd {

namespace {

constexpr double kIntegralTol = 1e-6;

std::optional<long> near_integer(double x, double tol = kIntegralTol) {
  const double r = std::round(x);
  if (std::fabs(x - r) > tol * std::max(1.0, std::fabs(x))) return std::nullopt;
  return static_cast<long>(r);
}

bool is_perfect_square(long x) {
  if (x < 0) return false;
  const auto r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(x))));
  for (long c = std::max(0L, r - 1); c <= r + 1; ++c)
    if (c * c == x) return true;
  return false;
}

struct SurdPair {
  long sum;
  long product;
};

// Integral sum and product with a non-square discriminant.
std::optional<SurdPair> conjugate_pair(double x, double y) {
  const auto s = near_integer(x + y);
  const auto p = near_integer(x * y);
  if (!s || !p) return std::nullopt;
  const long disc = *s * *s - 4 * *p;
  if (disc <= 0 || is_perfect_square(disc)) return std::nullopt;
  return SurdPair{*s, *p};
}

}  // namespace

std::optional<ExactEigensystem> exact_eigensystem(const IntMatrix& l,
                                                  const Eigensystem& numeric) {
  const auto& spec = numeric.spectrum;
  const std::size_t k = spec.size();
  std::vector<std::optional<QuadValue>> exact(k);
  for (std::size_t i = 0; i < k; ++i)
    if (auto r = near_integer(spec[i].value)) exact[i] = QuadValue(*r);

  for (std::size_t i = 0; i < k; ++i) {
    if (exact[i]) continue;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (exact[j] || spec[j].multiplicity != spec[i].multiplicity) continue;
      const auto pair = conjugate_pair(spec[i].value, spec[j].value);
      if (!pair) continue;
      const QuadValue root = QuadValue::sqrt(
          mpq_class(pair->sum * pair->sum - 4 * pair->product));
      const QuadValue half_sum(mpq_class(pair->sum, 2));
      exact[i] = half_sum - root * QuadValue(mpq_class(1, 2));
      exact[j] = half_sum + root * QuadValue(mpq_class(1, 2));
      break;
    }
    if (!exact[i]) return std::nullopt;
  }

  ExactEigensystem es;
  es.n = numeric.n;
  for (std::size_t i = 0; i < k; ++i) {
    if (exact[i]->radicand() != 0) {
      if (es.radicand != 0 && es.radicand != exact[i]->radicand())
        return std::nullopt;
      es.radicand = exact[i]->radicand();
    }
    es.values.push_back(*exact[i]);
    es.multiplicities.push_back(spec[i].multiplicity);
  }
  // Numeric order already ascending; confirm exactly.
  for (std::size_t i = 1; i < k; ++i)
    if (!(es.values[i - 1] < es.values[i])) return std::nullopt;

  es.projectors = lagrange_projectors(l, es.values);
  const ExactMatrix el(l);
  ExactMatrix sum(numeric.n);
  for (std::size_t i = 0; i < k; ++i) {
    const ExactMatrix& p = es.projectors[i];
    if (p.trace() != QuadValue(static_cast<long>(es.multiplicities[i])))
      return std::nullopt;
    if (!(el * p == p * es.values[i])) return std::nullopt;
    sum += p;
  }
  if (!(sum == ExactMatrix::identity(numeric.n))) return std::nullopt;
  return es;
}

VanDamResult classify_spectrum(std::span<const SpectrumEntry> sigma,
                               std::size_t n, std::size_t d, double tol) {
  if (sigma.size() != 4)
    throw Error(ErrorCode::NoCaseMatches,
                std::to_string(sigma.size()) + " distinct eigenvalues, need 4");
  if (std::fabs(sigma[0].value) > tol)
    throw Error(ErrorCode::NoCaseMatches, "smallest eigenvalue is not 0");

  std::vector<std::size_t> surds;
  for (std::size_t i = 1; i < 4; ++i)
    if (!near_integer(sigma[i].value, tol)) surds.push_back(i);

  if (surds.empty()) return {VanDamCase::CaseI};

  if (surds.size() == 2) {
    const auto& x = sigma[surds[0]];
    const auto& y = sigma[surds[1]];
    if (x.multiplicity == y.multiplicity) {
      if (auto pair = conjugate_pair(x.value, y.value)) {
        VanDamResult r{VanDamCase::CaseII};
        r.a = 2 * static_cast<long>(d) - pair->sum;
        r.b = pair->sum * pair->sum - 4 * pair->product;
        return r;
      }
    }
  }

  if (surds.size() == 3 && (n - 1) % 3 == 0) {
    const std::size_t m = (n - 1) / 3;
    const bool equal = sigma[1].multiplicity == m && sigma[2].multiplicity == m &&
                       sigma[3].multiplicity == m;
    if (equal && (d == m || d == 2 * m)) {
      VanDamResult r{VanDamCase::CaseIII};
      r.m = m;
      return r;
    }
  }
  throw Error(ErrorCode::NoCaseMatches,
              "spectrum fits none of the three regular four-eigenvalue cases");
}

const char* to_string(VanDamCase c) {
  switch (c) {
    case VanDamCase::CaseI: return "CaseI";
    case VanDamCase::CaseII: return "CaseII";
    case VanDamCase::CaseIII: return "CaseIII";
  }
  return "?";
}

}  // namespace mnhd
