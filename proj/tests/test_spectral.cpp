#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mnhd/design.hpp"
#include "mnhd/error.hpp"
#include "mnhd/graph.hpp"
#include "mnhd/spectral.hpp"

using namespace mnhd;

namespace {

Eigensystem eig(const Graph& g) { return jacobi_eigendecompose(to_real(laplacian(g))); }

QuadValue surd(long a, long b, unsigned long m) {
  return QuadValue(mpq_class(a), mpq_class(b), m);
}

}  // namespace

TEST_CASE("jacobi reconstructs random symmetric matrices") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {1u, 2u, 5u, 17u, 30u}) {
    RealMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    const RawEigen r = jacobi_eigen(m);
    RealMatrix back(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          back(i, j) += r.values[k] * r.vectors(k, i) * r.vectors(k, j);
    CHECK(max_abs_diff(back, m) < 1e-12);
    for (std::size_t k = 1; k < n; ++k) CHECK(r.values[k - 1] <= r.values[k]);
  }
}

TEST_CASE("identity") {
  const Eigensystem es = jacobi_eigendecompose(RealMatrix::identity(5));
  REQUIRE(es.spectrum.size() == 1);
  CHECK(es.spectrum[0].value == doctest::Approx(1.0));
  CHECK(es.spectrum[0].multiplicity == 5);
  CHECK(max_abs_diff(es.projectors[0], RealMatrix::identity(5)) < 1e-15);
}

TEST_CASE("crown and cycle spectra") {
  const Eigensystem c5 = eig(crown(5));
  REQUIRE(c5.spectrum.size() == 4);
  const double want[] = {0, 3, 5, 8};
  for (int k = 0; k < 4; ++k) CHECK(std::fabs(c5.spectrum[k].value - want[k]) < 1e-9);

  // Circulant oracle: 2 - 2 cos(2 pi k / 7).
  const Eigensystem c7 = eig(cycle(7));
  REQUIRE(c7.spectrum.size() == 4);
  CHECK(c7.spectrum[0].multiplicity == 1);
  for (int k = 1; k <= 3; ++k) {
    CHECK(c7.spectrum[k].multiplicity == 2);
    CHECK(std::fabs(c7.spectrum[k].value -
                    (2 - 2 * std::cos(2 * std::numbers::pi * k / 7))) < 1e-12);
  }
  CHECK_FALSE(exact_eigensystem(laplacian(cycle(7)), c7));
}

TEST_CASE("grouping") {
  const double clean[] = {0.0, 1e-12, 1.0, 1.0 + 1e-11, 2.0};
  const auto cl = group_spectrum(clean);
  REQUIRE(cl.size() == 3);
  CHECK(cl[0].count == 2);
  CHECK(cl[1].count == 2);
  const double murky[] = {1.0, 1.0 + 5e-9};
  bool ambiguous = false;
  try {
    group_spectrum(murky);
  } catch (const Error& e) {
    ambiguous = e.code() == ErrorCode::AmbiguousGap;
  }
  CHECK(ambiguous);
}

TEST_CASE("lagrange projectors") {
  const IntMatrix k2 = laplacian(Graph(2, {{0, 1}}));
  const std::vector<QuadValue> sigma{QuadValue(0), QuadValue(2)};
  const ExactMatrix p2 = lagrange_projector(k2, sigma, 1);
  const QuadValue half(mpq_class(1, 2));
  CHECK(p2.at(0, 0) == half);
  CHECK(p2.at(0, 1) == -half);
  CHECK(lagrange_projector(k2, sigma, 0) == ExactMatrix::uniform(2));

  const std::vector<QuadValue> repeated{QuadValue(0), QuadValue(0)};
  bool threw = false;
  try {
    lagrange_basis(repeated, 0);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::RepeatedEigenvalue;
  }
  CHECK(threw);
}

TEST_CASE("exact eigensystem of the (7,4,2) incidence graph") {
  const Graph g = paper_742_incidence();
  const IntMatrix l = laplacian(g);
  const auto ex = exact_eigensystem(l, eig(g));
  REQUIRE(ex);
  CHECK(ex->radicand == 2);
  CHECK(ex->values == std::vector<QuadValue>{QuadValue(0), surd(4, -1, 2),
                                             surd(4, 1, 2), QuadValue(8)});
  CHECK(ex->multiplicities == std::vector<std::size_t>{1, 6, 6, 1});
  CHECK(ex->projectors[0] == ExactMatrix::uniform(14));
  ExactMatrix sum(14);
  for (std::size_t i = 0; i < 4; ++i) {
    const ExactMatrix& p = ex->projectors[i];
    CHECK(p * p == p);
    CHECK(p.is_symmetric());
    sum += p;
  }
  CHECK(sum == ExactMatrix::identity(14));
  CHECK(ex->projectors[1].trace() == QuadValue(6));
  CHECK(ex->projectors[3].trace() == QuadValue(1));

  const ClosedFormProjectors cf = closed_form_projectors(l, 4, 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(cf.projectors[i] == ex->projectors[i + 1]);
}

TEST_CASE("closed-form constants for (7,4,2)") {
  const FourSpectrum fs = four_spectrum(14, 4, 2);
  const QuadValue r2 = QuadValue::sqrt(2);
  const QuadValue one(1), two(2);
  CHECK(fs.c1 == one / (two * (QuadValue(4) + r2) * r2));
  CHECK(fs.c2 == -(one / (two * (QuadValue(4) - r2) * r2)));
  CHECK(fs.c3 == QuadValue(mpq_class(1, 14)));
  CHECK(fs.c2 == -(fs.eigenvalues[2] * fs.eigenvalues[2] * fs.c1 * fs.c3));
}

TEST_CASE("van Dam classification") {
  const auto s3 = eig(cayley_s3());
  CHECK(classify_spectrum(s3.spectrum, 6, 3).kind == VanDamCase::CaseI);

  const auto g742 = eig(paper_742_incidence());
  const VanDamResult ii = classify_spectrum(g742.spectrum, 14, 4);
  CHECK(ii.kind == VanDamCase::CaseII);

  const auto c7 = eig(cycle(7));
  const VanDamResult iii = classify_spectrum(c7.spectrum, 7, 2);
  CHECK(iii.kind == VanDamCase::CaseIII);
  CHECK(iii.m == 2);

  bool threw = false;
  try {
    classify_spectrum(eig(complete(4)).spectrum, 4, 3);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::NoCaseMatches;
  }
  CHECK(threw);
}
