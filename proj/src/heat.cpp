#include "mnhd/heat.hpp"

#include <algorithm>
#include <cmath>

#include "mnhd/error.hpp"
#include "mnhd/kernels.hpp"

namespace mnhd {

RealMatrix heat_at(const Eigensystem& es, double t) {
  if (t < 0.0) throw Error(ErrorCode::NegativeTime, "t = " + std::to_string(t));
  if (t == 0.0) return RealMatrix::identity(es.n);
  RealMatrix h(es.n);
  for (std::size_t k = 0; k < es.spectrum.size(); ++k)
    kernels::axpy(std::exp(-t * es.spectrum[k].value), es.projectors[k].flat(),
                  h.flat());
  return h;
}

double ratio(const Eigensystem& es, std::size_t u, std::size_t v, double t) {
  if (u == v) throw Error(ErrorCode::SameVertex, "ratio needs u != v");
  if (t < 0.0) throw Error(ErrorCode::NegativeTime, "t = " + std::to_string(t));
  if (t == 0.0) return 0.0;
  double huv = 0.0, huu = 0.0;
  for (std::size_t k = 0; k < es.spectrum.size(); ++k) {
    const double w = std::exp(-t * es.spectrum[k].value);
    huv += w * es.projectors[k](u, v);
    huu += w * es.projectors[k](u, u);
  }
  // H_t(u,u) >= 1/n on a connected graph.
  if (!(huu >= 1.0 / static_cast<double>(es.n) - 1e-12))
    throw Error(ErrorCode::DivisionByZero,
                "diagonal heat kernel below 1/n; eigensystem is not a Laplacian's");
  return huv / huu;
}

std::vector<std::pair<double, double>> ratio_curve(
    const Eigensystem& es, std::size_t u, std::size_t v,
    std::span<const double> grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  for (double t : grid) out.emplace_back(t, ratio(es, u, v, t));
  return out;
}

std::vector<double> default_grid(const Eigensystem& es, std::size_t points) {
  double gap = 0.0;
  for (const auto& e : es.spectrum)
    if (e.value > 1e-9) {
      gap = e.value;
      break;
    }
  const double t_max = gap > 0.0 ? std::max(50.0, 30.0 / gap) : 50.0;
  std::vector<double> grid{0.0};
  const double lo = std::log(1e-3);
  const double hi = std::log(t_max);
  for (std::size_t k = 0; k < points; ++k) {
    const double f = points == 1 ? 1.0 : static_cast<double>(k) / (points - 1);
    grid.push_back(std::exp(lo + f * (hi - lo)));
  }
  grid.back() = t_max;
  return grid;
}

DeltaSet<QuadValue> delta_set(std::span<const ExactMatrix> p, std::size_t u,
                              std::size_t v) {
  const auto cross = [&](std::size_t i, std::size_t j) {
    return p[i].at(u, v) * p[j].at(u, u) - p[j].at(u, v) * p[i].at(u, u);
  };
  return {p[0].at(u, u) - p[0].at(u, v), p[1].at(u, u) - p[1].at(u, v),
          p[2].at(u, u) - p[2].at(u, v), cross(0, 1), cross(0, 2),
          cross(1, 2)};
}

DeltaSet<double> delta_set(std::span<const RealMatrix> p, std::size_t u,
                           std::size_t v) {
  const auto cross = [&](std::size_t i, std::size_t j) {
    return p[i](u, v) * p[j](u, u) - p[j](u, v) * p[i](u, u);
  };
  return {p[0](u, u) - p[0](u, v), p[1](u, u) - p[1](u, v),
          p[2](u, u) - p[2](u, v), cross(0, 1), cross(0, 2), cross(1, 2)};
}

double h_function(std::span<const double> l, const DeltaSet<double>& ds,
                  std::size_t n, double t) {
  const double nn = static_cast<double>(n);
  return l[1] / nn * ds.d1 * std::exp(-t * l[1]) +
         l[2] / nn * ds.d2 * std::exp(-t * l[2]) +
         l[3] / nn * ds.d3 * std::exp(-t * l[3]) +
         (l[2] - l[1]) * ds.d12 * std::exp(-t * (l[1] + l[2])) +
         (l[3] - l[1]) * ds.d13 * std::exp(-t * (l[1] + l[3])) +
         (l[3] - l[2]) * ds.d23 * std::exp(-t * (l[2] + l[3]));
}

double h_direct(const RealMatrix& laplacian, const Eigensystem& es,
                std::size_t u, std::size_t v, double t) {
  const RealMatrix h = heat_at(es, t);
  const RealMatrix lh = multiply(laplacian, h);  // H' = -L H
  return -lh(u, v) * h(u, u) + h(u, v) * lh(u, u);
}

void add_term(ExpSum& sum, const QuadValue& rate, const QuadValue& coefficient) {
  if (coefficient.is_zero()) return;
  auto it = std::lower_bound(
      sum.begin(), sum.end(), rate,
      [](const ExpTerm& term, const QuadValue& r) { return term.rate < r; });
  if (it != sum.end() && it->rate == rate) {
    it->coefficient += coefficient;
    if (it->coefficient.is_zero()) sum.erase(it);
  } else {
    sum.insert(it, ExpTerm{rate, coefficient});
  }
}

QuadValue value_at_zero(const ExpSum& sum) {
  QuadValue total;
  for (const auto& term : sum) total += term.coefficient;
  return total;
}

ExpSum h_coefficients(std::span<const QuadValue> l,
                      const DeltaSet<QuadValue>& ds, std::size_t n) {
  const QuadValue nn(static_cast<long>(n));
  ExpSum sum;
  add_term(sum, l[1], l[1] / nn * ds.d1);
  add_term(sum, l[2], l[2] / nn * ds.d2);
  add_term(sum, l[3], l[3] / nn * ds.d3);
  add_term(sum, l[1] + l[2], (l[2] - l[1]) * ds.d12);
  add_term(sum, l[1] + l[3], (l[3] - l[1]) * ds.d13);
  add_term(sum, l[2] + l[3], (l[3] - l[2]) * ds.d23);
  return sum;
}

ExpSum h_coefficients_direct(const ExactEigensystem& es, std::size_t u,
                             std::size_t v) {
  // H'(u,v) H(u,u) - H(u,v) H'(u,u)
  //   = sum_{k,l} exp(-t(l_k + l_l)) (-l_k P_k(u,v) P_l(u,u) + l_k P_k(u,u) P_l(u,v))
  ExpSum sum;
  const std::size_t k = es.values.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const QuadValue c =
          es.values[a] * (es.projectors[a].at(u, u) * es.projectors[b].at(u, v) -
                          es.projectors[a].at(u, v) * es.projectors[b].at(u, u));
      add_term(sum, es.values[a] + es.values[b], c);
    }
  return sum;
}

}  // namespace mnhd
