#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "analysis_detail.hpp"
#include "mnhd/analysis.hpp"
#include "mnhd/error.hpp"

namespace mnhd {

namespace {

struct TemplateOutcome {
  bool pass = false;
  std::string route;
};

// h(t) = sum_k c_k e^{-mu_k t}. Multiplying by e^{p t} turns the terms with
// mu_k < p into growing exponentials and those with mu_k > p into decaying
// ones. With h(0) >= 0, the sum is nonnegative on [0, inf) once every growing
// coefficient is nonnegative and the total decay rate at 0 is covered:
//   sum_{mu > p} (mu - p) c^+ <= sum_{mu < p} (p - mu) c.
TemplateOutcome sign_template(const ExpSum& h, std::span<const QuadValue> eig) {
  if (std::all_of(h.begin(), h.end(),
                  [](const ExpTerm& t) { return t.coefficient.sign() >= 0; }))
    return {true, "all coefficients nonnegative"};

  std::vector<QuadValue> pivots;
  if (!eig.empty()) pivots.push_back(eig.back());
  for (const auto& t : h)
    if (std::find(pivots.begin(), pivots.end(), t.rate) == pivots.end())
      pivots.push_back(t.rate);

  for (const auto& p : pivots) {
    bool growing_ok = true;
    QuadValue budget(0), demand(0);
    for (const auto& t : h) {
      if (t.rate < p) {
        if (t.coefficient.sign() < 0) {
          growing_ok = false;
          break;
        }
        budget += (p - t.rate) * t.coefficient;
      } else if (t.rate > p && t.coefficient.sign() > 0) {
        demand += (t.rate - p) * t.coefficient;
      }
    }
    if (growing_ok && demand <= budget)
      return {true, "pivot " + p.str() + ": growing terms nonnegative, decay " +
                        demand.str() + " <= " + budget.str()};
  }
  return {false, "no pivot isolates the negative terms"};
}

}  // namespace

Certificate delta_sign_analysis(const Graph& g) {
  const GraphFacts f = facts(g);
  if (!f.connected) throw Error(ErrorCode::Disconnected, "graph is not connected");
  const std::size_t n = g.order();
  const IntMatrix l = laplacian(g);
  const IntMatrix l2 = laplacian_squared(g);
  const Eigensystem es = jacobi_eigendecompose(to_real(l));
  if (es.spectrum.size() != 4)
    throw Error(ErrorCode::NotFourEigenvalues,
                std::to_string(es.spectrum.size()) +
                    " distinct Laplacian eigenvalues, need 4");
  const auto exact = exact_eigensystem(l, es);
  if (!exact)
    throw Error(ErrorCode::MixedRadicands,
                "spectrum is not expressible over a single quadratic field");
  const std::span<const ExactMatrix> p(exact->projectors.data() + 1, 3);
  const std::span<const QuadValue> eig(exact->values);

  Certificate cert;
  cert.method = "template";
  auto check = [&](std::string name, std::string witness, bool pass) {
    cert.checks.push_back({std::move(name), std::move(witness), pass});
  };

  // Signature first, then the exact Delta values split it further.
  struct Group {
    ClassRecord rec;
    bool h0_ok = true;
  };
  std::map<Signature, std::vector<Group>> groups;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const Signature sig{l(u, v), l2(u, v), g.degree(u), g.degree(v)};
      const DeltaSet<QuadValue> ds = delta_set(p, u, v);
      auto& bucket = groups[sig];
      auto it = std::find_if(bucket.begin(), bucket.end(),
                             [&](const Group& gr) { return gr.rec.deltas == ds; });
      if (it != bucket.end()) {
        ++it->rec.pair_count;
        continue;
      }
      Group gr;
      gr.rec.signature = sig;
      gr.rec.representative = {u, v};
      gr.rec.pair_count = 1;
      gr.rec.deltas = ds;
      bucket.push_back(std::move(gr));
    }

  std::size_t index = 0;
  for (auto& [sig, bucket] : groups)
    for (auto& gr : bucket) {
      ClassRecord& rec = gr.rec;
      rec.tag = "S" + std::to_string(++index);
      const auto [u, v] = rec.representative;
      const DeltaSet<QuadValue>& ds = rec.deltas;
      rec.h = h_coefficients(eig, ds, n);

      const ExpSum direct = h_coefficients_direct(*exact, u, v);
      check(rec.tag + "_h_expansion_matches_derivative_form",
            std::to_string(rec.h.size()) + " exponential terms",
            direct == rec.h);
      check(rec.tag + "_deltas_nonnegative", detail::describe(ds),
            ds.d1.sign() >= 0 && ds.d2.sign() >= 0 && ds.d3.sign() >= 0);
      const QuadValue h0 = value_at_zero(rec.h);
      check(rec.tag + "_h0_equals_minus_L",
            detail::join({{"h(0)", h0}, {"-L(u,v)", QuadValue(-l(u, v))}}),
            h0 == QuadValue(-l(u, v)) && h0.sign() >= 0);
      const TemplateOutcome t = sign_template(rec.h, eig);
      check(rec.tag + "_h_nonnegative", t.route, t.pass);
      cert.classes.push_back(rec);
    }

  detail::finish(cert);
  return cert;
}

NumericVerdict numeric_check(const Graph& g, std::span<const double> grid,
                             double tol) {
  if (!facts(g).connected)
    throw Error(ErrorCode::Disconnected, "graph is not connected");
  const std::size_t n = g.order();
  const RealMatrix l = to_real(laplacian(g));
  const Eigensystem es = jacobi_eigendecompose(l);

  NumericVerdict out;
  out.tol = tol;
  out.grid_points = grid.size();
  out.min_diff = std::numeric_limits<double>::infinity();
  out.min_h = std::numeric_limits<double>::infinity();

  std::vector<double> prev(n * n, 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid[k];
    const RealMatrix h = heat_at(es, t);
    const RealMatrix dh = multiply(l, h);  // -H'
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        const double r = h(u, v) / h(u, u);
        // h = H'(u,v) H(u,u) - H(u,v) H'(u,u)
        const double hv = -dh(u, v) * h(u, u) + h(u, v) * dh(u, u);
        out.min_h = std::min(out.min_h, hv);
        if (k > 0) {
          const double diff = r - prev[u * n + v];
          if (diff < out.min_diff) {
            out.min_diff = diff;
            out.worst_pair = {u, v};
            out.worst_t = grid[k - 1];
          }
        }
        prev[u * n + v] = r;
      }
  }
  if (grid.size() < 2) out.min_diff = 0.0;
  out.passes = out.min_diff >= -tol;
  return out;
}

NumericVerdict numeric_check(const Graph& g, double tol) {
  const Eigensystem es = jacobi_eigendecompose(to_real(laplacian(g)));
  const auto grid = default_grid(es);
  return numeric_check(g, grid, tol);
}

MnhdReport analyze(const Graph& g) {
  MnhdReport rep;
  rep.n = g.order();
  rep.m = g.size();
  rep.facts = facts(g);
  if (!rep.facts.connected)
    throw Error(ErrorCode::Disconnected, "graph is not connected");

  const IntMatrix l = laplacian(g);
  const Eigensystem es = jacobi_eigendecompose(to_real(l));
  const auto exact = exact_eigensystem(l, es);
  for (std::size_t i = 0; i < es.spectrum.size(); ++i) {
    SpectrumReportEntry e{es.spectrum[i].value, es.spectrum[i].multiplicity,
                          std::nullopt};
    if (exact) e.exact = exact->values[i];
    rep.spectrum.push_back(e);
  }

  const bool four = es.spectrum.size() == 4;
  if (four && rep.facts.regular_degree) {
    try {
      rep.van_dam = classify_spectrum(es.spectrum, rep.n, *rep.facts.regular_degree);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoCaseMatches) throw;
    }
  }

  if (four && rep.facts.regular_degree && rep.facts.bipartition) {
    rep.certificate = certificate_bipartite(g);
  } else if (four && exact) {
    rep.certificate = delta_sign_analysis(g);
  } else {
    rep.certificate.method = "none";
    rep.certificate.verdict = Verdict::NotApplicable;
    rep.certificate.reason =
        four ? "spectrum is not expressible over a single quadratic field"
             : std::to_string(es.spectrum.size()) +
                   " distinct Laplacian eigenvalues, need 4";
  }

  const auto grid = default_grid(es);
  rep.numeric = numeric_check(g, grid);
  return rep;
}

}  // namespace mnhd
