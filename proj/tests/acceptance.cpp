// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mnhd/analysis.hpp"
#include "mnhd/design.hpp"
#include "mnhd/graph.hpp"
#include "mnhd/heat.hpp"

using namespace mnhd;

namespace {

QuadValue q(long a, long b = 1) { return QuadValue(mpq_class(a, b)); }
QuadValue surd(long a, long b, long den, unsigned long m) {
  return QuadValue(mpq_class(a, den), mpq_class(b, den), m);
}

using Deltas = std::array<QuadValue, 6>;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& what) {
    if (pass) note << "first failure: " << what;
    pass = false;
  }
};

std::vector<Graph> incidence_builtins() {
  std::vector<Graph> out{fano_incidence(), fano_complement_incidence(),
                         paper_742_incidence()};
  for (std::size_t v = 3; v <= 15; ++v) out.push_back(crown(v));
  for (const auto& e : std::filesystem::directory_iterator(MNHD_DATA_DIR "/designs"))
    out.push_back(incidence_graph(load_design(e.path().string())));
  return out;
}

Eigensystem eig(const Graph& g) { return jacobi_eigendecompose(to_real(laplacian(g))); }

std::optional<ExactEigensystem> exact(const Graph& g) {
  return exact_eigensystem(laplacian(g), eig(g));
}

Deltas deltas(const ExactEigensystem& ex, std::size_t u, std::size_t v) {
  return delta_set(std::span<const ExactMatrix>(ex.projectors.data() + 1, 3), u, v).values();
}

bool common_neighbour(const Graph& g, std::size_t u, std::size_t v) {
  for (auto w : g.neighbors(u))
    if (g.adjacent(w, v)) return true;
  return false;
}

// 1. Spectrum reproduction of the constructible table rows.
void spectra(Outcome& o) {
  struct Row {
    std::string name;
    Graph g;
    std::array<double, 4> want;
    std::size_t v;
  };
  std::vector<Row> rows;
  for (std::size_t v = 5; v <= 15; ++v)
    rows.push_back({"crown-" + std::to_string(v), crown(v),
                    {0.0, double(v - 2), double(v), double(2 * v - 2)}, v});
  const double r2 = std::sqrt(2.0);
  rows.push_back({"fano", fano_incidence(), {0, 3 - r2, 3 + r2, 6}, 7});
  rows.push_back({"fano-complement", fano_complement_incidence(), {0, 4 - r2, 4 + r2, 8}, 7});
  rows.push_back({"design-742", paper_742_incidence(), {0, 4 - r2, 4 + r2, 8}, 7});
  for (const auto& row : rows) {
    const Eigensystem es = eig(row.g);
    if (es.spectrum.size() != 4) {
      o.fail(row.name + " has " + std::to_string(es.spectrum.size()) + " eigenvalues");
      continue;
    }
    const std::size_t mult[] = {1, row.v - 1, row.v - 1, 1};
    for (int k = 0; k < 4; ++k)
      if (std::fabs(es.spectrum[k].value - row.want[k]) > 1e-9 ||
          es.spectrum[k].multiplicity != mult[k])
        o.fail(row.name + " eigenvalue " + std::to_string(k));
  }
  o.note << (o.pass ? "" : "; ") << rows.size() << " rows";
}

// 2. Cayley graph table, every ordered pair against the printed row.
void cayley_table(Outcome& o) {
  const Graph g = cayley_s3();
  const auto ex = exact(g);
  if (!ex) return o.fail("no exact eigensystem");
  const Deltas w1{q(1, 3), q(1, 2), q(1, 6), q(-1, 36), q(-1, 12), q(-1, 9)};
  const Deltas w2{q(0), q(1, 2), q(1, 2), q(1, 12), q(1, 12), q(0)};
  const Deltas w3{q(1, 3), q(0), q(2, 3), q(-1, 9), q(0), q(2, 9)};
  std::size_t checked = 0;
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = 0; v < 6; ++v) {
      if (u == v) continue;
      const Deltas& want = !g.adjacent(u, v) ? w1 : common_neighbour(g, u, v) ? w2 : w3;
      if (deltas(*ex, u, v) != want)
        o.fail("pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
      checked += 6;
    }
  o.note << (o.pass ? "" : "; ") << "18 printed values, " << checked << " exact comparisons";
}

// 3. Wheel table over sqrt(5), with the two suspect entries reported.
void wheel_table(Outcome& o) {
  const Graph g = wheel6();
  const auto ex = exact(g);
  if (!ex) return o.fail("no exact eigensystem");
  const Deltas r1{surd(5, 1, 10, 5), surd(5, -1, 10, 5), q(0), surd(0, -2, 25, 5),
                  surd(-5, -1, 300, 5), surd(-5, 1, 300, 5)};
  const Deltas r2{surd(5, -1, 10, 5), surd(5, 1, 10, 5), q(0), surd(0, 2, 25, 5),
                  surd(-5, 1, 300, 5), surd(-5, -1, 10, 5)};
  const Deltas r3{q(2, 5), q(2, 5), q(1, 5), q(0), q(1, 15), q(1, 15)};
  const Deltas r4{q(0), q(0), q(1), q(0), q(0), q(0)};
  bool first_suspect_agrees = true, second_suspect_agrees = true;
  QuadValue second_computed;
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = 0; v < 6; ++v) {
      if (u == v) continue;
      const Deltas got = deltas(*ex, u, v);
      const int row = u == 5 ? 4 : v == 5 ? 3 : g.adjacent(u, v) ? 2 : 1;
      const Deltas& want = row == 1 ? r1 : row == 2 ? r2 : row == 3 ? r3 : r4;
      for (int k = 0; k < 6; ++k) {
        const bool same = got[k] == want[k];
        if (row == 1 && k == 4) first_suspect_agrees = first_suspect_agrees && same;
        else if (row == 2 && k == 5) {
          second_suspect_agrees = second_suspect_agrees && same;
          second_computed = got[k];
        } else if (!same) {
          o.fail("row " + std::to_string(row) + " entry " + std::to_string(k));
        }
      }
    }
  // Internal consistency of the projector-derived values.
  const Certificate c = delta_sign_analysis(g);
  if (!c.all_checks_pass()) o.fail("template checks: " + c.reason);
  ExactMatrix sum(6);
  for (const auto& p : ex->projectors) sum += p;
  if (!(sum == ExactMatrix::identity(6))) o.fail("projectors do not resolve I");
  o.note << (o.pass ? "" : "; ") << "row (i) Delta13 "
         << (first_suspect_agrees ? "agrees with print" : "differs from print")
         << "; row (ii) Delta23 computed " << second_computed << ", printed "
         << r2[5] << (second_suspect_agrees ? " (agrees)" : " (misprint)");
}

// 4. Bipartite certificates.
void certificates(Outcome& o) {
  const char* required[] = {"W3_cancellation_delta2_delta13",
                            "W3_cancellation_delta1_delta23",
                            "identity_C2_equals_minus_lambda2_sq_C1_C3"};
  std::size_t n_checks = 0;
  const auto graphs = incidence_builtins();
  for (const auto& g : graphs) {
    const Certificate c = certificate_bipartite(g);
    const std::string id = "n=" + std::to_string(g.order()) + " d=" +
                           std::to_string(g.degree(0));
    if (c.verdict != Verdict::ProvenMNHD || !c.all_checks_pass())
      o.fail(id + ": " + to_string(c.verdict) + " " + c.reason);
    for (const char* name : required) {
      bool found = false;
      for (const auto& ch : c.checks) found = found || (ch.name == name && ch.pass);
      if (!found) o.fail(id + " lacks " + name);
    }
    n_checks += c.checks.size();
  }
  o.note << (o.pass ? "" : "; ") << graphs.size() << " graphs, " << n_checks
         << " checks";
}

// 5. Numeric monotonicity over the builtin family.
void numeric(Outcome& o) {
  double worst = 0.0;
  std::string worst_name;
  for (const auto& name : builtin_family()) {
    const Graph g = *builtin_graph(name);
    const auto grid = default_grid(eig(g));
    if (grid.size() != 61) o.fail(name + " grid size");
    const NumericVerdict nv = numeric_check(g, grid, 1e-9);
    if (!nv.passes) o.fail(name);
    if (nv.min_diff < worst) {
      worst = nv.min_diff;
      worst_name = name;
    }
  }
  const bool s3 = numeric_check(cayley_s3()).passes, w6 = numeric_check(wheel6()).passes;
  if (!s3 || !w6) o.fail("cayley-s3 / wheel-6");
  o.note << (o.pass ? "" : "; ") << builtin_family().size()
         << " builtins, worst forward difference " << worst << " ("
         << (worst_name.empty() ? "none negative" : worst_name) << ")";
}

// 6. h(0) = -L(u,v).
void h_at_zero(Outcome& o) {
  std::size_t exact_graphs = 0, pairs = 0;
  for (const auto& name : builtin_family()) {
    const Graph g = *builtin_graph(name);
    const IntMatrix l = laplacian(g);
    const RealMatrix lr = to_real(l);
    const Eigensystem es = eig(g);
    const auto ex = exact_eigensystem(l, es);
    if (ex) ++exact_graphs;
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v) {
        if (u == v) continue;
        ++pairs;
        if (std::fabs(h_direct(lr, es, u, v, 0.0) + lr(u, v)) > 1e-12)
          o.fail(name + " numeric");
        if (ex && value_at_zero(h_coefficients_direct(*ex, u, v)) != QuadValue(-l(u, v)))
          o.fail(name + " exact");
      }
  }
  o.note << (o.pass ? "" : "; ") << pairs << " pairs numeric, exact on "
         << exact_graphs << " of " << builtin_family().size() << " builtins";
}

// 7. Heat-kernel properties.
void heat_properties(Outcome& o) {
  for (const auto& name : builtin_family()) {
    const Graph g = *builtin_graph(name);
    const Eigensystem es = eig(g);
    if (!(heat_at(es, 0.0) == RealMatrix::identity(g.order()))) o.fail(name + " H_0");
    for (double t : {0.5, 2.0, 10.0}) {
      const RealMatrix h = heat_at(es, t);
      for (std::size_t i = 0; i < g.order(); ++i) {
        double s = 0;
        for (double x : h.row(i)) s += x;
        if (std::fabs(s - 1.0) > 1e-12) o.fail(name + " row sum");
      }
    }
  }
  for (const Graph& g : {fano_incidence(), wheel6(), cayley_s3()}) {
    const Eigensystem es = eig(g);
    for (auto [s, t] : {std::pair{0.3, 0.7}, std::pair{1.0, 2.0}})
      if (max_abs_diff(multiply(heat_at(es, s), heat_at(es, t)), heat_at(es, s + t)) > 1e-9)
        o.fail("semigroup");
  }
  std::size_t transitive = 0;
  for (const auto& name : builtin_family()) {
    if (name.rfind("cycle-", 0) != 0 && name.rfind("crown-", 0) != 0 && name != "cayley-s3")
      continue;
    ++transitive;
    const Graph g = *builtin_graph(name);
    const Eigensystem es = eig(g);
    const auto grid = default_grid(es);
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v)
        if (u != v)
          for (double t : grid)
            if (ratio(es, u, v, t) > 1 + 1e-12) o.fail(name + " r_t > 1");
  }
  o.note << (o.pass ? "" : "; ") << "r_t <= 1 on " << transitive << " vertex-transitive builtins";
}

// 8. Exact projector resolution on incidence builtins.
void projectors(Outcome& o) {
  const auto graphs = incidence_builtins();
  for (const auto& g : graphs) {
    const IntMatrix l = laplacian(g);
    const auto ex = exact_eigensystem(l, eig(g));
    const std::string id = "n=" + std::to_string(g.order()) + " d=" + std::to_string(g.degree(0));
    if (!ex || ex->values.size() != 4) {
      o.fail(id + " no exact eigensystem");
      continue;
    }
    const auto& p = ex->projectors;
    ExactMatrix sum(g.order()), recon(g.order());
    for (std::size_t i = 0; i < 4; ++i) {
      sum += p[i];
      recon += p[i] * ex->values[i];
      for (std::size_t j = 0; j < 4; ++j) {
        const ExactMatrix prod = p[i] * p[j];
        if (i == j ? !(prod == p[i]) : !prod.is_zero()) o.fail(id + " P_i P_j");
      }
    }
    if (!(sum == ExactMatrix::identity(g.order()))) o.fail(id + " sum");
    if (!(recon == ExactMatrix(l))) o.fail(id + " L = sum lambda P");
    const std::size_t d = g.degree(0);
    const auto lam = lambda_from_n_d(g.order(), d);
    const auto cf = closed_form_projectors(l, d, lam.value.get_num().get_ui());
    for (std::size_t i = 0; i < 3; ++i)
      if (!(cf.projectors[i] == p[i + 1])) o.fail(id + " closed form");
  }
  o.note << (o.pass ? "" : "; ") << graphs.size() << " graphs, zero error";
}

// 9. van Dam classification.
void van_dam(Outcome& o) {
  const auto s3 = eig(cayley_s3()).spectrum;
  if (classify_spectrum(s3, 6, 3).kind != VanDamCase::CaseI) o.fail("{0,2,3,5}");
  const auto g742 = eig(paper_742_incidence()).spectrum;
  if (classify_spectrum(g742, 14, 4).kind != VanDamCase::CaseII) o.fail("{0,4+-sqrt2,8}");
  const auto c7 = eig(cycle(7)).spectrum;
  const VanDamResult r = classify_spectrum(c7, 7, 2);
  if (r.kind != VanDamCase::CaseIII || r.m != 2) o.fail("C7");
  o.note << (o.pass ? "" : "; ") << "CaseI, CaseII, CaseIII(m=2)";
}

// 10. Design layer.
void designs(Outcome& o) {
  if (!(validate_design(design_742()) == DesignParams{7, 7, 4, 4, 2})) o.fail("(7,4,2) blocks");
  if (!(validate_design(fano_design()) == DesignParams{7, 7, 3, 3, 1})) o.fail("Fano");
  const DesignParams c = validate_design(complement_design(fano_design()));
  if (!(c.v == 7 && c.d == 4 && c.lambda == 2)) o.fail("complement");
  std::vector<Design> accepted{design_742(), fano_design(), complement_design(fano_design())};
  for (const auto& e : std::filesystem::directory_iterator(MNHD_DATA_DIR "/designs"))
    accepted.push_back(load_design(e.path().string()));
  for (const auto& d : accepted) {
    const DesignParams p = validate_design(d);
    if (p.b * p.d != p.v * p.r || p.lambda * (p.v - 1) != p.r * (p.d - 1)) o.fail("identities");
    const Graph g = incidence_graph(d);
    const auto est = lambda_from_n_d(g.order(), p.d);
    if (!est.feasible || est.value != static_cast<long>(p.lambda)) o.fail("lambda recovery");
  }
  for (std::size_t v = 3; v <= 15; ++v) {
    const auto est = lambda_from_n_d(2 * v, v - 1);
    if (!est.feasible || est.value != static_cast<long>(v - 2)) o.fail("crown lambda");
  }
  o.note << (o.pass ? "" : "; ") << accepted.size() << " designs, 13 crowns";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"spectrum reproduction", spectra},
      {"S3 Cayley Delta table", cayley_table},
      {"6-wheel Delta table", wheel_table},
      {"bipartite certificate soundness", certificates},
      {"numeric monotonicity", numeric},
      {"h(0) = -L(u,v)", h_at_zero},
      {"heat kernel properties", heat_properties},
      {"projector resolution", projectors},
      {"van Dam classification", van_dam},
      {"design layer", designs},
  };
  int failures = 0;
  int index = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [title, fn] : criteria) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << ++index << ". " << title
              << "  [" << o.note.str() << "]\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << " in " << secs << " s\n";
  return failures;
}
