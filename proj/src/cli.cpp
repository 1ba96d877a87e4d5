#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mnhd/analysis.hpp"
#include "mnhd/cli.hpp"
#include "mnhd/design.hpp"
#include "mnhd/error.hpp"
#include "mnhd/report.hpp"

namespace mnhd::cli {

namespace {

// "builtin:NAME" or a path to an edge-list file.
Graph load_graph(const std::string& spec) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string name = spec.substr(prefix.size());
    if (auto g = builtin_graph(name)) return *g;
    throw Error(ErrorCode::ParseError, "unknown builtin graph '" + name + "'");
  }
  return load_edge_list(spec);
}

// Writes to `path`, or to `out` when path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  fn(file);
}

bool negative(const MnhdReport& r) {
  return r.certificate.verdict == Verdict::SignCheckFailed || !r.numeric.passes;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monotonicity of normalized heat diffusion on graphs"};
  app.require_subcommand(1);

  std::string format = "text";
  bool strict = false;
  std::string input, output;
  double tol = kDefaultTolerance;
  std::size_t points = 60;
  std::size_t cu = 0, cv = 0;
  std::string design_dir;
  bool list = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "exact certificate plus numeric check");
  analyze_cmd->add_option("graph", input, "edge-list file or builtin:NAME")->required();
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--strict", strict, "exit 1 on a negative verdict");

  auto* check_cmd = app.add_subcommand("check", "numeric monotonicity check only");
  check_cmd->add_option("graph", input)->required();
  check_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  check_cmd->add_option("--points", points)->check(CLI::Range(1, 100000));
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_flag("--strict", strict);

  auto* curve_cmd = app.add_subcommand("curve", "r_t(u,v) as CSV");
  curve_cmd->add_option("graph", input)->required();
  curve_cmd->add_option("-u", cu)->required();
  curve_cmd->add_option("-v", cv)->required();
  curve_cmd->add_option("--points", points)->check(CLI::Range(1, 100000));
  curve_cmd->add_option("--out", output);

  auto* dval_cmd = app.add_subcommand("design-validate", "check BIBD conditions");
  dval_cmd->add_option("design", input)->required();
  dval_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* dinc_cmd = app.add_subcommand("design-incidence", "incidence graph as edge list");
  dinc_cmd->add_option("design", input)->required();
  dinc_cmd->add_option("--out", output);

  auto* builtin_cmd = app.add_subcommand("builtin", "emit a builtin graph");
  builtin_cmd->add_option("name", input);
  builtin_cmd->add_flag("--list", list);
  builtin_cmd->add_option("--out", output);

  auto* catalog_cmd = app.add_subcommand("catalog", "list the four-eigenvalue catalog");

  auto* tables_cmd = app.add_subcommand("tables", "recompute the reference Delta tables and the catalog");
  tables_cmd->add_option("--design-dir", design_dir);
  tables_cmd->add_flag("--strict", strict);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      const MnhdReport rep = analyze(load_graph(input));
      if (format == "json") out << to_json(rep).dump(2) << '\n';
      else out << to_text(rep);
      return strict && negative(rep) ? kExitNegative : kExitOk;
    }
    if (check_cmd->parsed()) {
      const Graph g = load_graph(input);
      const Eigensystem es = jacobi_eigendecompose(to_real(laplacian(g)));
      const auto grid = default_grid(es, points);
      const NumericVerdict nv = numeric_check(g, grid, tol);
      if (format == "json") {
        out << nlohmann::json{{"minDiff", nv.min_diff},
                              {"worstPair", {nv.worst_pair.first, nv.worst_pair.second}},
                              {"worstT", nv.worst_t},
                              {"tol", nv.tol},
                              {"minH", nv.min_h},
                              {"gridPoints", nv.grid_points},
                              {"verdict", nv.passes ? "PassesAtTolerance" : "ViolatedAt"}}
                   .dump(2)
            << '\n';
      } else {
        out << (nv.passes ? "PassesAtTolerance" : "ViolatedAt")
            << std::setprecision(6) << " minDiff=" << nv.min_diff << " pair=("
            << nv.worst_pair.first << "," << nv.worst_pair.second
            << ") t=" << nv.worst_t << " minH=" << nv.min_h << '\n';
      }
      return strict && !nv.passes ? kExitNegative : kExitOk;
    }
    if (curve_cmd->parsed()) {
      const Graph g = load_graph(input);
      if (cu >= g.order() || cv >= g.order())
        throw Error(ErrorCode::IndexOutOfRange, "vertex outside 0.." +
                                                    std::to_string(g.order() - 1));
      const Eigensystem es = jacobi_eigendecompose(to_real(laplacian(g)));
      const auto grid = default_grid(es, points);
      const auto curve = ratio_curve(es, cu, cv, grid);
      emit(output, out, [&](std::ostream& os) {
        os << "t,r\n" << std::setprecision(17);
        for (const auto& [t, r] : curve) os << t << ',' << r << '\n';
      });
      return kExitOk;
    }
    if (dval_cmd->parsed()) {
      const Design design = load_design(input);
      const DesignParams p = validate_design(design);
      const bool sym = is_symmetric(p);
      if (format == "json") {
        nlohmann::json j{{"v", p.v}, {"b", p.b}, {"d", p.d}, {"r", p.r},
                         {"lambda", p.lambda}, {"symmetric", sym}};
        if (sym && p.d > p.lambda) {
          j["predictedSpectrum"] = nlohmann::json::array();
          for (const auto& x : predicted_spectrum(p.v, p.d, p.lambda).values)
            j["predictedSpectrum"].push_back(to_json(x));
        }
        out << j.dump(2) << '\n';
      } else {
        out << "valid 2-(" << p.v << "," << p.d << "," << p.lambda
            << ") design, b = " << p.b << ", r = " << p.r
            << (sym ? ", symmetric" : "") << '\n';
        if (sym && p.d > p.lambda) {
          out << "incidence graph spectrum:";
          for (const auto& x : predicted_spectrum(p.v, p.d, p.lambda).values)
            out << ' ' << x;
          out << '\n';
        }
      }
      return kExitOk;
    }
    if (dinc_cmd->parsed()) {
      const Design design = load_design(input);
      validate_design(design);
      const Graph g = incidence_graph(design);
      emit(output, out, [&](std::ostream& os) { write_edge_list(os, g); });
      return kExitOk;
    }
    if (builtin_cmd->parsed()) {
      if (list) {
        for (const auto& name : builtin_family()) out << name << '\n';
        return kExitOk;
      }
      if (input.empty()) throw Error(ErrorCode::ParseError, "builtin needs a name or --list");
      const auto g = builtin_graph(input);
      if (!g) throw Error(ErrorCode::ParseError, "unknown builtin graph '" + input + "'");
      emit(output, out, [&](std::ostream& os) { write_edge_list(os, *g); });
      return kExitOk;
    }
    if (catalog_cmd->parsed()) {
      for (const auto& row : catalog()) {
        out << std::setw(2) << row.vertices << "  (" << row.v << "," << row.d
            << "," << row.lambda << ")  {";
        for (int k = 0; k < 4; ++k) out << (k ? ", " : "") << row.spectrum[k];
        out << "}\n";
      }
      return kExitOk;
    }
    if (tables_cmd->parsed()) {
      const bool ok = reproduce_tables(
          out, design_dir.empty() ? std::nullopt : std::optional(design_dir));
      return strict && !ok ? kExitNegative : kExitOk;
    }
  } catch (const std::exception& e) {
    err << "mnhd: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mnhd::cli
