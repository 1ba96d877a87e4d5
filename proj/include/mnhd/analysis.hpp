#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnhd/graph.hpp"
#include "mnhd/heat.hpp"
#include "mnhd/spectral.hpp"

namespace mnhd {

enum class PairTag { W0, W1, W2, W3 };
const char* to_string(PairTag tag);

/// (L(u,v), L^2(u,v)) witness plus the endpoint degrees.
struct Signature {
  std::int64_t l = 0;
  std::int64_t l2 = 0;
  std::size_t deg_u = 0;
  std::size_t deg_v = 0;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct PairClass {
  PairTag tag;
  Signature signature;
};

/// (n, d, lambda) of an incidence graph of a symmetric design.
struct IncidenceContext {
  std::size_t n = 0;
  std::size_t d = 0;
  std::int64_t lambda = 0;
};

/// W1 <=> (-1, -2d), W2 <=> (0, lambda), W3 <=> (0, 0), W0 on the diagonal.
/// Any other signature throws UnknownSignature.
PairClass classify_pair(const IntMatrix& l, const IntMatrix& l2, std::size_t u,
                        std::size_t v, const IncidenceContext& ctx);

struct Check {
  std::string name;
  std::string witness;
  bool pass = false;
};

enum class Verdict { ProvenMNHD, SignCheckFailed, NotApplicable };
const char* to_string(Verdict v);

struct ClassRecord {
  std::string tag;  // W1..W3 on the bipartite path, "S<k>" otherwise
  Signature signature;
  std::pair<std::size_t, std::size_t> representative;
  std::size_t pair_count = 0;
  DeltaSet<QuadValue> deltas;
  ExpSum h;
};

struct Certificate {
  std::string method;  // "bipartite" or "template"
  std::vector<ClassRecord> classes;
  std::vector<Check> checks;
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;  // failed checks or why not applicable

  bool all_checks_pass() const;
};

/// Exact certificate for a connected regular bipartite graph with four
/// Laplacian eigenvalues; NotApplicable for anything else.
Certificate certificate_bipartite(const Graph& g);

/// Exact Delta-sign analysis for a connected graph with four distinct
/// Laplacian eigenvalues over a single radicand. Throws NotFourEigenvalues
/// or MixedRadicands when the spectrum does not fit.
Certificate delta_sign_analysis(const Graph& g);

struct NumericVerdict {
  double min_diff = 0.0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  double worst_t = 0.0;
  double tol = kDefaultTolerance;
  bool passes = false;
  double min_h = 0.0;  // smallest sampled h_{u,v}(t), reported alongside
  std::size_t grid_points = 0;
};

/// Forward differences of r_t over every ordered pair and consecutive grid
/// points. Passing is numerical evidence only.
NumericVerdict numeric_check(const Graph& g, std::span<const double> grid,
                             double tol = kDefaultTolerance);
NumericVerdict numeric_check(const Graph& g, double tol = kDefaultTolerance);

struct SpectrumReportEntry {
  double value;
  std::size_t multiplicity;
  std::optional<QuadValue> exact;
};

struct MnhdReport {
  std::size_t n = 0;
  std::size_t m = 0;
  GraphFacts facts;
  std::vector<SpectrumReportEntry> spectrum;
  std::optional<VanDamResult> van_dam;
  Certificate certificate;
  NumericVerdict numeric;
};

/// facts -> spectrum -> van Dam case -> bipartite certificate, else template
/// analysis, else NotApplicable; numeric check always runs.
MnhdReport analyze(const Graph& g);

}  // namespace mnhd
