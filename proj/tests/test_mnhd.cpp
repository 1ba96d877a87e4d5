#include "doctest.h"
#include "mnhd/analysis.hpp"
#include "mnhd/design.hpp"
#include "mnhd/error.hpp"
#include "mnhd/report.hpp"

using namespace mnhd;

namespace {

QuadValue q(long a, long b = 1) { return QuadValue(mpq_class(a, b)); }
QuadValue s5(long a, long b, long den) {
  return QuadValue(mpq_class(a, den), mpq_class(b, den), 5);
}

const Check* find(const Certificate& c, const std::string& name) {
  for (const auto& ch : c.checks)
    if (ch.name == name) return &ch;
  return nullptr;
}

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("pair classification on the (7,4,2) graph") {
  const Graph g = paper_742_incidence();
  const IntMatrix l = laplacian(g), l2 = laplacian_squared(g);
  const IncidenceContext ctx{14, 4, 2};
  // Points are 0..6, blocks 7..13; point 0 lies in block 0.
  const PairClass adj = classify_pair(l, l2, 0, 7, ctx);
  CHECK(adj.tag == PairTag::W1);
  CHECK(adj.signature.l == -1);
  CHECK(adj.signature.l2 == -8);
  const PairClass same_side = classify_pair(l, l2, 0, 1, ctx);
  CHECK(same_side.tag == PairTag::W2);
  CHECK(same_side.signature.l2 == 2);
  std::size_t block = 7;
  while (g.adjacent(0, block)) ++block;
  CHECK(classify_pair(l, l2, 0, block, ctx).tag == PairTag::W3);
  CHECK(classify_pair(l, l2, 3, 3, ctx).tag == PairTag::W0);

  const Graph c = cycle(6);
  CHECK(code_of([&] {
          classify_pair(laplacian(c), laplacian_squared(c), 0, 2, ctx);
        }) == ErrorCode::UnknownSignature);
}

TEST_CASE("bipartite certificates") {
  for (const char* name : {"design-742", "fano", "fano-complement", "crown-3", "crown-5", "crown-15"}) {
    CAPTURE(name);
    const Certificate c = certificate_bipartite(*builtin_graph(name));
    CHECK(c.verdict == Verdict::ProvenMNHD);
    CHECK(c.all_checks_pass());
    CHECK(c.classes.size() == 3);
    for (const char* must :
         {"W3_cancellation_delta2_delta13", "W3_cancellation_delta1_delta23",
          "identity_C2_equals_minus_lambda2_sq_C1_C3", "closed_form_equals_lagrange"}) {
      CAPTURE(must);
      const Check* ch = find(c, must);
      REQUIRE(ch);
      CHECK(ch->pass);
    }
  }
  const Certificate s3 = certificate_bipartite(cayley_s3());
  CHECK(s3.verdict == Verdict::NotApplicable);
  CHECK(s3.reason == "not bipartite");
  CHECK(certificate_bipartite(wheel6()).reason == "not regular");
  CHECK(certificate_bipartite(cycle(8)).verdict == Verdict::NotApplicable);
}

TEST_CASE("W3 constant term alone is not sign-definite") {
  // crown(5): (lambda3/n) Delta3 + (lambda2 - lambda1) Delta12 < 0, while the
  // full value at t = 0 is h(0) = 0.
  const Certificate c = certificate_bipartite(crown(5));
  const Check* ch = find(c, "W3_constant_plus_pairs_at_zero_nonnegative");
  REQUIRE(ch);
  CHECK(ch->pass);
  CHECK(ch->witness.find("constant term = -12/25") != std::string::npos);
}

TEST_CASE("template analysis reproduces the S3 Cayley table") {
  const Certificate c = delta_sign_analysis(cayley_s3());
  CHECK(c.verdict == Verdict::ProvenMNHD);
  CHECK(c.classes.size() == 3);
  auto deltas_of = [&](std::size_t u, std::size_t v) {
    const Graph g = cayley_s3();
    const IntMatrix l = laplacian(g);
    const auto ex = exact_eigensystem(l, jacobi_eigendecompose(to_real(l)));
    return delta_set(std::span<const ExactMatrix>(ex->projectors.data() + 1, 3), u, v);
  };
  CHECK(deltas_of(0, 3) == DeltaSet<QuadValue>{q(1, 3), q(1, 2), q(1, 6), q(-1, 36), q(-1, 12), q(-1, 9)});
  CHECK(deltas_of(0, 2) == DeltaSet<QuadValue>{q(0), q(1, 2), q(1, 2), q(1, 12), q(1, 12), q(0)});
  CHECK(deltas_of(0, 1) == DeltaSet<QuadValue>{q(1, 3), q(0), q(2, 3), q(-1, 9), q(0), q(2, 9)});
  std::size_t pairs = 0;
  for (const auto& rec : c.classes) pairs += rec.pair_count;
  CHECK(pairs == 30);
}

TEST_CASE("template analysis of the wheel") {
  const Certificate c = delta_sign_analysis(wheel6());
  CHECK(c.verdict == Verdict::ProvenMNHD);
  bool saw_hub_rim = false, saw_rim_hub = false, saw_rim_adj = false;
  for (const auto& rec : c.classes) {
    if (rec.representative == std::pair<std::size_t, std::size_t>{5, 0}) {
      saw_hub_rim = rec.deltas == DeltaSet<QuadValue>{q(0), q(0), q(1), q(0), q(0), q(0)};
    }
    if (rec.representative == std::pair<std::size_t, std::size_t>{0, 5}) {
      saw_rim_hub = rec.deltas ==
                    DeltaSet<QuadValue>{q(2, 5), q(2, 5), q(1, 5), q(0), q(1, 15), q(1, 15)};
    }
    if (rec.representative == std::pair<std::size_t, std::size_t>{0, 1}) {
      saw_rim_adj = rec.deltas == DeltaSet<QuadValue>{s5(5, -1, 10), s5(5, 1, 10), q(0),
                                                      s5(0, 2, 25), s5(-5, 1, 300),
                                                      s5(-5, -1, 300)};
    }
  }
  CHECK(saw_hub_rim);
  CHECK(saw_rim_hub);
  CHECK(saw_rim_adj);
}

TEST_CASE("template analysis preconditions") {
  CHECK(code_of([] { delta_sign_analysis(path(5)); }) == ErrorCode::NotFourEigenvalues);
  CHECK(code_of([] { delta_sign_analysis(cycle(7)); }) == ErrorCode::MixedRadicands);
  CHECK(code_of([] { delta_sign_analysis(Graph(4, {{0, 1}, {2, 3}})); }) ==
        ErrorCode::Disconnected);
}

TEST_CASE("numeric check") {
  CHECK(numeric_check(crown(5)).passes);
  CHECK(numeric_check(complete(4)).passes);
  CHECK(numeric_check(Graph(2, {{0, 1}})).passes);
  // P3 end-to-end pair, recorded for reference.
  const NumericVerdict p3 = numeric_check(path(3));
  MESSAGE("P3 minDiff " << p3.min_diff);
  CHECK_FALSE(numeric_check(path(5)).passes);
}

TEST_CASE("analyze") {
  const MnhdReport fano = analyze(paper_742_incidence());
  REQUIRE(fano.van_dam);
  CHECK(fano.van_dam->kind == VanDamCase::CaseII);
  CHECK(fano.certificate.verdict == Verdict::ProvenMNHD);
  CHECK(fano.numeric.passes);

  const MnhdReport w = analyze(wheel6());
  CHECK_FALSE(w.facts.regular_degree);
  CHECK(w.certificate.method == "template");
  CHECK(w.certificate.verdict == Verdict::ProvenMNHD);
  CHECK(w.numeric.passes);

  const MnhdReport k2 = analyze(Graph(2, {{0, 1}}));
  CHECK(k2.spectrum.size() == 2);
  CHECK(k2.certificate.verdict == Verdict::NotApplicable);
  CHECK(k2.numeric.passes);

  const MnhdReport c7 = analyze(cycle(7));
  CHECK(c7.certificate.verdict == Verdict::NotApplicable);
  CHECK(c7.numeric.passes);

  CHECK(code_of([] { analyze(Graph(4, {{0, 1}, {2, 3}})); }) == ErrorCode::Disconnected);
}

TEST_CASE("json report fields") {
  const auto j = to_json(analyze(fano_incidence()));
  for (const char* key : {"graph", "spectrum", "vanDamCase", "classes", "certificate", "numeric"})
    CHECK(j.contains(key));
  for (const char* key : {"n", "m", "regular", "bipartite"}) CHECK(j["graph"].contains(key));
  for (const char* key : {"minDiff", "worstPair", "worstT", "verdict"}) CHECK(j["numeric"].contains(key));
  CHECK(j["certificate"]["verdict"] == "ProvenMNHD");
  CHECK(j["classes"][0].contains("signature"));
  CHECK(j["classes"][0].contains("deltas"));
  CHECK(j["certificate"]["checks"][0].contains("witness"));
}
