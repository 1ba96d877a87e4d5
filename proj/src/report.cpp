#include <iomanip>
#include <sstream>

#include "mnhd/report.hpp"

namespace mnhd {

using nlohmann::json;

json to_json(const QuadValue& q) {
  return {{"a", q.a().get_str()},
          {"b", q.b().get_str()},
          {"m", q.radicand()},
          {"text", q.str()},
          {"approx", q.to_double()}};
}

namespace {

json deltas_json(const DeltaSet<QuadValue>& ds) {
  return {{"Delta1", to_json(ds.d1)},   {"Delta2", to_json(ds.d2)},
          {"Delta3", to_json(ds.d3)},   {"Delta12", to_json(ds.d12)},
          {"Delta13", to_json(ds.d13)}, {"Delta23", to_json(ds.d23)}};
}

json van_dam_json(const VanDamResult& r) {
  json j{{"case", to_string(r.kind)}};
  if (r.kind == VanDamCase::CaseII) {
    j["a"] = r.a;
    j["b"] = r.b;
  }
  if (r.kind == VanDamCase::CaseIII) j["m"] = r.m;
  return j;
}

}  // namespace

json to_json(const MnhdReport& r) {
  json j;
  j["graph"] = {{"n", r.n},
                {"m", r.m},
                {"regular", r.facts.regular_degree.has_value()},
                {"degree", r.facts.regular_degree ? json(*r.facts.regular_degree)
                                                  : json(nullptr)},
                {"bipartite", r.facts.bipartition.has_value()}};

  j["spectrum"] = json::array();
  for (const auto& e : r.spectrum) {
    json s{{"value", e.value}, {"multiplicity", e.multiplicity}};
    s["exact"] = e.exact ? to_json(*e.exact) : json(nullptr);
    j["spectrum"].push_back(s);
  }
  j["vanDamCase"] = r.van_dam ? van_dam_json(*r.van_dam) : json(nullptr);

  j["classes"] = json::array();
  for (const auto& c : r.certificate.classes) {
    json terms = json::array();
    for (const auto& t : c.h)
      terms.push_back({{"rate", to_json(t.rate)},
                       {"coefficient", to_json(t.coefficient)}});
    j["classes"].push_back(
        {{"tag", c.tag},
         {"signature",
          {{"L", c.signature.l},
           {"L2", c.signature.l2},
           {"degU", c.signature.deg_u},
           {"degV", c.signature.deg_v}}},
         {"representative", {c.representative.first, c.representative.second}},
         {"pairs", c.pair_count},
         {"deltas", deltas_json(c.deltas)},
         {"h", terms}});
  }

  json checks = json::array();
  for (const auto& c : r.certificate.checks)
    checks.push_back({{"name", c.name}, {"witness", c.witness}, {"pass", c.pass}});
  j["certificate"] = {{"method", r.certificate.method},
                      {"checks", checks},
                      {"verdict", to_string(r.certificate.verdict)},
                      {"reason", r.certificate.reason}};

  const auto& n = r.numeric;
  j["numeric"] = {
      {"minDiff", n.min_diff},
      {"worstPair", {n.worst_pair.first, n.worst_pair.second}},
      {"worstT", n.worst_t},
      {"tol", n.tol},
      {"minH", n.min_h},
      {"gridPoints", n.grid_points},
      {"verdict", n.passes ? "PassesAtTolerance" : "ViolatedAt"},
      {"note", "numerical evidence, not a proof"}};
  return j;
}

std::string to_text(const MnhdReport& r) {
  std::ostringstream os;
  os << "graph: n = " << r.n << ", m = " << r.m;
  if (r.facts.regular_degree) os << ", " << *r.facts.regular_degree << "-regular";
  os << (r.facts.bipartition ? ", bipartite" : "") << '\n';

  os << "spectrum:";
  for (const auto& e : r.spectrum) {
    os << ' ';
    if (e.exact) os << *e.exact;
    else os << std::setprecision(12) << e.value;
    os << "^" << e.multiplicity;
  }
  os << '\n';
  if (r.van_dam) os << "van Dam case: " << to_string(r.van_dam->kind) << '\n';

  const auto& cert = r.certificate;
  os << "certificate (" << cert.method << "): " << to_string(cert.verdict);
  if (!cert.reason.empty()) os << " [" << cert.reason << "]";
  os << '\n';
  for (const auto& c : cert.classes) {
    os << "  " << c.tag << " L=" << c.signature.l << " L2=" << c.signature.l2
       << " pairs=" << c.pair_count << " e.g. (" << c.representative.first
       << "," << c.representative.second << ")\n"
       << "    D1=" << c.deltas.d1 << " D2=" << c.deltas.d2
       << " D3=" << c.deltas.d3 << '\n'
       << "    D12=" << c.deltas.d12 << " D13=" << c.deltas.d13
       << " D23=" << c.deltas.d23 << '\n';
  }
  for (const auto& c : cert.checks)
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": "
       << c.witness << '\n';

  const auto& n = r.numeric;
  os << "numeric (evidence only): "
     << (n.passes ? "PassesAtTolerance" : "ViolatedAt") << std::setprecision(6)
     << " minDiff=" << n.min_diff << " at pair (" << n.worst_pair.first << ","
     << n.worst_pair.second << ") t=" << n.worst_t << ", minH=" << n.min_h
     << ", tol=" << n.tol << ", " << n.grid_points << " grid points\n";
  return os.str();
}

}  // namespace mnhd
