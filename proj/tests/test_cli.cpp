#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "mnhd/cli.hpp"
#include "mnhd/graph.hpp"

using namespace mnhd;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mnhd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "mnhd_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("builtin then analyze as json") {
  const auto file = (scratch() / "heawood.g").string();
  CHECK(run({"builtin", "fano", "--out", file}).code == cli::kExitOk);
  CHECK(load_edge_list(file) == fano_incidence());
  const Result r = run({"analyze", file, "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["spectrum"].size() == 4);
  CHECK(j["spectrum"][1]["exact"]["text"] == "3 - sqrt(2)");
  CHECK(j["spectrum"][2]["exact"]["text"] == "3 + sqrt(2)");
  CHECK(j["spectrum"][3]["exact"]["text"] == "6");
  CHECK(j["certificate"]["verdict"] == "ProvenMNHD");
}

TEST_CASE("curve csv") {
  const auto file = (scratch() / "heawood.g").string();
  run({"builtin", "fano", "--out", file});
  const auto csv = (scratch() / "curve.csv").string();
  REQUIRE(run({"curve", file, "-u", "0", "-v", "1", "--points", "60", "--out", csv}).code == 0);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,r");
  std::vector<double> r;
  while (std::getline(in, line)) r.push_back(std::stod(line.substr(line.find(',') + 1)));
  REQUIRE(r.size() == 61);
  CHECK(r.front() == 0.0);
  CHECK(r.back() == doctest::Approx(1.0).epsilon(1e-9));
  for (std::size_t k = 1; k < r.size(); ++k) CHECK(r[k] >= r[k - 1] - 1e-12);
}

TEST_CASE("catalog and tables") {
  const Result c = run({"catalog"});
  CHECK(c.code == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 19);

  const Result bare = run({"tables", "--strict"});
  CHECK(bare.code == 0);
  CHECK(bare.out.find("needs design file") != std::string::npos);
  CHECK(bare.out.find("known misprint") != std::string::npos);
  CHECK(bare.out.find("MISMATCH") == std::string::npos);

  const Result full = run({"tables", "--design-dir", MNHD_DATA_DIR "/designs", "--strict"});
  CHECK(full.code == 0);
  CHECK(full.out.find("needs design file") == std::string::npos);
}

TEST_CASE("design commands") {
  const auto file = (scratch() / "fano.design").string();
  {
    std::ofstream os(file);
    os << "7 7\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n";
  }
  const Result v = run({"design-validate", file, "--format", "json"});
  REQUIRE(v.code == 0);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j["lambda"] == 1);
  CHECK(j["symmetric"] == true);
  const Result inc = run({"design-incidence", file});
  CHECK(inc.code == 0);
  std::istringstream es(inc.out);
  CHECK(read_edge_list(es).order() == 14);

  const auto bad = (scratch() / "bad.design").string();
  {
    std::ofstream os(bad);
    os << "3 2\n0 1\n0 1 2\n";
  }
  const Result b = run({"design-validate", bad});
  CHECK(b.code == cli::kExitUsage);
  CHECK(b.err.find("NotUniform") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"analyze", "/nonexistent/graph.g"}).code == cli::kExitUsage);
  CHECK(run({"analyze", "builtin:path-5"}).code == cli::kExitOk);
  CHECK(run({"analyze", "builtin:path-5", "--strict"}).code == cli::kExitNegative);
  CHECK(run({"check", "builtin:crown-6", "--strict"}).code == cli::kExitOk);
  CHECK(run({"check", "builtin:path-5", "--strict"}).code == cli::kExitNegative);
  CHECK(run({"curve", "builtin:fano", "-u", "0", "-v", "99"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
