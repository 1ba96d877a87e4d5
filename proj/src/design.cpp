#include "mnhd/design.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mnhd/error.hpp"

namespace mnhd {

Design::Design(std::size_t v, std::vector<Block> blocks)
    : v_(v), blocks_(std::move(blocks)) {
  if (v_ < 2) throw Error(ErrorCode::InvalidDesign, "ground set needs v >= 2");
  if (blocks_.empty()) throw Error(ErrorCode::InvalidDesign, "no blocks");
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    Block& b = blocks_[k];
    if (b.empty())
      throw Error(ErrorCode::InvalidDesign, "block " + std::to_string(k) + " is empty");
    std::sort(b.begin(), b.end());
    if (b.back() >= v_)
      throw Error(ErrorCode::InvalidDesign,
                  "block " + std::to_string(k) + " has point " +
                      std::to_string(b.back()) + " outside 0.." +
                      std::to_string(v_ - 1));
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw Error(ErrorCode::InvalidDesign,
                  "block " + std::to_string(k) + " repeats a point");
  }
}

DesignParams validate_design(const Design& design) {
  const std::size_t v = design.points();
  const auto& blocks = design.blocks();
  DesignParams p;
  p.v = v;
  p.b = blocks.size();
  p.d = blocks.front().size();
  for (const Block& blk : blocks)
    if (blk.size() != p.d)
      throw Error(ErrorCode::NotUniform,
                  "block sizes " + std::to_string(p.d) + " and " +
                      std::to_string(blk.size()));

  std::vector<std::size_t> replication(v, 0);
  std::vector<std::size_t> pairs(v * v, 0);
  for (const Block& blk : blocks)
    for (std::size_t i = 0; i < blk.size(); ++i) {
      ++replication[blk[i]];
      for (std::size_t j = i + 1; j < blk.size(); ++j) ++pairs[blk[i] * v + blk[j]];
    }
  p.r = replication.front();
  for (std::size_t x = 0; x < v; ++x)
    if (replication[x] != p.r)
      throw Error(ErrorCode::ReplicationVaries,
                  "point " + std::to_string(x) + " lies in " +
                      std::to_string(replication[x]) + " blocks, point 0 in " +
                      std::to_string(p.r));
  p.lambda = pairs[0 * v + 1];
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y)
      if (pairs[x * v + y] != p.lambda)
        throw Error(ErrorCode::NotBalanced,
                    "pair {" + std::to_string(x) + "," + std::to_string(y) +
                        "} covered " + std::to_string(pairs[x * v + y]) +
                        " times, pair {0,1} " + std::to_string(p.lambda));
  if (p.lambda == 0)
    throw Error(ErrorCode::NotBalanced, "pairs must be covered (lambda = 0)");
  if (p.d == v)
    throw Error(ErrorCode::DegenerateDesign, "complete blocks (d = v)");

  // Necessary identities; they follow from uniform counts but are checked.
  if (p.b * p.d != v * p.r || p.lambda * (v - 1) != p.r * (p.d - 1))
    throw Error(ErrorCode::NotBalanced, "parameter identities fail");
  return p;
}

bool is_symmetric(const DesignParams& p) { return p.v == p.b; }

Design complement_design(const Design& design) {
  validate_design(design);
  const std::size_t v = design.points();
  std::vector<Block> out;
  for (const Block& blk : design.blocks()) {
    Block c;
    for (std::size_t x = 0; x < v; ++x)
      if (!std::binary_search(blk.begin(), blk.end(), x)) c.push_back(x);
    out.push_back(std::move(c));
  }
  return Design(v, std::move(out));
}

PredictedSpectrum predicted_spectrum(std::size_t v, std::size_t d,
                                     std::size_t lambda) {
  (void)v;
  if (d <= lambda)
    throw Error(ErrorCode::DegenerateDLambda,
                "d = " + std::to_string(d) + " <= lambda = " + std::to_string(lambda));
  const QuadValue root =
      QuadValue::sqrt(mpq_class(static_cast<unsigned long>(d - lambda)));
  const QuadValue dd(static_cast<long>(d));
  return {{QuadValue(0), dd - root, dd + root, dd * 2}};
}

LambdaEstimate lambda_from_n_d(std::size_t n, std::size_t d) {
  LambdaEstimate e;
  if (n <= 2 || n % 2 != 0) return e;
  e.value = mpq_class(static_cast<unsigned long>(2 * d * (d - 1)),
                      static_cast<unsigned long>(n - 2));
  e.value.canonicalize();
  e.feasible = e.value.get_den() == 1 && e.value >= 1;
  return e;
}

namespace {

Design from_one_based(std::size_t v, std::vector<Block> blocks) {
  for (auto& b : blocks)
    for (auto& x : b) --x;
  return Design(v, std::move(blocks));
}

}  // namespace

Design fano_design() {
  return Design(7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0},
                    {5, 6, 1}, {6, 0, 2}});
}

Design design_742() {
  return from_one_based(7, {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 4, 6, 7},
                            {1, 3, 5, 7}, {2, 3, 6, 7}, {2, 4, 5, 7},
                            {3, 4, 5, 6}});
}

Design triangle_design() { return Design(3, {{0, 1}, {1, 2}, {0, 2}}); }

Design read_design(std::istream& in) {
  std::string line;
  int lineno = 0;
  const auto next = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next()) throw Error(ErrorCode::ParseError, "missing header \"v b\"");
  std::istringstream header(line);
  long long v = -1, b = -1;
  if (!(header >> v >> b) || v < 0 || b < 0)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) +
                                           ": expected \"v b [base=0|1]\"");
  std::size_t base = 0;
  std::string flag;
  if (header >> flag) {
    if (flag == "base=1")
      base = 1;
    else if (flag != "base=0")
      throw Error(ErrorCode::ParseError, "unknown header flag " + flag);
  }
  std::vector<Block> blocks;
  for (long long k = 0; k < b; ++k) {
    if (!next())
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(b) +
                                             " blocks, found " + std::to_string(k));
    std::istringstream row(line);
    Block blk;
    long long x;
    while (row >> x) {
      if (x < static_cast<long long>(base))
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) +
                                               ": point below base");
      blk.push_back(static_cast<std::size_t>(x) - base);
    }
    if (!row.eof())
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": non-integer token");
    blocks.push_back(std::move(blk));
  }
  if (next())
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(lineno) + ": more blocks than declared");
  return Design(static_cast<std::size_t>(v), std::move(blocks));
}

void write_design(std::ostream& out, const Design& design) {
  out << design.points() << ' ' << design.block_count() << " base=0\n";
  for (const Block& blk : design.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
    out << '\n';
  }
}

Design load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_design(in);
}

}  // namespace mnhd
