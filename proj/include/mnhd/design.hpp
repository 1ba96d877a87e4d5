#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "mnhd/quad.hpp"

namespace mnhd {

using Block = std::vector<std::size_t>;

/// Family of blocks over the ground set {0..v-1}. Construction checks only
/// structure (indices in range, blocks nonempty, no repeated point in a
/// block); use validate_design for the BIBD conditions. Blocks are kept
/// sorted internally, in input order.
class Design {
 public:
  Design(std::size_t v, std::vector<Block> blocks);

  std::size_t points() const noexcept { return v_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::size_t v_;
  std::vector<Block> blocks_;
};

/// (v, b, d, r, lambda): d is block size (the table literature writes k).
struct DesignParams {
  std::size_t v = 0;
  std::size_t b = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t lambda = 0;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Checks constant block size, constant replication and constant pair
/// count, then bd = vr and lambda(v-1) = r(d-1). lambda = 0 and complete
/// blocks (d = v) are rejected.
DesignParams validate_design(const Design& design);

bool is_symmetric(const DesignParams& p);

/// Every block replaced by its complement in the ground set. The input must
/// validate; the result is returned unvalidated.
Design complement_design(const Design& design);

/// Laplacian spectrum of the incidence graph of a symmetric (v, d, lambda)
/// design: 0, d - sqrt(d - lambda), d + sqrt(d - lambda), 2d.
struct PredictedSpectrum {
  std::array<QuadValue, 4> values;
};
PredictedSpectrum predicted_spectrum(std::size_t v, std::size_t d,
                                     std::size_t lambda);

struct LambdaEstimate {
  mpq_class value;
  bool feasible = false;  // integral and >= 1
};
/// 2d(d-1)/(n-2) for a d-regular bipartite graph on n vertices with four
/// Laplacian eigenvalues.
LambdaEstimate lambda_from_n_d(std::size_t n, std::size_t d);

struct CatalogRow {
  std::size_t vertices;
  std::array<QuadValue, 4> spectrum;
  std::size_t v;
  std::size_t d;
  std::size_t lambda;
};

/// Regular bipartite graphs with four Laplacian eigenvalues on at most 30
/// vertices (van Dam and Spence), 19 rows, in table order.
const std::vector<CatalogRow>& catalog();

Design fano_design();
/// The (7,4,2) block set {1234, 1256, 1467, 1357, 2367, 2457, 3456},
/// relabelled 0-based.
Design design_742();
Design triangle_design();

// Design file: "v b [base=0|1]" then b lines of whitespace-separated points.
Design read_design(std::istream& in);
void write_design(std::ostream& out, const Design& design);
Design load_design(const std::string& path);

}  // namespace mnhd
