#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace mnhd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

/// Prints the Delta tables of the S3 Cayley graph and the 6-wheel next to
/// the reference values, and checks every catalog row that can be built
/// (crowns, Fano, its complement, plus any design files found in
/// design_dir). Returns true when nothing disagrees except the known
/// misprint, which is flagged in the output.
bool reproduce_tables(std::ostream& out,
                      const std::optional<std::string>& design_dir);

}  // namespace mnhd::cli
