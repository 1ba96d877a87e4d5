#include <charconv>
#include <string>

#include "mnhd/design.hpp"
#include "mnhd/error.hpp"
#include "mnhd/graph.hpp"

namespace mnhd {

Graph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph crown(std::size_t v) {
  if (v < 3) throw Error(ErrorCode::TooFewVertices, "crown needs v >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (i != j) e.emplace_back(i, v + j);
  return Graph(2 * v, std::move(e));
}

Graph incidence_graph(const Design& design) {
  validate_design(design);
  const std::size_t v = design.points();
  std::vector<Edge> e;
  for (std::size_t k = 0; k < design.block_count(); ++k)
    for (std::size_t x : design.blocks()[k]) e.emplace_back(x, v + k);
  return Graph(v + design.block_count(), std::move(e));
}

Graph fano_incidence() { return incidence_graph(fano_design()); }

Graph fano_complement_incidence() {
  return incidence_graph(complement_design(fano_design()));
}

Graph paper_742_incidence() { return incidence_graph(design_742()); }

Graph cayley_s3() {
  // Triangles {0,2,5} and {1,3,4} are the cosets of A3; (12) matches them.
  return Graph(6, {{0, 1}, {0, 2}, {0, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 5},
                   {3, 4}, {4, 5}});
}

Graph wheel6() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5);
  }
  return Graph(6, std::move(e));
}

namespace {

std::optional<std::size_t> suffix_number(std::string_view name,
                                         std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  name.remove_prefix(prefix.size());
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
  if (ec != std::errc() || ptr != name.data() + name.size() || name.empty())
    return std::nullopt;
  return value;
}

}  // namespace

std::optional<Graph> builtin_graph(std::string_view name) {
  if (name == "fano") return fano_incidence();
  if (name == "fano-complement") return fano_complement_incidence();
  if (name == "design-742") return paper_742_incidence();
  if (name == "cayley-s3") return cayley_s3();
  if (name == "wheel-6") return wheel6();
  if (auto v = suffix_number(name, "crown-")) return crown(*v);
  if (auto v = suffix_number(name, "cycle-")) return cycle(*v);
  if (auto v = suffix_number(name, "path-")) return path(*v);
  if (auto v = suffix_number(name, "complete-")) return complete(*v);
  return std::nullopt;
}

std::vector<std::string> builtin_family() {
  std::vector<std::string> names{"fano", "fano-complement", "design-742",
                                 "cayley-s3", "wheel-6", "complete-2",
                                 "complete-4"};
  for (int v = 3; v <= 15; ++v) names.push_back("crown-" + std::to_string(v));
  for (int n = 3; n <= 10; ++n) names.push_back("cycle-" + std::to_string(n));
  return names;
}

}  // namespace mnhd
