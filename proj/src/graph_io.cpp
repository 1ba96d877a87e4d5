#include <fstream>
#include <sstream>
#include <string>

#include "mnhd/error.hpp"
#include "mnhd/graph.hpp"

namespace mnhd {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno))
    throw Error(ErrorCode::ParseError, "missing header line \"n m\"");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(lineno) + ": expected \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line(in, line, lineno))
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) +
                                             " edges, found " +
                                             std::to_string(k));
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || u < 0 || v < 0 || (row >> extra))
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": expected \"u v\"");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, lineno))
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(lineno) + ": more edges than declared");
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace mnhd
