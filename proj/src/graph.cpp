#include "mnhd/graph.hpp"

#include <algorithm>
#include <queue>

#include "mnhd/error.hpp"

namespace mnhd {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
  if (n < 2)
    throw Error(ErrorCode::TooFewVertices,
                "graph needs at least 2 vertices, got " + std::to_string(n));
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end())
    throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(dup->first) +
                                              "," +
                                              std::to_string(dup->second) +
                                              ") listed twice");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

GraphFacts facts(const Graph& g) {
  const std::size_t n = g.order();
  GraphFacts f;

  const std::size_t d0 = g.degree(0);
  bool regular = true;
  for (Vertex u = 1; u < n; ++u) regular = regular && g.degree(u) == d0;
  if (regular) f.regular_degree = d0;

  // BFS 2-colouring; also counts reachable vertices from 0.
  std::vector<int> colour(n, -1);
  bool bipartite = true;
  std::size_t reached = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      if (s == 0) ++reached;
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          q.push(w);
        } else if (colour[w] == colour[u]) {
          bipartite = false;
        }
      }
    }
  }
  f.connected = reached == n;
  if (bipartite) {
    Bipartition parts;
    for (Vertex u = 0; u < n; ++u)
      (colour[u] == 0 ? parts.first : parts.second).push_back(u);
    f.bipartition = std::move(parts);
  }
  return f;
}

IntMatrix adjacency(const Graph& g) {
  IntMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

IntMatrix laplacian(const Graph& g) {
  IntMatrix l(g.order());
  for (const auto& [u, v] : g.edges()) l(u, v) = l(v, u) = -1;
  for (Vertex u = 0; u < g.order(); ++u)
    l(u, u) = static_cast<std::int64_t>(g.degree(u));
  return l;
}

IntMatrix laplacian_squared(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix sq(n);
  for (Vertex u = 0; u < n; ++u) {
    const auto du = static_cast<std::int64_t>(g.degree(u));
    sq(u, u) = du * du + du;
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      std::int64_t common = 0;
      const auto& a = g.neighbors(u);
      const auto& b = g.neighbors(v);
      auto i = a.begin();
      auto j = b.begin();
      while (i != a.end() && j != b.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++common;
          ++i;
          ++j;
        }
      }
      const auto dv = static_cast<std::int64_t>(g.degree(v));
      sq(u, v) = -(du + dv) * (g.adjacent(u, v) ? 1 : 0) + common;
    }
  }
  return sq;
}

}  // namespace mnhd
