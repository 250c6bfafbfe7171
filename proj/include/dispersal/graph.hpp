#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dispersal/errors.hpp"

namespace dispersal {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1. Adjacency lists are kept
/// sorted and symmetric; no self-loops, no duplicate edges. Connectivity is
/// NOT an invariant here — operations that need it check it themselves
/// (complements and distance-threshold graphs may be disconnected).
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::string name;

  bool has_edge(int u, int v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  std::size_t edge_count() const {
    std::size_t deg = 0;
    for (const auto& a : adj) deg += a.size();
    return deg / 2;
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& a : adj) d = std::max<int>(d, static_cast<int>(a.size()));
    return d;
  }

  /// Edge list in canonical order: u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
};

/// Builds a validated graph from an edge list. Endpoints may come in either
/// order; self-loops, duplicates and out-of-range ids are rejected.
inline Graph make_graph(int n, const std::vector<Edge>& edges,
                        std::string name = "") {
  if (n < 1) throw input_error("graph needs at least one vertex");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  g.name = std::move(name);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("edge endpoint out of range: (" + std::to_string(u) +
                        "," + std::to_string(v) + ") with n=" +
                        std::to_string(n));
    if (u == v)
      throw input_error("self-loop rejected at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (int u = 0; u < n; ++u) {
    auto& a = g.adj[u];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw input_error("duplicate edge at vertex " + std::to_string(u));
  }
  return g;
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

/// Complement graph: the edge set is exactly the non-edges of g.
inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n; ++u) {
    auto it = g.adj[u].begin();
    for (int v = u + 1; v < g.n; ++v) {
      while (it != g.adj[u].end() && *it < v) ++it;
      if (it == g.adj[u].end() || *it != v) edges.emplace_back(u, v);
    }
  }
  return make_graph(g.n, edges);
}

/// Cartesian product. Vertex (u, v) is encoded as u * h.n + v, so the
/// product of two paths lays out exactly like the row-major grid.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto g_edges = g.edges();
  const auto h_edges = h.edges();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.n) * h_edges.size() +
                static_cast<std::size_t>(h.n) * g_edges.size());
  auto id = [&](int u, int v) { return u * h.n + v; };
  for (int u = 0; u < g.n; ++u)
    for (const auto& [v, w] : h_edges) edges.emplace_back(id(u, v), id(u, w));
  for (const auto& [u, w] : g_edges)
    for (int v = 0; v < h.n; ++v) edges.emplace_back(id(u, v), id(w, v));
  std::string name;
  if (!g.name.empty() && !h.name.empty()) name = g.name + "x" + h.name;
  return make_graph(g.n * h.n, edges, std::move(name));
}

}  // namespace dispersal
