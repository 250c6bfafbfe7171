#pragma once

#include <bit>
#include <string>
#include <vector>

#include "dispersal/errors.hpp"
#include "dispersal/graph.hpp"

namespace dispersal {

/// Cycle C_n: vertex i adjacent to (i +- 1) mod n.
inline Graph cycle(int n) {
  if (n < 3) throw input_error("cycle needs n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, edges, "cycle-" + std::to_string(n));
}

/// Path P_m with m edges and m+1 vertices; vertex i is the i-th from the left.
inline Graph path(int m) {
  if (m < 1) throw input_error("path needs m >= 1 edges");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) edges.emplace_back(i, i + 1);
  return make_graph(m + 1, edges, "path-" + std::to_string(m));
}

/// m x n grid, row-major ids: (r, c) -> r*n + c with row 0 the TOP row.
inline Graph grid(int m, int n) {
  if (m < 2 || n < 2) throw input_error("grid needs m, n >= 2");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * (n - 1) +
                static_cast<std::size_t>(n) * (m - 1));
  auto id = [n](int r, int c) { return r * n + c; };
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < m) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return make_graph(m * n,
                    edges, "grid-" + std::to_string(m) + "x" + std::to_string(n));
}

/// n-dimensional hypercube on 2^n vertices. Bit b of the vertex id (b = 0
/// least significant) is coordinate b+1; vertices are adjacent when they
/// differ in exactly one bit.
inline Graph hypercube(int n) {
  if (n < 1) throw input_error("hypercube needs n >= 1");
  if (n > 24) throw input_error("hypercube dimension too large");
  const int size = 1 << n;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (size / 2));
  for (int v = 0; v < size; ++v)
    for (int b = 0; b < n; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return make_graph(size, edges, "hypercube-" + std::to_string(n));
}

/// Complete binary tree of the given depth, 2^(depth+1) - 1 vertices.
/// Vertices are heap-indexed: id 0 is the root, id v has children 2v+1 and
/// 2v+2, so the path string of a vertex is recoverable from its id alone.
inline Graph complete_binary_tree(int depth) {
  if (depth < 1) throw input_error("complete binary tree needs depth >= 1");
  if (depth > 24) throw input_error("tree depth too large");
  const int size = (1 << (depth + 1)) - 1;
  std::vector<Edge> edges;
  edges.reserve(size - 1);
  for (int v = 1; v < size; ++v) edges.emplace_back((v - 1) / 2, v);
  return make_graph(size, edges, "cbt-" + std::to_string(depth));
}

/// Clique of order 2k with a pendant path of k-1 edges at vertex 0 and
/// another at vertex 1. Radius k, yet consecutive labels cannot avoid the
/// clique, which pins the dispersion number at 1.
inline Graph clique_with_two_paths(int k) {
  if (k < 2) throw input_error("clique_with_two_paths needs k >= 2");
  const int clique = 2 * k;
  const int n = 4 * k - 2;
  std::vector<Edge> edges;
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
  // Path vertices clique..clique+k-2 hang off vertex 0, the rest off vertex 1.
  int next = clique;
  for (int anchor : {0, 1}) {
    int prev = anchor;
    for (int i = 0; i < k - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return make_graph(n, edges, "clique2paths-" + std::to_string(k));
}

}  // namespace dispersal
