#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dispersal/errors.hpp"
#include "dispersal/graph.hpp"
#include "dispersal/parallel.hpp"

namespace dispersal {

namespace detail {

/// Flat adjacency (CSR) for cache-friendly BFS sweeps.
struct Csr {
  std::vector<int> offset;
  std::vector<int> nbr;

  explicit Csr(const Graph& g) : offset(g.n + 1, 0) {
    for (int v = 0; v < g.n; ++v)
      offset[v + 1] = offset[v] + static_cast<int>(g.adj[v].size());
    nbr.resize(offset[g.n]);
    for (int v = 0, k = 0; v < g.n; ++v)
      for (int w : g.adj[v]) nbr[k++] = w;
  }
};

/// BFS from source into dist (preallocated, n entries). unreachable = n.
/// Returns the eccentricity (max finite distance reached).
inline int bfs_fill(const Csr& csr, int n, int source, int* dist,
                    std::vector<int>& queue) {
  std::fill(dist, dist + n, n);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  int ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    int dv = dist[v];
    for (int k = csr.offset[v]; k < csr.offset[v + 1]; ++k) {
      int w = csr.nbr[k];
      if (dist[w] == n) {
        dist[w] = dv + 1;
        ecc = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return ecc;
}

}  // namespace detail

/// Hop distances from source; unreachable vertices get the sentinel g.n,
/// which is strictly larger than any finite distance.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.n)
    throw input_error("bfs source out of range: " + std::to_string(source));
  detail::Csr csr(g);
  std::vector<int> dist(g.n);
  std::vector<int> queue;
  queue.reserve(g.n);
  detail::bfs_fill(csr, g.n, source, dist.data(), queue);
  return dist;
}

/// All-pairs shortest-path matrix of a connected graph, with per-row
/// eccentricities cached. Symmetric, zero diagonal, entry 1 iff edge.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> dist;  // row-major n*n
  std::vector<int> ecc;   // eccentricity per vertex

  int at(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
  const int* row(int u) const { return dist.data() + static_cast<std::size_t>(u) * n; }
};

inline DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix dm;
  dm.n = g.n;
  dm.dist.resize(static_cast<std::size_t>(g.n) * g.n);
  dm.ecc.resize(g.n);
  detail::Csr csr(g);
  parallel_for(0, g.n, [&](int source) {
    std::vector<int> queue;
    queue.reserve(g.n);
    dm.ecc[source] = detail::bfs_fill(csr, g.n, source,
                                      dm.dist.data() +
                                          static_cast<std::size_t>(source) * g.n,
                                      queue);
  });
  // Disconnection shows up in row 0 (undirected graph).
  if (g.n > 1) {
    const int* row0 = dm.row(0);
    for (int v = 0; v < g.n; ++v)
      if (row0[v] >= g.n) throw connectivity_error(0, v);
  }
  return dm;
}

/// Radius, central vertices, and the uniquely-eccentric ones among them.
/// A vertex is uniquely eccentric when exactly one vertex attains its
/// eccentricity.
struct EccentricityReport {
  std::vector<int> eccentricity;
  int radius = 0;
  std::vector<int> central;
  std::vector<int> uniquely_eccentric_central;
};

inline EccentricityReport eccentricity_report(const DistanceMatrix& dm) {
  EccentricityReport rep;
  rep.eccentricity = dm.ecc;
  rep.radius = *std::min_element(dm.ecc.begin(), dm.ecc.end());
  for (int v = 0; v < dm.n; ++v) {
    if (dm.ecc[v] != rep.radius) continue;
    rep.central.push_back(v);
    int hits = 0;
    const int* row = dm.row(v);
    for (int u = 0; u < dm.n; ++u)
      if (row[u] == dm.ecc[v]) ++hits;
    if (hits == 1) rep.uniquely_eccentric_central.push_back(v);
  }
  return rep;
}

/// Distance-k graph: edge {u,v} iff d(u,v) = k exactly. k beyond the
/// diameter yields an empty edge set.
inline Graph distance_k_graph(const DistanceMatrix& dm, int k) {
  if (k < 1) throw input_error("distance graph needs k >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < dm.n; ++u) {
    const int* row = dm.row(u);
    for (int v = u + 1; v < dm.n; ++v)
      if (row[v] == k) edges.emplace_back(u, v);
  }
  return make_graph(dm.n, edges);
}

/// Distance-threshold graph: edge {u,v} iff d(u,v) >= k. k = 1 gives the
/// complete graph.
inline Graph h_k_graph(const DistanceMatrix& dm, int k) {
  if (k < 1) throw input_error("threshold graph needs k >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < dm.n; ++u) {
    const int* row = dm.row(u);
    for (int v = u + 1; v < dm.n; ++v)
      if (row[v] >= k) edges.emplace_back(u, v);
  }
  return make_graph(dm.n, edges);
}

}  // namespace dispersal
