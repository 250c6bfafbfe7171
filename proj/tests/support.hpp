#pragma once

// Test-only helpers: deterministic random graphs and exhaustive small-graph
// enumeration. Lives outside the library on purpose so oracle machinery
// stays independent of the code it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dispersal/graph.hpp"

namespace testsupport {

using dispersal::Edge;
using dispersal::Graph;

inline int pair_index(int n, int i, int j) {
  // index of pair (i, j), i < j, in lexicographic order
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::vector<Edge> mask_to_edges(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (mask >> idx & 1) edges.emplace_back(i, j);
  return edges;
}

inline Graph mask_to_graph(int n, std::uint64_t mask) {
  return dispersal::make_graph(n, mask_to_edges(n, mask));
}

inline bool mask_connected(int n, std::uint64_t mask) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = n;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (mask >> idx & 1) {
        int a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
  return components == 1;
}

/// All connected labelled graphs on n vertices, as edge masks.
inline std::vector<std::uint64_t> connected_masks(int n) {
  const int bits = n * (n - 1) / 2;
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask)
    if (mask_connected(n, mask)) out.push_back(mask);
  return out;
}

/// One representative per isomorphism class of connected graphs on n
/// vertices (canonical form = minimum edge mask over all vertex
/// relabellings).
inline std::vector<std::uint64_t> connected_masks_up_to_iso(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<std::uint64_t> reps;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    if (!mask_connected(n, mask)) continue;
    std::uint64_t canon = ~0ull;
    for (const auto& perm : perms) {
      std::uint64_t m = 0;
      for (int idx = 0; idx < bits; ++idx)
        if (mask >> idx & 1) {
          int a = perm[pairs[idx].first];
          int b = perm[pairs[idx].second];
          if (a > b) std::swap(a, b);
          m |= 1ull << pair_index(n, a, b);
        }
      canon = std::min(canon, m);
    }
    if (canon == mask) reps.push_back(mask);  // keep only the class minimum
  }
  return reps;
}

/// Connected Erdos-Renyi-style sample; resamples until connected, which is
/// deterministic for a given generator state.
inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    Graph g = dispersal::make_graph(n, edges);
    if (dispersal::is_connected(g)) return g;
  }
}

inline Graph random_connected_graph_with_connected_complement(std::mt19937& rng,
                                                              int n, double p) {
  for (;;) {
    Graph g = random_connected_graph(rng, n, p);
    if (dispersal::is_connected(dispersal::complement(g))) return g;
  }
}

/// Random spanning connected subgraph: repeatedly drop a random edge whose
/// removal keeps the graph connected.
inline Graph random_spanning_connected_subgraph(std::mt19937& rng,
                                                const Graph& g, int removals) {
  std::vector<Edge> edges = g.edges();
  for (int step = 0; step < removals && !edges.empty(); ++step) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    std::size_t at = pick(rng);
    std::vector<Edge> trial = edges;
    trial.erase(trial.begin() + static_cast<long>(at));
    Graph h = dispersal::make_graph(g.n, trial);
    if (dispersal::is_connected(h)) edges = std::move(trial);
  }
  return dispersal::make_graph(g.n, edges);
}

/// Random connected cubic graph on n vertices (n even, n >= 6): start from
/// the circular ladder and scramble with double-edge switches that keep the
/// graph simple, cubic and connected.
inline Graph random_cubic_connected(std::mt19937& rng, int n, int switches) {
  const int half = n / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < half; ++i) {
    edges.emplace_back(i, (i + 1) % half);
    edges.emplace_back(half + i, half + (i + 1) % half);
    edges.emplace_back(i, half + i);
  }
  Graph g = dispersal::make_graph(n, edges);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (int step = 0; step < switches; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (a == c || a == d || b == c || b == d) continue;
    if (g.has_edge(a, c) || g.has_edge(b, d)) continue;
    std::vector<Edge> trial = edges;
    trial[i] = {a, c};
    trial[j] = {b, d};
    Graph h = dispersal::make_graph(n, trial);
    if (!dispersal::is_connected(h)) continue;
    edges = std::move(trial);
    g = std::move(h);
  }
  return g;
}

/// All labelled 3-regular graphs on n vertices (n even), by backtracking
/// over the pair list. Used to stress the degree-based bound.
inline std::vector<Graph> all_cubic_graphs(int n) {
  std::vector<Graph> out;
  std::vector<int> deg(n, 0);
  std::vector<Edge> chosen;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  auto rec = [&](auto&& self, std::size_t at) -> void {
    bool done = true;
    for (int v = 0; v < n; ++v)
      if (deg[v] != 3) {
        done = false;
        break;
      }
    if (done) {
      out.push_back(dispersal::make_graph(n, chosen));
      return;
    }
    if (at == pairs.size()) return;
    // feasibility: remaining pairs must be able to finish every vertex
    for (int v = 0; v < n; ++v)
      if (deg[v] > 3) return;
    auto [i, j] = pairs[at];
    if (deg[i] < 3 && deg[j] < 3) {
      ++deg[i];
      ++deg[j];
      chosen.push_back(pairs[at]);
      self(self, at + 1);
      chosen.pop_back();
      --deg[i];
      --deg[j];
    }
    // skipping pair (i, j): only viable if vertex i can still reach degree 3
    int remaining_i = 0;
    for (std::size_t k = at + 1; k < pairs.size(); ++k)
      if (pairs[k].first == i || pairs[k].second == i) ++remaining_i;
    if (deg[i] + remaining_i >= 3) self(self, at + 1);
  };
  rec(rec, 0);
  return out;
}

}  // namespace testsupport
