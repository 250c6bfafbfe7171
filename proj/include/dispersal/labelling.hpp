#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <utility>
#include <vector>

#include "dispersal/distance.hpp"
#include "dispersal/errors.hpp"
#include "dispersal/graph.hpp"
#include "dispersal/parallel.hpp"

namespace dispersal {

/// A bijection from labels 1..n onto the vertices: order[i-1] is the vertex
/// that receives label i.
struct Labelling {
  std::vector<int> order;

  int n() const { return static_cast<int>(order.size()); }
  int vertex_of_label(int label) const { return order[label - 1]; }
};

inline void validate_labelling(const Labelling& lab, int n) {
  if (lab.n() != n)
    throw input_error("labelling has " + std::to_string(lab.n()) +
                      " entries, expected " + std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int v : lab.order) {
    if (v < 0 || v >= n || seen[v])
      throw input_error("labelling order is not a permutation of 0.." +
                        std::to_string(n - 1));
    seen[v] = 1;
  }
}

/// Minimum distance over consecutive label pairs. linear_k scans pairs
/// (1,2)..(n-1,n); circular_k additionally closes the loop with (n,1).
/// argmin pairs are reported as label pairs, first occurrence wins.
struct DispersionResult {
  int linear_k = 0;
  std::pair<int, int> linear_argmin{0, 0};
  int circular_k = 0;
  std::pair<int, int> circular_argmin{0, 0};
};

inline DispersionResult dispersion(const DistanceMatrix& dm,
                                   const Labelling& lab) {
  if (dm.n < 2) throw input_error("dispersion needs n >= 2");
  validate_labelling(lab, dm.n);
  DispersionResult res;
  res.linear_k = dm.n + 1;
  for (int i = 1; i < dm.n; ++i) {
    int d = dm.at(lab.order[i - 1], lab.order[i]);
    if (d < res.linear_k) {
      res.linear_k = d;
      res.linear_argmin = {i, i + 1};
    }
  }
  res.circular_k = res.linear_k;
  res.circular_argmin = res.linear_argmin;
  int wrap = dm.at(lab.order[dm.n - 1], lab.order[0]);
  if (wrap < res.circular_k) {
    res.circular_k = wrap;
    res.circular_argmin = {dm.n, 1};
  }
  return res;
}

/// Same measurement without materializing the full distance matrix: one BFS
/// per chosen source, each source resolving the (up to two) consecutive
/// pairs it participates in. Sources at odd positions cover the whole chain,
/// so about n/2 searches suffice. Safe for graphs far beyond matrix scale.
inline DispersionResult dispersion(const Graph& g, const Labelling& lab) {
  if (g.n < 2) throw input_error("dispersion needs n >= 2");
  validate_labelling(lab, g.n);
  {
    std::vector<int> from0 = bfs_distances(g, 0);
    for (int v = 0; v < g.n; ++v)
      if (from0[v] >= g.n) throw connectivity_error(0, v);
  }

  const int n = g.n;
  // gap[i] = d(order[i], order[i+1]) for i < n-1; gap[n-1] = wrap distance.
  std::vector<int> gap(n, -1);
  struct Query {
    int source;
    int targets[2];
    int slots[2];
    int count;
  };
  std::vector<Query> plan;
  for (int p = 1; p < n; p += 2) {
    Query q{lab.order[p], {0, 0}, {0, 0}, 0};
    q.targets[q.count] = lab.order[p - 1];
    q.slots[q.count++] = p - 1;
    if (p + 1 < n) {
      q.targets[q.count] = lab.order[p + 1];
      q.slots[q.count++] = p;
    } else {
      // p is the last position: its forward pair is the wrap-around.
      q.targets[q.count] = lab.order[0];
      q.slots[q.count++] = n - 1;
    }
    plan.push_back(q);
  }
  if (n % 2 == 1) {
    // Odd n leaves the wrap pair uncovered.
    Query q{lab.order[n - 1], {lab.order[0], 0}, {n - 1, 0}, 1};
    plan.push_back(q);
  }

  detail::Csr csr(g);
  const int workers = std::min(worker_count(), static_cast<int>(plan.size()));
  std::atomic<int> next{0};
  auto run = [&] {
    std::vector<int> dist(n);
    std::vector<int> queue;
    queue.reserve(n);
    for (;;) {
      int qi = next.fetch_add(1, std::memory_order_relaxed);
      if (qi >= static_cast<int>(plan.size())) return;
      const Query& q = plan[qi];
      // BFS with early exit once every target of this source is settled.
      std::fill(dist.begin(), dist.end(), n);
      queue.clear();
      queue.push_back(q.source);
      dist[q.source] = 0;
      int pending = q.count;
      for (std::size_t head = 0; head < queue.size() && pending > 0; ++head) {
        int v = queue[head];
        for (int k = csr.offset[v]; k < csr.offset[v + 1]; ++k) {
          int w = csr.nbr[k];
          if (dist[w] == n) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
        }
        for (int t = 0; t < q.count; ++t)
          if (q.targets[t] == v) --pending;
      }
      for (int t = 0; t < q.count; ++t) gap[q.slots[t]] = dist[q.targets[t]];
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();

  DispersionResult res;
  res.linear_k = n + 1;
  for (int i = 0; i + 1 < n; ++i)
    if (gap[i] < res.linear_k) {
      res.linear_k = gap[i];
      res.linear_argmin = {i + 1, i + 2};
    }
  res.circular_k = res.linear_k;
  res.circular_argmin = res.linear_argmin;
  if (gap[n - 1] < res.circular_k) {
    res.circular_k = gap[n - 1];
    res.circular_argmin = {n, 1};
  }
  return res;
}

// ---------------------------------------------------------------------------
// Constructive labellers. Each one realizes the optimal dispersion for its
// family under the vertex encodings fixed in families.hpp.
// ---------------------------------------------------------------------------

/// Optimal labelling of C_n. Odd n steps by (n-1)/2 around the cycle;
/// n divisible by 4 steps by n/2 - 1; n = 2 mod 4 walks a zigzag over the
/// two residue classes x_i = i(q-1), y_i = x_i + q (q = n/2), which keeps
/// every consecutive pair at cycle distance q-1 or q.
inline Labelling label_cycle(int n) {
  if (n < 3) throw input_error("cycle needs n >= 3");
  Labelling lab;
  lab.order.resize(n);
  if (n % 2 == 1) {
    const int step = (n - 1) / 2;
    for (int i = 0; i < n; ++i)
      lab.order[i] = static_cast<int>((static_cast<long long>(i) * step) % n);
  } else if (n % 4 == 0) {
    const int step = n / 2 - 1;
    for (int i = 0; i < n; ++i)
      lab.order[i] = static_cast<int>((static_cast<long long>(i) * step) % n);
  } else {
    const int q = n / 2;  // odd
    int pos = 0;
    for (int i = 0; i < q; ++i) {
      int x = static_cast<int>((static_cast<long long>(i) * (q - 1)) % n);
      int y = (x + q) % n;
      if (i % 2 == 0) {
        lab.order[pos++] = x;
        lab.order[pos++] = y;
      } else {
        lab.order[pos++] = y;
        lab.order[pos++] = x;
      }
    }
  }
  return lab;
}

/// Optimal labelling of P_m, listed left-to-right as 2 4 .. m 1 3 .. m+1
/// for even m and 2 4 .. m+1 1 3 .. m for odd m.
inline Labelling label_path(int m) {
  if (m < 1) throw input_error("path needs m >= 1");
  const int n = m + 1;
  const int evens = m % 2 == 0 ? m / 2 : (m + 1) / 2;
  Labelling lab;
  lab.order.resize(n);
  for (int pos = 0; pos < n; ++pos) {
    int label = pos < evens ? 2 * (pos + 1) : 2 * (pos - evens) + 1;
    lab.order[label - 1] = pos;
  }
  return lab;
}

/// Circularly optimal labelling of P_m. Even m reuses label_path, whose end
/// labels are already m/2 apart. Odd m labels the right m vertices as
/// P_{m-1} and gives the extra left vertex the final label m+1.
inline Labelling label_path_circular(int m) {
  if (m < 2) throw input_error("circular path labelling needs m >= 2");
  if (m % 2 == 0) return label_path(m);
  Labelling base = label_path(m - 1);
  Labelling lab;
  lab.order.resize(m + 1);
  for (int label = 1; label <= m; ++label)
    lab.order[label - 1] = base.order[label - 1] + 1;
  lab.order[m] = 0;
  return lab;
}

namespace detail {

/// Rows A (top) and B (bottom) of the optimal two-row grid labelling,
/// as label-per-column vectors using labels 1..2n.
inline std::pair<std::vector<int>, std::vector<int>> two_row_labels(int n) {
  std::vector<int> a(n), b(n);
  for (int c = 0; c < n; ++c) a[c] = 2 * (c + 1);
  int c = 0;
  if (n % 2 == 1) {
    for (int lab = n + 2; lab <= 2 * n - 1; lab += 2) b[c++] = lab;
    for (int lab = 1; lab <= n; lab += 2) b[c++] = lab;
  } else {
    for (int lab = n + 3; lab <= 2 * n - 1; lab += 2) b[c++] = lab;
    for (int lab = 1; lab <= n + 1; lab += 2) b[c++] = lab;
  }
  return {std::move(a), std::move(b)};
}

/// Rows of the optimal three-row grid labelling for odd n >= 3 (labels
/// 1..3n). Label 1 sits in the bottom-left corner; each next label moves
/// (n-1)/2 columns right and one row up, wrapping; when 3 divides n the
/// chain only places 1..n and labels j+n go immediately right of label j.
inline std::array<std::vector<int>, 3> three_row_labels(int n) {
  std::array<std::vector<int>, 3> rows;
  for (auto& r : rows) r.assign(n, 0);
  const int half = (n - 1) / 2;
  int r = 2, c = 0;
  // pos[(label-1) % n] tracks where the latest label of that residue went
  std::vector<std::pair<int, int>> pos(n);
  const int chain = n % 3 != 0 ? 3 * n : n;
  for (int label = 1; label <= chain; ++label) {
    rows[r][c] = label;
    if (label <= n) pos[label - 1] = {r, c};
    c = (c + half) % n;
    r = (r + 2) % 3;
  }
  if (n % 3 == 0) {
    for (int label = n + 1; label <= 3 * n; ++label) {
      auto& [pr, pc] = pos[(label - 1) % n];
      pc = (pc + 1) % n;
      rows[pr][pc] = label;
    }
  }
  return rows;
}

inline Labelling labelling_from_rows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows[0].size());
  Labelling lab;
  lab.order.resize(static_cast<std::size_t>(m) * n);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) lab.order[rows[r][c] - 1] = r * n + c;
  return lab;
}

inline std::vector<int> shifted(const std::vector<int>& row, int delta) {
  std::vector<int> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i] + delta;
  return out;
}

}  // namespace detail

/// Optimal labelling of the m x n grid. Even m interleaves m/2 shifted
/// copies of the two-row labelling (rows A, A+2n, .., B, B+2n, ..). Odd m
/// and odd n use the three-row labelling directly (m = 3) or sandwich t =
/// (m-3)/2 shifted two-row copies between the label-reversed three-row rows
/// (E, A+3n, .., A+(2t+1)n, D, B+3n, .., B+(2t+1)n, C). Odd m with even n
/// transposes first.
inline Labelling label_grid(int m, int n) {
  if (m < 2 || n < 2) throw input_error("grid needs m, n >= 2");
  if (m % 2 == 1 && n % 2 == 0) {
    Labelling t = label_grid(n, m);
    Labelling lab;
    lab.order.resize(t.order.size());
    for (std::size_t i = 0; i < t.order.size(); ++i) {
      int v = t.order[i];
      lab.order[i] = (v % m) * n + v / m;
    }
    return lab;
  }

  std::vector<std::vector<int>> rows(m);
  if (m % 2 == 0) {
    auto [a, b] = detail::two_row_labels(n);
    for (int k = 0; k < m / 2; ++k) {
      rows[k] = detail::shifted(a, 2 * k * n);
      rows[m / 2 + k] = detail::shifted(b, 2 * k * n);
    }
  } else if (m == 3) {
    auto three = detail::three_row_labels(n);
    rows = {three[0], three[1], three[2]};
  } else {
    const int t = (m - 3) / 2;
    auto [a, b] = detail::two_row_labels(n);
    auto three = detail::three_row_labels(n);
    auto flip = [n](const std::vector<int>& row) {
      std::vector<int> out(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) out[i] = 3 * n + 1 - row[i];
      return out;
    };
    rows[0] = flip(three[2]);
    for (int i = 0; i < t; ++i) rows[1 + i] = detail::shifted(a, (3 + 2 * i) * n);
    rows[t + 1] = flip(three[1]);
    for (int i = 0; i < t; ++i)
      rows[t + 2 + i] = detail::shifted(b, (3 + 2 * i) * n);
    rows[2 * t + 2] = flip(three[0]);
  }
  return detail::labelling_from_rows(rows);
}

/// Optimal labelling of the n-cube via the recursive vertex permutation:
/// the base order on 4 vertices is 00, 10, 01, 11, and each round doubles
/// the sequence, repeating it with a new top bit whose value alternates with
/// the position's parity and flips pattern at the half/full boundaries.
/// Consecutive vertices end up at Hamming distance >= n-1.
inline Labelling label_hypercube(int n) {
  if (n < 2) throw input_error("hypercube labelling needs n >= 2");
  if (n > 24) throw input_error("hypercube dimension too large");
  std::vector<int> pi = {0, 1, 2, 3};
  for (int dim = 2; dim < n; ++dim) {
    const int full = 1 << dim;
    const int half = full / 2;
    const int bit = 1 << dim;
    std::vector<int> next(full * 2);
    for (int j = 1; j <= 2 * full; ++j) {
      bool odd = j % 2 == 1;
      bool append_one;
      int src;
      if (j <= half) {
        src = j;
        append_one = !odd;
      } else if (j <= full) {
        src = j;
        append_one = odd;
      } else if (j <= full + half) {
        src = j - full;
        append_one = odd;
      } else {
        src = j - full;
        append_one = !odd;
      }
      next[j - 1] = pi[src - 1] | (append_one ? bit : 0);
    }
    pi = std::move(next);
  }
  return Labelling{std::move(pi)};
}

/// Optimal labelling of the complete binary tree of the given depth. The
/// root gets 1; left-subtree vertices get even labels (small ones at the
/// leaves), right-subtree vertices get odd labels (large ones at the
/// leaves), so one side of every consecutive label pair sits at a leaf and
/// the connecting path crosses the root.
inline Labelling label_complete_binary_tree(int depth) {
  if (depth < 1) throw input_error("tree labelling needs depth >= 1");
  if (depth > 24) throw input_error("tree depth too large");
  const int n = (1 << (depth + 1)) - 1;
  Labelling lab;
  lab.order.resize(n);
  for (int v = 0; v < n; ++v) {
    const unsigned heap = static_cast<unsigned>(v) + 1;
    const int level = std::bit_width(heap) - 1;
    const int rank = static_cast<int>(heap) - (1 << level);  // N(x)
    int label;
    if (level == 0) {
      label = 1;  // root
    } else if (rank >= (1 << (level - 1))) {
      label = 2 * rank + 1;  // right subtree
    } else if (level == depth) {
      label = 2 * rank + 2;  // left-subtree leaf
    } else {
      label = 2 * rank + (1 << depth) + (1 << level);  // left-subtree inner
    }
    lab.order[label - 1] = v;
  }
  return lab;
}

/// Product labelling: label i+1 of the product graph goes to the vertex
/// (g_lab(i mod m), h_lab(i mod n)) under the cartesian_product encoding.
/// Requires coprime factor sizes so the combined map stays a bijection; the
/// circular dispersion of the result is at least the sum of the factors'.
inline Labelling label_product(const Labelling& g_lab, const Labelling& h_lab) {
  const int m = g_lab.n();
  const int n = h_lab.n();
  if (m < 1 || n < 1) throw input_error("product factors must be non-empty");
  if (std::gcd(m, n) != 1)
    throw input_error("product labelling needs coprime factor sizes, got " +
                      std::to_string(m) + " and " + std::to_string(n));
  Labelling lab;
  lab.order.resize(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m * n; ++i)
    lab.order[i] = g_lab.order[i % m] * n + h_lab.order[i % n];
  return lab;
}

}  // namespace dispersal
