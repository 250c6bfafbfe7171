#pragma once

#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "dispersal/distance.hpp"
#include "dispersal/errors.hpp"
#include "dispersal/graph.hpp"
#include "dispersal/labelling.hpp"
#include "dispersal/parallel.hpp"

namespace dispersal {

struct SearchOptions {
  bool prune = true;
  std::optional<std::chrono::milliseconds> budget;
  int threads = 0;  // 0 = worker_count()
};

/// Exact dispersion number (linear or circular) with a witness labelling
/// achieving it and the number of search-tree nodes expanded.
struct SolveResult {
  int value = 0;
  Labelling witness;
  std::uint64_t explored = 0;
};

namespace detail {

using Clock = std::chrono::steady_clock;

/// Depth-first Hamiltonian path/cycle search over one start configuration.
/// Neighbor order is ascending vertex id, so results are reproducible.
/// Pruning (optional) rejects states whose unvisited region is unreachable
/// from the active endpoint or whose degree counts rule out a completion;
/// both tests only ever discard states with no completion, so pruning never
/// changes the first witness found.
class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, const SearchOptions& opt,
                 std::optional<Clock::time_point> deadline,
                 const std::atomic<int>* winner = nullptr, int rank = 0)
      : g_(g),
        n_(g.n),
        prune_(opt.prune),
        deadline_(deadline),
        winner_(winner),
        rank_(rank),
        visited_(g.n, 0),
        mark_(g.n, 0) {
    path_.reserve(g.n);
  }

  std::optional<std::vector<int>> path_from(int start) {
    cycle_ = false;
    reset(start);
    if (dfs(start, n_ - 1)) return path_;
    return std::nullopt;
  }

  /// Cycle search always roots at vertex 0; the caller enumerates the
  /// second vertex to parallelize without changing the canonical answer.
  std::optional<std::vector<int>> cycle_via(int second) {
    cycle_ = true;
    reset(0);
    visited_[second] = 1;
    path_.push_back(second);
    if (dfs(second, n_ - 2)) return path_;
    return std::nullopt;
  }

  std::uint64_t explored() const { return explored_; }
  bool cancelled() const { return cancelled_; }

 private:
  void reset(int start) {
    std::fill(visited_.begin(), visited_.end(), 0);
    path_.clear();
    visited_[start] = 1;
    path_.push_back(start);
    cancelled_ = false;
  }

  bool interrupted() {
    if ((explored_ & 0x3ff) != 0) return false;
    if (winner_ && winner_->load(std::memory_order_relaxed) < rank_) {
      cancelled_ = true;
      return true;
    }
    if (deadline_ && Clock::now() > *deadline_) throw budget_exceeded();
    return false;
  }

  bool dfs(int tail, int remaining) {
    ++explored_;
    if (interrupted()) return false;
    if (remaining == 0)
      return cycle_ ? g_.has_edge(tail, path_.front()) : true;
    if (prune_ && !feasible(tail, remaining)) return false;
    for (int nb : g_.adj[tail]) {
      if (visited_[nb]) continue;
      visited_[nb] = 1;
      path_.push_back(nb);
      if (dfs(nb, remaining - 1)) return true;
      path_.pop_back();
      visited_[nb] = 0;
      if (cancelled_) return false;
    }
    return false;
  }

  /// Necessary conditions for a completion from `tail` covering the
  /// `remaining` unvisited vertices (and returning to vertex 0 in cycle
  /// mode).
  bool feasible(int tail, int remaining) {
    // Every unvisited vertex must be reachable from tail through unvisited
    // vertices only.
    ++token_;
    mark_[tail] = token_;
    stack_.clear();
    stack_.push_back(tail);
    int seen = 0;
    while (!stack_.empty()) {
      int v = stack_.back();
      stack_.pop_back();
      for (int w : g_.adj[v]) {
        if (visited_[w] || mark_[w] == token_) continue;
        mark_[w] = token_;
        ++seen;
        stack_.push_back(w);
      }
    }
    if (seen != remaining) return false;

    if (!cycle_) {
      // At most one unvisited vertex may have a single available neighbor
      // (it would have to be the final endpoint).
      int pendant = 0;
      for (int u = 0; u < n_; ++u) {
        if (visited_[u]) continue;
        int avail = 0;
        for (int w : g_.adj[u]) {
          if (!visited_[w] || w == tail) {
            if (++avail > 1) break;
          }
        }
        if (avail == 0) return false;
        if (avail == 1 && ++pendant > 1) return false;
      }
    } else {
      // Remaining route is tail -> unvisited... -> 0: every unvisited
      // vertex is interior and needs two available neighbors, and vertex 0
      // needs an unvisited one for the closing hop.
      const int home = path_.front();
      bool home_reachable = false;
      for (int w : g_.adj[home])
        if (!visited_[w]) {
          home_reachable = true;
          break;
        }
      if (!home_reachable) return false;
      for (int u = 0; u < n_; ++u) {
        if (visited_[u]) continue;
        int avail = 0;
        for (int w : g_.adj[u]) {
          if (!visited_[w] || w == tail || w == home) {
            if (++avail > 1) break;
          }
        }
        if (avail <= 1) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int n_;
  bool prune_;
  bool cycle_ = false;
  std::optional<Clock::time_point> deadline_;
  const std::atomic<int>* winner_;
  int rank_;
  std::vector<char> visited_;
  std::vector<int> mark_;
  std::vector<int> stack_;
  std::vector<int> path_;
  std::uint64_t explored_ = 0;
  int token_ = 0;
  bool cancelled_ = false;
};

/// Runs one deterministic search per branch (in rank order when
/// sequential; racing with min-rank canonicalization when parallel) and
/// returns the result the sequential order would produce.
template <typename RunBranch>
std::optional<std::vector<int>> branch_search(
    int branches, const SearchOptions& opt,
    std::optional<Clock::time_point> deadline, std::uint64_t* explored,
    RunBranch&& run_branch) {
  int workers = opt.threads > 0 ? opt.threads : worker_count();
  workers = std::min(workers, branches);
  std::uint64_t total = 0;

  if (workers <= 1) {
    for (int b = 0; b < branches; ++b) {
      HamiltonSearch search(run_branch.graph(), opt, deadline);
      auto result = run_branch(search, b);
      total += search.explored();
      if (result) {
        if (explored) *explored += total;
        return result;
      }
    }
    if (explored) *explored += total;
    return std::nullopt;
  }

  std::atomic<int> winner{INT_MAX};
  std::atomic<int> next{0};
  std::atomic<std::uint64_t> explored_sum{0};
  std::vector<std::optional<std::vector<int>>> found(branches);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto body = [&] {
    try {
      for (;;) {
        int b = next.fetch_add(1, std::memory_order_relaxed);
        if (b >= branches) return;
        if (winner.load(std::memory_order_relaxed) < b) continue;
        HamiltonSearch search(run_branch.graph(), opt, deadline, &winner, b);
        auto result = run_branch(search, b);
        explored_sum.fetch_add(search.explored(), std::memory_order_relaxed);
        if (result && !search.cancelled()) {
          found[b] = std::move(result);
          int cur = winner.load();
          while (b < cur && !winner.compare_exchange_weak(cur, b)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      winner.store(-1);  // cancel everyone
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  if (explored) *explored += explored_sum.load();
  int w = winner.load();
  if (w >= 0 && w < branches) return std::move(found[w]);
  return std::nullopt;
}

}  // namespace detail

namespace detail {

inline std::optional<std::vector<int>> hamiltonian_path_impl(
    const Graph& g, const SearchOptions& opt,
    std::optional<Clock::time_point> deadline, std::uint64_t* explored) {
  if (g.n < 1) throw input_error("hamiltonian path needs n >= 1");
  if (g.n == 1) return std::vector<int>{0};
  if (!is_connected(g)) return std::nullopt;

  std::vector<int> starts;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) <= 1) starts.push_back(v);
  if (static_cast<int>(starts.size()) > 2) return std::nullopt;
  if (starts.empty()) {
    starts.resize(g.n);
    std::iota(starts.begin(), starts.end(), 0);
  }

  struct Runner {
    const Graph& g;
    const std::vector<int>& starts;
    const Graph& graph() const { return g; }
    std::optional<std::vector<int>> operator()(HamiltonSearch& s, int b) const {
      return s.path_from(starts[b]);
    }
  };
  return branch_search(static_cast<int>(starts.size()), opt, deadline,
                       explored, Runner{g, starts});
}

inline std::optional<std::vector<int>> hamiltonian_cycle_impl(
    const Graph& g, const SearchOptions& opt,
    std::optional<Clock::time_point> deadline, std::uint64_t* explored) {
  if (g.n < 3) throw input_error("hamiltonian cycle needs n >= 3");
  if (!is_connected(g)) return std::nullopt;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) <= 1) return std::nullopt;

  struct Runner {
    const Graph& g;
    const Graph& graph() const { return g; }
    std::optional<std::vector<int>> operator()(HamiltonSearch& s, int b) const {
      return s.cycle_via(g.adj[0][b]);
    }
  };
  return branch_search(g.degree(0), opt, deadline, explored, Runner{g});
}

inline std::optional<Clock::time_point> deadline_from(
    const SearchOptions& opt) {
  if (!opt.budget) return std::nullopt;
  return Clock::now() + *opt.budget;
}

}  // namespace detail

/// A vertex sequence visiting every vertex exactly once with consecutive
/// pairs adjacent, or nothing when no such path exists. Deterministic:
/// candidate start vertices ascend (restricted to the degree-1 vertices
/// when any exist, since those must be endpoints), and the DFS extends the
/// tail through neighbors in ascending id.
inline std::optional<std::vector<int>> hamiltonian_path(
    const Graph& g, const SearchOptions& opt = {},
    std::uint64_t* explored = nullptr) {
  return detail::hamiltonian_path_impl(g, opt, detail::deadline_from(opt),
                                       explored);
}

/// A closed tour visiting every vertex exactly once, or nothing. The tour
/// is rooted at vertex 0 with the second vertex enumerated in ascending
/// order, so the answer is deterministic.
inline std::optional<std::vector<int>> hamiltonian_cycle(
    const Graph& g, const SearchOptions& opt = {},
    std::uint64_t* explored = nullptr) {
  return detail::hamiltonian_cycle_impl(g, opt, detail::deadline_from(opt),
                                        explored);
}

namespace detail {

inline SolveResult exact_solve(const Graph& g, bool circular,
                               const SearchOptions& opt) {
  if (g.n < (circular ? 3 : 2))
    throw input_error(circular ? "circular solve needs n >= 3"
                               : "solve needs n >= 2");
  DistanceMatrix dm = distance_matrix(g);  // rejects disconnected inputs
  EccentricityReport er = eccentricity_report(dm);

  int upper = er.radius;
  if (circular) {
    if (!er.uniquely_eccentric_central.empty()) upper = er.radius - 1;
  } else {
    if (er.uniquely_eccentric_central.size() >= 3) upper = er.radius - 1;
  }
  upper = std::max(upper, 1);

  // one budget for the whole solve, not per level
  const auto deadline = deadline_from(opt);

  SolveResult res;
  for (int k = upper; k >= 1; --k) {
    Graph hk = h_k_graph(dm, k);
    std::optional<std::vector<int>> seq =
        circular ? hamiltonian_cycle_impl(hk, opt, deadline, &res.explored)
                 : hamiltonian_path_impl(hk, opt, deadline, &res.explored);
    if (!seq) continue;
    res.value = k;
    res.witness = Labelling{std::move(*seq)};
    DispersionResult d = dispersion(dm, res.witness);
    internal_check((circular ? d.circular_k : d.linear_k) == k,
                   "solver witness does not achieve the reported value");
    internal_check(k <= er.radius, "solver value exceeds the radius bound");
    return res;
  }
  // k = 1 always succeeds on a connected graph: the threshold graph is
  // complete.
  throw internal_error("exhausted all dispersion levels without a witness");
}

}  // namespace detail

/// Largest k admitting a k-dispersed labelling, found by descending k from
/// the cheap upper bound and searching the distance-threshold graph for a
/// Hamiltonian path. Descending is the fast direction: the threshold graph
/// thins out as k grows and infeasibility is detected quickly.
inline SolveResult exact_dl(const Graph& g, const SearchOptions& opt = {}) {
  return detail::exact_solve(g, false, opt);
}

/// Circular variant: largest k whose threshold graph has a Hamiltonian
/// cycle. Undefined for n = 2 (a two-vertex cycle is not simple).
inline SolveResult exact_dlo(const Graph& g, const SearchOptions& opt = {}) {
  return detail::exact_solve(g, true, opt);
}

/// Independent oracle: evaluates every vertex permutation. Capped at
/// n <= 10 to keep the factorial in check. The witness is the
/// lexicographically first permutation attaining the optimum.
inline SolveResult brute_force_dl(const Graph& g, bool circular = false) {
  const int min_n = circular ? 3 : 2;
  if (g.n < min_n)
    throw input_error("brute force needs n >= " + std::to_string(min_n));
  if (g.n > 10)
    throw input_error("brute force refuses n > 10 (factorial blow-up)");
  DistanceMatrix dm = distance_matrix(g);

  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  SolveResult res;
  res.value = 0;
  do {
    ++res.explored;
    int gap = INT_MAX;
    for (int i = 1; i < g.n; ++i) {
      gap = std::min(gap, dm.at(perm[i - 1], perm[i]));
      if (gap <= res.value) break;
    }
    if (circular && gap > res.value)
      gap = std::min(gap, dm.at(perm[g.n - 1], perm[0]));
    if (gap > res.value) {
      res.value = gap;
      res.witness = Labelling{perm};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

}  // namespace dispersal
