#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "dispersal/distance.hpp"
#include "dispersal/errors.hpp"
#include "dispersal/graph.hpp"

namespace dispersal {

/// Radius upper bound: no labelling can push a central vertex's neighbours
/// in the label order beyond its eccentricity.
inline int radius_upper_bound(const EccentricityReport& er) {
  return er.radius;
}

/// With three or more uniquely eccentric central vertices, one of them gets
/// an interior label and cannot keep both label-neighbours at full radius:
/// upper bound r - 1. Absent otherwise.
inline std::optional<int> uniquely_eccentric_upper_bound(
    const EccentricityReport& er) {
  if (er.uniquely_eccentric_central.size() >= 3) return er.radius - 1;
  return std::nullopt;
}

/// Circular variant: a single uniquely eccentric central vertex already
/// forces the circular dispersion below the radius (every label has two
/// neighbours in the circular order).
inline std::optional<int> circular_ue_constraint(const EccentricityReport& er) {
  if (!er.uniquely_eccentric_central.empty()) return er.radius - 1;
  return std::nullopt;
}

/// kappa(x): largest j such that the ball of radius j around x holds at
/// most half the vertices. Compared exactly (2 * prefix <= n), never in
/// floating point. -1 when even the vertex itself exceeds n/2 (n = 1).
inline int kappa(const DistanceMatrix& dm, int x) {
  if (x < 0 || x >= dm.n) throw input_error("kappa: vertex out of range");
  const int* row = dm.row(x);
  const int ecc = dm.ecc[x];
  std::vector<int> eta(ecc + 1, 0);
  for (int v = 0; v < dm.n; ++v) ++eta[row[v]];
  int prefix = 0;
  int k = -1;
  for (int j = 0; j <= ecc; ++j) {
    prefix += eta[j];
    if (2 * prefix <= dm.n)
      k = j;
    else
      break;
  }
  return k;
}

/// Dirac-style lower bound min{1 + kappa(x)}: in the distance-threshold
/// graph at that level every vertex keeps degree >= n/2, which guarantees a
/// Hamiltonian cycle by Dirac's criterion. Absent for n < 3.
inline std::optional<int> dirac_lower_bound(const DistanceMatrix& dm) {
  if (dm.n < 3) return std::nullopt;
  int best = dm.n;
  for (int x = 0; x < dm.n; ++x) best = std::min(best, 1 + kappa(dm, x));
  return best;
}

struct DegreeBound {
  double raw = 0.0;  // real-valued right-hand side
  int value = 0;     // its ceiling (integer form)
};

/// Exact-arithmetic cousin of the degree bound: the largest l whose
/// geometric ball estimate 1 + D + D(D-1) + ... + D(D-1)^l stays within
/// n/2 yields the bound l + 2. Sound on every graph (the estimate
/// dominates the true ball sizes) and always dominated by the dirac bound,
/// which uses the true counts.
inline std::optional<int> degree_count_lower_bound(const Graph& g) {
  const int delta = g.max_degree();
  if (delta <= 2) return std::nullopt;
  std::int64_t sum = 1;
  std::int64_t term = delta;
  int l = -1;
  while (term <= g.n && 2 * (sum + term) <= g.n) {
    sum += term;
    term *= delta - 1;
    ++l;
  }
  return l + 2;
}

/// Closed-form degree bound 1 + log_{D-1}(1 + (n-2)(D-2)/(2D)) for maximum
/// degree D > 2, reported as the raw real plus its ceiling. Tight on
/// complete binary trees. Beware: the ceiling can overshoot the true value
/// on graphs where the geometric ball estimate is far from sharp (K_{3,3}
/// is the smallest case), so best_lower never relies on it. When the float
/// lands within 1e-9 of an integer boundary the ceiling is distrusted and
/// the exact-arithmetic count form is reported instead.
inline std::optional<DegreeBound> degree_lower_bound(const Graph& g) {
  const int delta = g.max_degree();
  if (delta <= 2) return std::nullopt;
  const int n = g.n;
  DegreeBound b;
  b.raw = 1.0 + std::log1p(static_cast<double>(n - 2) * (delta - 2) /
                           (2.0 * delta)) /
                    std::log(static_cast<double>(delta - 1));
  const int ceil_raw = static_cast<int>(std::ceil(b.raw));
  if (b.raw > ceil_raw - 1 + 1e-9)
    b.value = ceil_raw;
  else
    b.value = *degree_count_lower_bound(g);
  return b;
}

/// Every cheap bound in one report, used by the exact solver for its
/// starting point and by the CLI.
struct BoundsReport {
  int radius_upper = 0;
  std::optional<int> ue_upper;
  std::optional<int> dirac_lower;
  std::optional<DegreeBound> degree_lower;
  int best_upper = 0;
  int best_lower = 1;
};

inline BoundsReport bounds_report(const Graph& g, const DistanceMatrix& dm,
                                  const EccentricityReport& er) {
  BoundsReport rep;
  rep.radius_upper = radius_upper_bound(er);
  rep.ue_upper = uniquely_eccentric_upper_bound(er);
  rep.dirac_lower = dirac_lower_bound(dm);
  rep.degree_lower = degree_lower_bound(g);
  rep.best_upper = rep.ue_upper ? std::min(rep.radius_upper, *rep.ue_upper)
                                : rep.radius_upper;
  // best_lower folds only the provably sound bounds. The closed-form degree
  // bound stays out: its sound core (the count form) is dominated by dirac
  // anyway, and its ceiling can overshoot on ball-sparse graphs.
  rep.best_lower = 1;
  if (rep.dirac_lower) rep.best_lower = std::max(rep.best_lower, *rep.dirac_lower);
  internal_check(rep.best_lower <= rep.best_upper,
                 "bounds crossed: lower exceeds upper");
  return rep;
}

inline BoundsReport bounds_report(const Graph& g) {
  if (g.n < 2) throw input_error("bounds need n >= 2");
  DistanceMatrix dm = distance_matrix(g);
  return bounds_report(g, dm, eccentricity_report(dm));
}

}  // namespace dispersal
