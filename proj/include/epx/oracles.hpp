#pragma once

// Brute-force reference computations. They share no code paths with the
// production algorithms they are compared against.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "epx/ep_metric.hpp"
#include "epx/sset.hpp"

namespace epx::oracle {

/// Quotient distances along p : X -> {0..m-1} as the minimum over every
/// polygonal path that visits each class at most once, trying every explicit
/// choice of link endpoints. Row-major m*m.
std::vector<ExtDist> polygonal_paths(const EpMetricSpace& x, const PointMap& p, std::size_t m);

/// d_m on X u Y: minimum over simple point paths whose every step stays inside
/// X or inside Y. Points ordered by ambient index; row-major.
std::vector<ExtDist> alternating_paths(const EpMetricSpace& ambient, std::span<const std::size_t> xs,
                                       std::span<const std::size_t> ys);

/// Shortest paths by exhaustive simple-path search on a weighted graph given as
/// a row-major matrix (INF = no edge).
std::vector<ExtDist> simple_path_minimum(const std::vector<ExtDist>& weights, std::size_t n);

struct EzCensus {
  std::size_t simplices = 0;
  /// Empty when every simplex has exactly one decomposition and it matches
  /// apply_ordinal.
  std::string failure;
};

/// For every theta^*(tau) with tau non-degenerate and theta of domain dimension
/// <= max_dim, counts the pairs (surjection s, non-degenerate x) whose vertex
/// sequences give the same simplex. Needs simplices determined by their vertices.
EzCensus ez_uniqueness(const TruncatedSSet& z, int max_dim);

/// Number of maps {0..n} -> Y whose images lie pairwise within s, i.e. the
/// ep-morphisms from the standard space U^n_s.
std::size_t morphisms_from_standard(const EpMetricSpace& y, int n, ExtDist s);

/// Number of n-simplices, degenerate ones included, computed from the
/// non-degenerate counts and the surjections [n] -> [k].
std::size_t all_simplices(const TruncatedSSet& z, int n);

/// Components of the graph on {0..n-1} with the given edges, as sorted label
/// sets, themselves sorted.
std::vector<std::vector<std::string>> components(const std::vector<std::string>& labels,
                                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace epx::oracle
