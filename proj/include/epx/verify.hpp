#pragma once

// Seeded corpora and the named verification suites.

#include <cstdint>
#include <string>
#include <vector>

#include "epx/ep_metric.hpp"
#include "epx/report.hpp"
#include "epx/sset.hpp"

namespace epx {

/// Points drawn uniformly from the unit square; space i has 2 + i % (max_points - 1)
/// points labelled x0, x1, ...
std::vector<EpMetricSpace> euclidean_corpus(std::uint64_t seed, std::size_t count,
                                            std::size_t max_points = 6);

/// Shortest-path closures of random integer weights, with zero and infinite
/// distances mixed in. Labels v0, v1, ...
std::vector<EpMetricSpace> integer_corpus(std::uint64_t seed, std::size_t count,
                                          std::size_t max_points = 6);

struct GraphCase {
  TruncatedSSet complex;
  ExtDist s;
};
/// Random graphs on at most max_vertices vertices with a dyadic scale.
std::vector<GraphCase> graph_corpus(std::uint64_t seed, std::size_t count,
                                    std::size_t max_vertices = 8);

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Corpus size; 0 picks the suite default.
  std::size_t count = 0;
  std::size_t max_points = 6;
  int cap = 3;
  int kmax = 2;
  /// Stage count for bad-colimit.
  std::size_t stages = 20;
};

/// Compares V_t(X) with S_t(X) at every t (default: the critical values): path
/// components, homology through kmax, the posets of non-degenerate simplices and
/// the subdivision of V_t. Throws CapTooLow unless kmax <= cap - 1.
SuiteReport run_compare(const EpMetricSpace& x, int cap, int kmax,
                        const std::vector<ExtDist>& ts = {});

const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace epx
