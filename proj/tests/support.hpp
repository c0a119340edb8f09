#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "epx/ep_metric.hpp"

namespace testing {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline epx::ExtDist D(double v) { return std::isinf(v) ? epx::ExtDist::inf() : epx::ExtDist(v); }

inline std::vector<std::vector<epx::ExtDist>> rows(const std::vector<std::vector<double>>& m) {
  std::vector<std::vector<epx::ExtDist>> out;
  for (const auto& r : m) {
    std::vector<epx::ExtDist> row;
    for (double v : r) row.push_back(D(v));
    out.push_back(std::move(row));
  }
  return out;
}

inline epx::EpMetricSpace space(std::vector<std::string> labels, const std::vector<std::vector<double>>& m) {
  return epx::validate_ep_metric(std::move(labels), rows(m));
}

}  // namespace testing
