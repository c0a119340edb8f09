#include "epx/ext_dist.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace epx {

ExtDist::ExtDist(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw std::invalid_argument(fmt::format("distance must be non-negative, got {}", value));
  }
  value_ = value;
}

ExtDist operator*(ExtDist a, long long count) {
  if (count < 0) throw std::invalid_argument("negative multiplier");
  if (count == 0) return ExtDist{};
  if (a.is_inf()) return ExtDist::inf();
  return ExtDist(a.value_ * static_cast<double>(count));
}

std::string ExtDist::to_string() const {
  if (is_inf()) return "inf";
  return fmt::format("{:.12g}", value_);
}

bool approx_equal(ExtDist a, ExtDist b, double tol) noexcept {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  return std::fabs(a.value() - b.value()) <= tol;
}

}  // namespace epx
