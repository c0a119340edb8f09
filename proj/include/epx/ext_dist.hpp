#pragma once

#include <compare>
#include <limits>
#include <string>

namespace epx {

/// A distance in [0, inf]. Addition saturates at infinity.
class ExtDist {
 public:
  constexpr ExtDist() = default;

  /// Throws std::invalid_argument for negative or NaN input; +infinity maps to INF.
  explicit ExtDist(double value);

  static constexpr ExtDist inf() noexcept {
    ExtDist d;
    d.value_ = std::numeric_limits<double>::infinity();
    return d;
  }

  constexpr bool is_inf() const noexcept {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr double value() const noexcept { return value_; }

  friend constexpr ExtDist operator+(ExtDist a, ExtDist b) noexcept {
    ExtDist d;
    d.value_ = (a.is_inf() || b.is_inf()) ? std::numeric_limits<double>::infinity()
                                          : a.value_ + b.value_;
    return d;
  }
  ExtDist& operator+=(ExtDist other) noexcept { return *this = *this + other; }

  /// Multiplication by a non-negative integer count (0 * INF = 0).
  friend ExtDist operator*(ExtDist a, long long count);

  friend constexpr bool operator==(ExtDist, ExtDist) noexcept = default;
  friend constexpr std::partial_ordering operator<=>(ExtDist a, ExtDist b) noexcept {
    return a.value_ <=> b.value_;
  }

  /// Twelve significant digits, or the literal "inf".
  std::string to_string() const;

 private:
  double value_ = 0.0;
};

inline ExtDist min(ExtDist a, ExtDist b) noexcept { return b < a ? b : a; }
inline ExtDist max(ExtDist a, ExtDist b) noexcept { return a < b ? b : a; }

/// |a - b| <= tol, with INF equal only to INF.
bool approx_equal(ExtDist a, ExtDist b, double tol) noexcept;

}  // namespace epx
