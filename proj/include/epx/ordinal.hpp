#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace epx {

/// Weakly monotone map [m] -> [n] between finite ordinals {0..m} and {0..n}.
class OrdinalMap {
 public:
  OrdinalMap() = default;
  /// Throws DimensionMismatch if `values` is not monotone or leaves [0, codomain_dim].
  OrdinalMap(std::vector<int> values, int codomain_dim);

  static OrdinalMap identity(int n);
  /// Coface [n-1] -> [n] skipping i.
  static OrdinalMap coface(int n, int i);
  /// Codegeneracy [n+1] -> [n] hitting i twice.
  static OrdinalMap codegeneracy(int n, int i);
  static OrdinalMap constant(int n, int value);

  int domain_dim() const noexcept { return static_cast<int>(values_.size()) - 1; }
  int codomain_dim() const noexcept { return codomain_dim_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const noexcept { return values_; }

  bool is_surjective() const noexcept;
  bool is_injective() const noexcept;
  bool is_identity() const noexcept;

  friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;
  friend auto operator<=>(const OrdinalMap&, const OrdinalMap&) = default;

  std::string to_string() const;

 private:
  std::vector<int> values_;
  int codomain_dim_ = -1;
};

/// (outer o inner)(i) = outer(inner(i)).
OrdinalMap compose(const OrdinalMap& outer, const OrdinalMap& inner);

/// theta = injection o surjection, returned as {surjection, injection}.
std::pair<OrdinalMap, OrdinalMap> epi_mono(const OrdinalMap& theta);

std::vector<OrdinalMap> all_ordinal_maps(int m, int n);
std::vector<OrdinalMap> all_surjections(int m, int n);

}  // namespace epx
