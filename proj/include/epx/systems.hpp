#pragma once

// Diagrams [0, inf] -> simplicial sets with finitely many critical values.

#include <memory>
#include <string>
#include <vector>

#include "epx/ep_metric.hpp"
#include "epx/poset.hpp"
#include "epx/sset.hpp"

namespace epx {

/// Step function t -> stage: the value at s is the stage at the largest critical
/// value <= s, empty below the first one. The value at INF is the last stage.
/// inclusions[i] embeds stage i into stage i+1.
class FilteredSSet {
 public:
  FilteredSSet() = default;
  FilteredSSet(std::vector<ExtDist> critical_values,
               std::vector<std::shared_ptr<const TruncatedSSet>> stages,
               std::vector<SSetMap> inclusions, int cap);

  /// Stages of tuple complexes glued along equal vertex names and tuples.
  static FilteredSSet from_named_stages(std::vector<ExtDist> critical_values,
                                        std::vector<TruncatedSSet> stages, int cap);

  int cap() const noexcept { return cap_; }
  std::size_t stage_count() const noexcept { return stages_.size(); }
  const std::vector<ExtDist>& critical_values() const noexcept { return critical_values_; }
  const TruncatedSSet& stage(std::size_t i) const { return *stages_.at(i); }
  std::shared_ptr<const TruncatedSSet> stage_ptr(std::size_t i) const { return stages_.at(i); }
  const SSetMap& inclusion(std::size_t i) const { return inclusions_.at(i); }

  /// Index of the stage in effect at s, or -1 when s is below every critical value.
  int stage_index_at(ExtDist s) const;

  /// For every non-degenerate n-simplex of stage j, the least stage index whose
  /// simplices map onto it.
  std::vector<std::vector<std::size_t>> birth_stages(std::size_t j) const;

 private:
  std::vector<ExtDist> critical_values_;
  std::vector<std::shared_ptr<const TruncatedSSet>> stages_;
  std::vector<SSetMap> inclusions_;
  int cap_ = 0;
};

/// Empty string when inclusions are injective on non-degenerate simplices and
/// commute with faces, and critical values increase strictly.
std::string check_filtered(const FilteredSSet& f);

TruncatedSSet evaluate_at(const FilteredSSet& f, ExtDist s);

/// L_s K: empty below s, K from s on.
FilteredSSet represent(ExtDist s, const TruncatedSSet& k);

/// Vietoris-Rips complex V_t(X): strictly increasing tuples (input order) of
/// diameter <= t.
TruncatedSSet vr_complex(const EpMetricSpace& x, ExtDist t, int cap);

/// Critical values shared by the metric systems: 0, every distinct finite
/// distance, and INF when some distance is infinite.
std::vector<ExtDist> metric_critical_values(const EpMetricSpace& x);

FilteredSSet vr_system(const EpMetricSpace& x, int cap);

/// Full subcomplex of V_t(X) on points with at least k points (itself included)
/// within distance t. Throws BadDegree unless 1 <= k <= |X|.
TruncatedSSet degree_rips_complex(const EpMetricSpace& x, std::size_t k, ExtDist t, int cap);
FilteredSSet degree_rips_system(const EpMetricSpace& x, std::size_t k, int cap);

/// P_s(X): non-empty subsets of diameter <= s ordered by inclusion, and its nerve.
struct SubsetPosetSystem {
  Poset poset;
  std::vector<std::vector<std::size_t>> subsets;
  TruncatedSSet nerve;
};
SubsetPosetSystem subset_poset_system(const EpMetricSpace& x, ExtDist s, int cap);

FilteredSSet one_skeleton(const FilteredSSet& f);

struct Bar {
  ExtDist birth;
  ExtDist death;
  std::string representative;
  bool essential = false;  // never dies; a component merged at t = inf has death inf but is not essential

  friend bool operator==(const Bar&, const Bar&) = default;
};

using Barcode = std::vector<Bar>;

/// Persistence of path components. The older component survives a merge; among
/// equally old ones the lexicographically least representative label survives.
Barcode pi0_barcode(const FilteredSSet& f);

/// Bars alive at s: birth <= s < death, or birth <= s for essential bars.
std::size_t bars_alive_at(const Barcode& b, ExtDist s);

}  // namespace epx
