#pragma once

// Realization Re (filtered simplicial sets -> ep-metric spaces), the singular
// functor S, and the comparison maps between V_t(X) and S_t(X).

#include <memory>
#include <vector>

#include "epx/ep_metric.hpp"
#include "epx/poset.hpp"
#include "epx/sset.hpp"
#include "epx/systems.hpp"

namespace epx {

/// Points are the vertices of the final stage; every non-degenerate 1-simplex is
/// an edge weighted by the critical value at which it is born; distances are
/// shortest paths, INF across components.
EpMetricSpace realize(const FilteredSSet& f);

/// Re(F)_s: vertices of the stage at s, edges born at or before s.
EpMetricSpace partial_realize(const FilteredSSet& f, ExtDist s);

/// Closed form for Re(L_s K): s times the hop distance in the 1-skeleton.
EpMetricSpace realize_representable(ExtDist s, const TruncatedSSet& k);

/// S_s(Y): tuples of pairwise distance <= s with no equal neighbours, through
/// dimension cap.
TruncatedSSet singular_at(const EpMetricSpace& y, ExtDist s, int cap);
FilteredSSet singular_system(const EpMetricSpace& y, int cap);

/// eta: V_t(X) -> S_t(X), an increasing tuple read as a singular simplex.
SSetMap counit_vr(const EpMetricSpace& x, ExtDist t, int cap);

/// Sorted distinct entries of a vertex tuple.
std::vector<int> distinct_list(const std::vector<int>& tuple);

/// eta_* : NV_t(X) -> NS_t(X) and L : NS_t(X) -> NV_t(X) as maps of element indices.
struct EtaPoset {
  std::shared_ptr<const TruncatedSSet> vr;
  std::shared_ptr<const TruncatedSSet> singular;
  NondegPoset source;
  NondegPoset target;
  std::vector<std::size_t> eta;
  std::vector<std::size_t> ell;
};
EtaPoset eta_poset(const EpMetricSpace& x, ExtDist t, int cap);

}  // namespace epx
