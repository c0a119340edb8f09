#pragma once

// Subdivision sd(Z) as a colimit of nerves of face posets of standard simplices,
// with the comparison maps to the nerve of NZ and to Z.

#include <memory>
#include <vector>

#include "epx/poset.hpp"
#include "epx/sset.hpp"

namespace epx {

/// A simplex of BN(Delta^n) sitting over a non-degenerate simplex of Z: a
/// strictly increasing chain of non-empty vertex subsets of [sigma.dim],
/// encoded as bitmasks.
struct SdGenerator {
  SimplexRef sigma;
  std::vector<unsigned> chain;

  friend bool operator==(const SdGenerator&, const SdGenerator&) = default;
  friend auto operator<=>(const SdGenerator&, const SdGenerator&) = default;
};

struct Subdivision {
  std::shared_ptr<const TruncatedSSet> complex;
  /// representatives[k][i]: least generator of the i-th non-degenerate k-simplex.
  std::vector<std::vector<SdGenerator>> representatives;
};

/// sd(Z) through dimension `cap` (defaults to Z's cap). Generators are glued by
/// union-find along every face and degeneracy relation. Throws CapExceeded when
/// cap is larger than Z's cap.
Subdivision subdivide(const TruncatedSSet& z, int cap = -1);

/// pi: sd(Z) -> BNZ, sending a generator to the chain of bases of its restrictions.
SSetMap pi_map(const TruncatedSSet& z, const Subdivision& sd, const NondegPoset& np,
               std::shared_ptr<const TruncatedSSet> nerve);
SSetMap pi_map(const TruncatedSSet& z);

/// gamma: sd(Z) -> Z, sending (sigma, S_0 < ... < S_k) to sigma restricted along
/// i -> max S_i.
SSetMap last_vertex_map(const TruncatedSSet& z, const Subdivision& sd);
SSetMap last_vertex_map(const TruncatedSSet& z);

/// Every image non-degenerate and each dimension mapped bijectively.
bool is_dimensionwise_bijection(const SSetMap& f);

}  // namespace epx
