#pragma once

// Normalized integral chains of a truncated simplicial set and their homology.

#include <cstdint>
#include <string>
#include <vector>

#include "epx/snf.hpp"
#include "epx/sset.hpp"

namespace epx {

/// boundaries[n] is d_n : C_n -> C_{n-1} (rows: (n-1)-simplices, columns:
/// n-simplices); boundaries[0] is the zero map to C_{-1} = 0.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<SparseColumnMatrix> boundaries;
};

/// Normalized chains through degree kmax: a face contributes (-1)^i when it is
/// non-degenerate and nothing otherwise. Throws CapTooLow if kmax > cap.
ChainComplex boundary_matrices(const TruncatedSSet& z, int kmax);

/// Empty when every composite d_n d_{n+1} vanishes; otherwise the failing degree.
std::string check_boundary_squared(const ChainComplex& c);

struct HomologyGroup {
  int degree = 0;
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
  std::vector<HomologyGroup> groups;

  std::vector<std::int64_t> betti() const;
  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

/// H_0..H_kmax. Needs cap >= kmax + 1, otherwise throws CapTooLow. In reduced
/// mode Betti_0 drops by one for non-empty input.
HomologyResult homology(const TruncatedSSet& z, int kmax, bool reduced = false);

std::string format_homology(const HomologyResult& h);

}  // namespace epx
