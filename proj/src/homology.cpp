#include "epx/homology.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "epx/errors.hpp"

namespace epx {

ChainComplex boundary_matrices(const TruncatedSSet& z, int kmax) {
  if (kmax > z.cap()) {
    throw CapTooLow(fmt::format("chains up to degree {} need cap >= {}, have {}", kmax, kmax, z.cap()));
  }
  ChainComplex c;
  for (int n = 0; n <= kmax; ++n) {
    c.ranks.push_back(z.count(n));
    SparseColumnMatrix m;
    m.rows = n == 0 ? 0 : z.count(n - 1);
    m.columns.resize(z.count(n));
    if (n > 0) {
      for (int j = 0; j < static_cast<int>(z.count(n)); ++j) {
        std::map<std::size_t, std::int64_t> col;
        const auto& faces = z.simplex({n, j}).faces;
        for (int i = 0; i <= n; ++i) {
          const EzPair& f = faces[static_cast<std::size_t>(i)];
          if (!f.is_nondegenerate()) continue;
          col[static_cast<std::size_t>(f.base.index)] += (i % 2 == 0) ? 1 : -1;
        }
        for (auto [row, v] : col) {
          if (v != 0) m.columns[static_cast<std::size_t>(j)].emplace_back(row, v);
        }
      }
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

std::string check_boundary_squared(const ChainComplex& c) {
  for (std::size_t n = 2; n < c.boundaries.size(); ++n) {
    const auto& outer = c.boundaries[n - 1];
    const auto& inner = c.boundaries[n];
    for (const auto& col : inner.columns) {
      std::map<std::size_t, std::int64_t> acc;
      for (auto [mid, v] : col) {
        for (auto [row, w] : outer.columns[mid]) acc[row] += v * w;
      }
      for (auto [row, v] : acc) {
        if (v != 0) return fmt::format("boundary squared is non-zero in degree {}", n);
      }
    }
  }
  return {};
}

std::vector<std::int64_t> HomologyResult::betti() const {
  std::vector<std::int64_t> out;
  for (const auto& g : groups) out.push_back(g.betti);
  return out;
}

HomologyResult homology(const TruncatedSSet& z, int kmax, bool reduced) {
  if (kmax + 1 > z.cap()) {
    throw CapTooLow(fmt::format("H_{} needs cap >= {}, have {}", kmax, kmax + 1, z.cap()));
  }
  const ChainComplex c = boundary_matrices(z, kmax + 1);
  std::vector<std::vector<std::int64_t>> factors;
  for (const auto& b : c.boundaries) factors.push_back(sparse_invariant_factors(b));
  HomologyResult h;
  for (int k = 0; k <= kmax; ++k) {
    const auto rank_out = static_cast<std::int64_t>(factors[static_cast<std::size_t>(k)].size());
    const auto& incoming = factors[static_cast<std::size_t>(k + 1)];
    HomologyGroup g;
    g.degree = k;
    g.betti = static_cast<std::int64_t>(c.ranks[static_cast<std::size_t>(k)]) - rank_out -
              static_cast<std::int64_t>(incoming.size());
    for (std::int64_t f : incoming) {
      if (f > 1) g.torsion.push_back(f);
    }
    if (k == 0 && reduced && c.ranks[0] > 0) g.betti -= 1;
    h.groups.push_back(std::move(g));
  }
  return h;
}

std::string format_homology(const HomologyResult& h) {
  std::string out;
  for (const auto& g : h.groups) {
    if (!out.empty()) out += ' ';
    out += fmt::format("H{}=Z^{}", g.degree, g.betti);
    for (auto t : g.torsion) out += fmt::format("+Z/{}", t);
  }
  return out;
}

}  // namespace epx
