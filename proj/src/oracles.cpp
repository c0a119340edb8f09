#include "epx/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <fmt/format.h>

namespace epx::oracle {

std::vector<ExtDist> polygonal_paths(const EpMetricSpace& x, const PointMap& p, std::size_t m) {
  std::vector<std::vector<std::size_t>> fiber(m);
  for (std::size_t i = 0; i < x.size(); ++i) fiber[p[i]].push_back(i);
  std::vector<ExtDist> best(m * m, ExtDist::inf());
  for (std::size_t u = 0; u < m; ++u) best[u * m + u] = ExtDist{};

  // Walk over sequences of distinct classes c_0 = u, ..., c_k; every link
  // (x_i, y_i) picks x_i in c_i and y_i in c_{i+1} explicitly.
  std::vector<char> used(m, 0);
  std::function<void(std::size_t, std::size_t, ExtDist)> walk = [&](std::size_t start,
                                                                     std::size_t cls, ExtDist sum) {
    for (std::size_t next = 0; next < m; ++next) {
      if (used[next]) continue;
      ExtDist link = ExtDist::inf();
      for (std::size_t a : fiber[cls]) {
        for (std::size_t b : fiber[next]) link = min(link, x.d(a, b));
      }
      if (link.is_inf()) continue;
      const ExtDist total = sum + link;
      best[start * m + next] = min(best[start * m + next], total);
      used[next] = 1;
      walk(start, next, total);
      used[next] = 0;
    }
  };
  for (std::size_t u = 0; u < m; ++u) {
    used[u] = 1;
    walk(u, u, ExtDist{});
    used[u] = 0;
  }
  return best;
}

std::vector<ExtDist> simple_path_minimum(const std::vector<ExtDist>& weights, std::size_t n) {
  std::vector<ExtDist> best(n * n, ExtDist::inf());
  std::vector<char> used(n, 0);
  std::function<void(std::size_t, std::size_t, ExtDist)> walk = [&](std::size_t start, std::size_t at,
                                                                     ExtDist sum) {
    best[start * n + at] = min(best[start * n + at], sum);
    for (std::size_t next = 0; next < n; ++next) {
      if (used[next] || weights[at * n + next].is_inf()) continue;
      used[next] = 1;
      walk(start, next, sum + weights[at * n + next]);
      used[next] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = 1;
    walk(s, s, ExtDist{});
    used[s] = 0;
  }
  return best;
}

std::vector<ExtDist> alternating_paths(const EpMetricSpace& ambient, std::span<const std::size_t> xs,
                                       std::span<const std::size_t> ys) {
  std::set<std::size_t> in_x(xs.begin(), xs.end());
  std::set<std::size_t> in_y(ys.begin(), ys.end());
  std::set<std::size_t> all = in_x;
  all.insert(in_y.begin(), in_y.end());
  const std::vector<std::size_t> pts(all.begin(), all.end());
  const std::size_t n = pts.size();
  std::vector<ExtDist> w(n * n, ExtDist::inf());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool both_x = in_x.count(pts[i]) && in_x.count(pts[j]);
      const bool both_y = in_y.count(pts[i]) && in_y.count(pts[j]);
      if (both_x || both_y) w[i * n + j] = ambient.d(pts[i], pts[j]);
    }
  }
  return simple_path_minimum(w, n);
}

EzCensus ez_uniqueness(const TruncatedSSet& z, int max_dim) {
  EzCensus out;
  // Vertex sequence of every non-degenerate simplex, by dimension.
  std::map<std::vector<int>, std::vector<SimplexRef>> by_vertices;
  for (int k = 0; k <= z.cap(); ++k) {
    for (int i = 0; i < static_cast<int>(z.count(k)); ++i) {
      by_vertices[z.simplex({k, i}).vertices].push_back({k, i});
    }
  }
  for (int n = 0; n <= z.cap(); ++n) {
    for (int idx = 0; idx < static_cast<int>(z.count(n)); ++idx) {
      const Simplex& tau = z.simplex({n, idx});
      for (int m = 0; m <= max_dim; ++m) {
        for (const OrdinalMap& theta : all_ordinal_maps(m, n)) {
          std::vector<int> seq;
          for (int j = 0; j <= m; ++j) seq.push_back(tau.vertices[static_cast<std::size_t>(theta(j))]);
          std::vector<EzPair> found;
          for (int k = 0; k <= std::min(m, z.cap()); ++k) {
            for (const OrdinalMap& s : all_surjections(m, k)) {
              std::vector<int> base;
              for (int j = 0; j <= m; ++j) {
                if (j == 0 || s(j) != s(j - 1)) base.push_back(seq[static_cast<std::size_t>(j)]);
              }
              // base must be constant on the fibres of s
              bool consistent = true;
              for (int j = 0; j <= m; ++j) {
                if (base[static_cast<std::size_t>(s(j))] != seq[static_cast<std::size_t>(j)]) consistent = false;
              }
              if (!consistent) continue;
              auto it = by_vertices.find(base);
              if (it == by_vertices.end()) continue;
              for (const SimplexRef& x : it->second) {
                if (x.dim == k) found.push_back({x, s});
              }
            }
          }
          ++out.simplices;
          const EzPair computed = apply_ordinal(z, EzPair::of({n, idx}), theta);
          if (found.size() != 1) {
            out.failure = fmt::format("{} decompositions of {} pulled back along {}", found.size(),
                                      tau.name, theta.to_string());
            return out;
          }
          if (found.front() != computed) {
            out.failure = fmt::format("normal form of {} along {} disagrees", tau.name, theta.to_string());
            return out;
          }
        }
      }
    }
  }
  return out;
}

std::size_t morphisms_from_standard(const EpMetricSpace& y, int n, ExtDist s) {
  const std::size_t k = y.size();
  std::vector<std::size_t> f(static_cast<std::size_t>(n + 1), 0);
  std::size_t count = 0;
  if (k == 0) return 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < f.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (y.d(f[i], f[j]) > s) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < f.size() && ++f[pos] == k) f[pos++] = 0;
    if (pos == f.size()) break;
  }
  return count;
}

std::size_t all_simplices(const TruncatedSSet& z, int n) {
  std::size_t total = 0;
  for (int k = 0; k <= std::min(n, z.cap()); ++k) total += z.count(k) * all_surjections(n, k).size();
  return total;
}

std::vector<std::vector<std::string>> components(
    const std::vector<std::string>& labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = i;
  // relabel until stable: plain label propagation
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : edges) {
      const std::size_t c = std::min(comp[a], comp[b]);
      if (comp[a] != c || comp[b] != c) {
        comp[a] = comp[b] = c;
        changed = true;
      }
    }
  }
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[comp[i]].push_back(labels[i]);
  std::vector<std::vector<std::string>> out;
  for (auto& [_, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace epx::oracle
