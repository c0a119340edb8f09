#include "epx/sset.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "epx/errors.hpp"
#include "epx/union_find.hpp"

namespace epx {

namespace {

std::string ref_string(const TruncatedSSet& z, SimplexRef r) {
  if (z.contains(r)) return z.simplex(r).name;
  return fmt::format("<{}:{}>", r.dim, r.index);
}

std::string ez_string(const TruncatedSSet& z, const EzPair& e) {
  return fmt::format("{}{}", ref_string(z, e.base),
                     e.is_nondegenerate() ? "" : " via " + e.degeneracy.to_string());
}

}  // namespace

TruncatedSSet::TruncatedSSet(int cap) : cap_(cap), levels_(static_cast<std::size_t>(cap + 1)) {
  if (cap < 0) throw std::invalid_argument("negative dimension cap");
}

TruncatedSSet::TruncatedSSet(int cap, std::vector<std::vector<Simplex>> levels)
    : cap_(cap), levels_(std::move(levels)) {
  if (cap < 0) throw std::invalid_argument("negative dimension cap");
  if (static_cast<int>(levels_.size()) > cap + 1) {
    throw CapExceeded(fmt::format("{} levels given for cap {}", levels_.size(), cap));
  }
  levels_.resize(static_cast<std::size_t>(cap + 1));
  for (int n = 0; n <= cap_; ++n) {
    auto& lvl = levels_[static_cast<std::size_t>(n)];
    for (std::size_t idx = 0; idx < lvl.size(); ++idx) {
      Simplex& s = lvl[idx];
      if (n == 0) {
        s.faces.clear();
        s.vertices = {static_cast<int>(idx)};
        continue;
      }
      if (static_cast<int>(s.faces.size()) != n + 1) {
        throw UnknownSimplex(fmt::format("simplex {} of dimension {} has {} faces", s.name, n,
                                         s.faces.size()));
      }
      for (const auto& f : s.faces) {
        if (f.base.dim < 0 || f.base.dim >= n || !contains(f.base) ||
            f.degeneracy.domain_dim() != n - 1 || f.degeneracy.codomain_dim() != f.base.dim) {
          throw UnknownSimplex("simplex " + s.name + " has a malformed face reference");
        }
      }
      s.vertices.assign(static_cast<std::size_t>(n + 1), 0);
      const EzPair& last = s.faces[static_cast<std::size_t>(n)];
      const auto& last_base = simplex(last.base).vertices;
      for (int j = 0; j < n; ++j) {
        s.vertices[static_cast<std::size_t>(j)] =
            last_base[static_cast<std::size_t>(last.degeneracy(j))];
      }
      const EzPair& first = s.faces[0];
      s.vertices[static_cast<std::size_t>(n)] =
          simplex(first.base).vertices[static_cast<std::size_t>(first.degeneracy(n - 1))];
    }
  }
}

std::size_t TruncatedSSet::count(int n) const {
  if (n < 0 || n > cap_) return 0;
  return levels_[static_cast<std::size_t>(n)].size();
}

std::vector<std::size_t> TruncatedSSet::counts() const {
  std::vector<std::size_t> out;
  for (int n = 0; n <= cap_; ++n) out.push_back(count(n));
  return out;
}

std::size_t TruncatedSSet::total_count() const {
  std::size_t t = 0;
  for (const auto& l : levels_) t += l.size();
  return t;
}

const std::vector<Simplex>& TruncatedSSet::level(int n) const {
  if (n < 0 || n > cap_) throw CapExceeded(fmt::format("dimension {} above cap {}", n, cap_));
  return levels_[static_cast<std::size_t>(n)];
}

const Simplex& TruncatedSSet::simplex(SimplexRef ref) const {
  if (!contains(ref)) throw UnknownSimplex(fmt::format("no simplex {}:{}", ref.dim, ref.index));
  return levels_[static_cast<std::size_t>(ref.dim)][static_cast<std::size_t>(ref.index)];
}

bool TruncatedSSet::contains(SimplexRef ref) const noexcept {
  return ref.dim >= 0 && ref.dim <= cap_ && ref.index >= 0 &&
         static_cast<std::size_t>(ref.index) < levels_[static_cast<std::size_t>(ref.dim)].size();
}

TruncatedSSet TruncatedSSet::skeleton(int k) const {
  const int new_cap = std::min(cap_, k);
  std::vector<std::vector<Simplex>> lv(levels_.begin(), levels_.begin() + new_cap + 1);
  return TruncatedSSet(new_cap, std::move(lv));
}

namespace {

// inj: [j] -> [k] applied to the non-degenerate k-simplex x.
EzPair apply_injection(const TruncatedSSet& z, SimplexRef x, const OrdinalMap& inj) {
  const int k = x.dim;
  const int j = inj.domain_dim();
  if (j == k) return EzPair::of(x);
  int missing = 0;
  while (missing <= k && missing <= j && inj(missing) == missing) ++missing;
  // missing is the least value not hit by inj
  std::vector<int> shifted;
  shifted.reserve(inj.values().size());
  for (int v : inj.values()) shifted.push_back(v > missing ? v - 1 : v);
  return apply_ordinal(z, z.face(x, missing), OrdinalMap(std::move(shifted), k - 1));
}

}  // namespace

EzPair apply_ordinal(const TruncatedSSet& z, const EzPair& sigma, const OrdinalMap& theta) {
  if (theta.codomain_dim() != sigma.dim()) {
    throw DimensionMismatch(fmt::format("cannot apply {} to a {}-simplex", theta.to_string(),
                                        sigma.dim()));
  }
  const OrdinalMap composite = compose(sigma.degeneracy, theta);
  auto [surj, inj] = epi_mono(composite);
  EzPair face = apply_injection(z, sigma.base, inj);
  return {face.base, compose(face.degeneracy, surj)};
}

EzPair face_of(const TruncatedSSet& z, const EzPair& sigma, int i) {
  return apply_ordinal(z, sigma, OrdinalMap::coface(sigma.dim(), i));
}

SSetValidation validate_sset(const TruncatedSSet& z) {
  for (int n = 1; n <= z.cap(); ++n) {
    for (int idx = 0; idx < static_cast<int>(z.count(n)); ++idx) {
      const SimplexRef ref{n, idx};
      const Simplex& s = z.simplex(ref);
      for (int i = 0; i <= n; ++i) {
        const EzPair& f = s.faces[static_cast<std::size_t>(i)];
        if (!f.degeneracy.is_surjective() || f.degeneracy.codomain_dim() != f.base.dim) {
          return {false, fmt::format("face d{} of {} is not in normal form", i, s.name)};
        }
      }
      const EzPair self = EzPair::of(ref);
      for (int j = 1; n >= 2 && j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          const EzPair lhs = face_of(z, face_of(z, self, j), i);
          const EzPair rhs = face_of(z, face_of(z, self, i), j - 1);
          if (lhs != rhs) {
            return {false, fmt::format("d{} d{} {} = {} but d{} d{} {} = {}", i, j, s.name,
                                       ez_string(z, lhs), j - 1, i, s.name, ez_string(z, rhs))};
          }
        }
      }
    }
  }
  return {};
}

namespace {

std::string tuple_name(const std::vector<std::string>& names, const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += names[static_cast<std::size_t>(t[i])];
  }
  return out + ")";
}

}  // namespace

TruncatedSSet tuple_complex(std::vector<std::string> vertex_names,
                            const std::vector<std::vector<std::vector<int>>>& tuples, int cap) {
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(cap + 1));
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(cap + 1));
  const int nv = static_cast<int>(vertex_names.size());
  for (int v = 0; v < nv; ++v) {
    levels[0].push_back(Simplex{vertex_names[static_cast<std::size_t>(v)], {}, {}});
    index[0][{v}] = v;
  }
  for (int n = 1; n <= cap && n < static_cast<int>(tuples.size()); ++n) {
    for (const auto& t : tuples[static_cast<std::size_t>(n)]) {
      if (static_cast<int>(t.size()) != n + 1) {
        throw DimensionMismatch(fmt::format("tuple of length {} listed in dimension {}", t.size(), n));
      }
      Simplex s;
      s.name = tuple_name(vertex_names, t);
      for (int i = 0; i <= n; ++i) {
        std::vector<int> base;
        std::vector<int> surj;
        for (int k = 0; k <= n; ++k) {
          if (k == i) continue;
          const int v = t[static_cast<std::size_t>(k)];
          if (v < 0 || v >= nv) throw UnknownVertex(fmt::format("vertex index {} out of range", v));
          if (base.empty() || base.back() != v) base.push_back(v);
          surj.push_back(static_cast<int>(base.size()) - 1);
        }
        const int bd = static_cast<int>(base.size()) - 1;
        auto it = index[static_cast<std::size_t>(bd)].find(base);
        if (it == index[static_cast<std::size_t>(bd)].end()) {
          throw IdentityViolation("face " + tuple_name(vertex_names, base) + " of " + s.name +
                                  " is not listed");
        }
        s.faces.push_back({{bd, it->second}, OrdinalMap(std::move(surj), bd)});
      }
      auto [_, fresh] = index[static_cast<std::size_t>(n)].emplace(
          t, static_cast<int>(levels[static_cast<std::size_t>(n)].size()));
      if (!fresh) continue;
      levels[static_cast<std::size_t>(n)].push_back(std::move(s));
    }
  }
  return TruncatedSSet(cap, std::move(levels));
}

TruncatedSSet from_ordered_complex(const std::vector<std::string>& vertex_names,
                                   const std::vector<std::vector<int>>& facets, int cap) {
  const int nv = static_cast<int>(vertex_names.size());
  std::vector<std::set<std::vector<int>>> found(static_cast<std::size_t>(cap + 1));
  for (auto facet : facets) {
    if (facet.empty()) throw std::invalid_argument("empty facet");
    for (int v : facet) {
      if (v < 0 || v >= nv) throw UnknownVertex(fmt::format("vertex index {} out of range", v));
    }
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    const int m = static_cast<int>(facet.size());
    // every non-empty subset of size <= cap+1
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      const int size = __builtin_popcount(mask);
      if (size > cap + 1) continue;
      std::vector<int> t;
      for (int k = 0; k < m; ++k) {
        if (mask & (1u << k)) t.push_back(facet[static_cast<std::size_t>(k)]);
      }
      found[static_cast<std::size_t>(size - 1)].insert(std::move(t));
    }
  }
  std::vector<std::vector<std::vector<int>>> tuples(static_cast<std::size_t>(cap + 1));
  for (int n = 1; n <= cap; ++n) {
    tuples[static_cast<std::size_t>(n)].assign(found[static_cast<std::size_t>(n)].begin(),
                                               found[static_cast<std::size_t>(n)].end());
  }
  return tuple_complex(vertex_names, tuples, cap);
}

TruncatedSSet from_ordered_complex(const std::vector<std::string>& vertex_names,
                                   const std::vector<std::vector<std::string>>& facets, int cap) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < vertex_names.size(); ++i) idx[vertex_names[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> f;
  for (const auto& facet : facets) {
    std::vector<int> t;
    for (const auto& name : facet) {
      auto it = idx.find(name);
      if (it == idx.end()) throw UnknownVertex("unknown vertex " + name);
      t.push_back(it->second);
    }
    f.push_back(std::move(t));
  }
  return from_ordered_complex(vertex_names, f, cap);
}

TruncatedSSet standard_simplex(int n, int cap) {
  std::vector<std::string> names;
  std::vector<int> facet;
  for (int i = 0; i <= n; ++i) {
    names.push_back(std::to_string(i));
    facet.push_back(i);
  }
  return from_ordered_complex(names, std::vector<std::vector<int>>{facet}, cap);
}

VertexTupleIndex::VertexTupleIndex(const TruncatedSSet& z)
    : by_dim_(static_cast<std::size_t>(z.cap() + 1)) {
  for (int n = 0; n <= z.cap(); ++n) {
    for (int i = 0; i < static_cast<int>(z.count(n)); ++i) {
      auto [_, fresh] = by_dim_[static_cast<std::size_t>(n)].emplace(z.simplex({n, i}).vertices, i);
      if (!fresh) faithful_ = false;
    }
  }
}

std::optional<SimplexRef> VertexTupleIndex::find(const std::vector<int>& vertices) const {
  const int n = static_cast<int>(vertices.size()) - 1;
  if (n < 0 || n >= static_cast<int>(by_dim_.size())) return std::nullopt;
  const auto& m = by_dim_[static_cast<std::size_t>(n)];
  auto it = m.find(vertices);
  if (it == m.end()) return std::nullopt;
  return SimplexRef{n, it->second};
}

EzPair SSetMap::operator()(const EzPair& sigma) const {
  const EzPair& img = image(sigma.base);
  return {img.base, compose(img.degeneracy, sigma.degeneracy)};
}

SSetValidation validate_map(const SSetMap& f) {
  const TruncatedSSet& src = *f.source;
  const TruncatedSSet& tgt = *f.target;
  if (static_cast<int>(f.images.size()) < src.cap() + 1) return {false, "missing image levels"};
  for (int n = 0; n <= src.cap(); ++n) {
    if (f.images[static_cast<std::size_t>(n)].size() != src.count(n)) {
      return {false, fmt::format("wrong number of images in dimension {}", n)};
    }
    for (const auto& img : f.images[static_cast<std::size_t>(n)]) {
      if (img.dim() != n || !tgt.contains(img.base) || !img.degeneracy.is_surjective() ||
          img.degeneracy.codomain_dim() != img.base.dim) {
        return {false, fmt::format("malformed image in dimension {}", n)};
      }
    }
  }
  for (int n = 1; n <= src.cap(); ++n) {
    for (int idx = 0; idx < static_cast<int>(src.count(n)); ++idx) {
      const SimplexRef ref{n, idx};
      for (int i = 0; i <= n; ++i) {
        const EzPair lhs = f(src.face(ref, i));
        const EzPair rhs = face_of(tgt, f.image(ref), i);
        if (lhs != rhs) {
          return {false, fmt::format("map does not commute with d{} on {}: {} vs {}", i,
                                     src.simplex(ref).name, ez_string(tgt, lhs), ez_string(tgt, rhs))};
        }
      }
    }
  }
  return {};
}

std::vector<std::vector<int>> path_components(const TruncatedSSet& z) {
  const std::size_t nv = z.count(0);
  UnionFind uf(nv);
  if (z.cap() >= 1) {
    for (const auto& e : z.level(1)) {
      uf.unite(static_cast<std::size_t>(e.vertices[0]), static_cast<std::size_t>(e.vertices[1]));
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(nv, -1);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t r = uf.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<SimplexRef> generated_simplices(const TruncatedSSet& z, SimplexRef sigma) {
  if (!z.contains(sigma)) {
    throw UnknownSimplex(fmt::format("no simplex {}:{}", sigma.dim, sigma.index));
  }
  std::set<SimplexRef> found;
  const EzPair s = EzPair::of(sigma);
  for (int m = 0; m <= z.cap(); ++m) {
    for (const auto& theta : all_ordinal_maps(m, sigma.dim)) {
      found.insert(apply_ordinal(z, s, theta).base);
    }
  }
  return {found.begin(), found.end()};
}

TruncatedSSet restrict_to(const TruncatedSSet& z, const std::vector<SimplexRef>& members) {
  std::vector<SimplexRef> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<SimplexRef, int> new_index;
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(z.cap() + 1));
  for (const auto& r : sorted) {
    new_index[r] = static_cast<int>(levels[static_cast<std::size_t>(r.dim)].size());
    levels[static_cast<std::size_t>(r.dim)].push_back(z.simplex(r));
  }
  for (auto& lvl : levels) {
    for (auto& s : lvl) {
      for (auto& f : s.faces) {
        auto it = new_index.find(f.base);
        if (it == new_index.end()) {
          throw IdentityViolation("subcomplex is not closed under faces at " + s.name);
        }
        f.base.index = it->second;
      }
    }
  }
  return TruncatedSSet(z.cap(), std::move(levels));
}

TruncatedSSet generated_subcomplex(const TruncatedSSet& z, SimplexRef sigma) {
  return restrict_to(z, generated_simplices(z, sigma));
}

}  // namespace epx
