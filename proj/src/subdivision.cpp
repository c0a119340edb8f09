#include "epx/subdivision.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include <fmt/format.h>

#include "epx/errors.hpp"
#include "epx/union_find.hpp"

namespace epx {

namespace {

std::string mask_string(unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int b = 0; mask >> b; ++b) {
    if (mask >> b & 1u) {
      if (!first) s += ',';
      s += std::to_string(b);
      first = false;
    }
  }
  return s + "}";
}

std::string generator_name(const TruncatedSSet& z, const SdGenerator& g) {
  std::string s = z.simplex(g.sigma).name + "|";
  for (std::size_t i = 0; i < g.chain.size(); ++i) {
    if (i) s += "<";
    s += mask_string(g.chain[i]);
  }
  return s;
}

void enumerate_chains(unsigned full, std::vector<unsigned>& chain, int max_len,
                      const SimplexRef& sigma, std::vector<SdGenerator>& out) {
  out.push_back({sigma, chain});
  if (static_cast<int>(chain.size()) == max_len) return;
  const unsigned top = chain.back();
  // strict supersets of top inside full
  const unsigned rest = full & ~top;
  for (unsigned add = rest; add != 0; add = (add - 1) & rest) {
    chain.push_back(top | add);
    enumerate_chains(full, chain, max_len, sigma, out);
    chain.pop_back();
  }
}

// Removes bit i and shifts the higher bits down.
unsigned drop_bit(unsigned mask, int i) {
  const unsigned low = mask & ((1u << i) - 1u);
  const unsigned high = mask >> (i + 1);
  return low | (high << i);
}

unsigned push_mask(unsigned mask, const OrdinalMap& s) {
  unsigned out = 0;
  for (int j = 0; j <= s.domain_dim(); ++j) {
    if (mask >> j & 1u) out |= 1u << s(j);
  }
  return out;
}

OrdinalMap inclusion_of(unsigned mask, int n) {
  std::vector<int> v;
  for (int b = 0; b <= n; ++b) {
    if (mask >> b & 1u) v.push_back(b);
  }
  return OrdinalMap(std::move(v), n);
}

}  // namespace

Subdivision subdivide(const TruncatedSSet& z, int cap) {
  if (cap < 0) cap = z.cap();
  if (cap > z.cap()) {
    throw CapExceeded(fmt::format("subdivision cap {} exceeds the complex cap {}", cap, z.cap()));
  }
  if (z.cap() > 30) throw CapExceeded("vertex subsets are limited to 31 elements");

  std::vector<SdGenerator> gens;
  for (int n = 0; n <= z.cap(); ++n) {
    const unsigned full = (1u << (n + 1)) - 1u;
    for (int i = 0; i < static_cast<int>(z.count(n)); ++i) {
      std::vector<unsigned> chain;
      for (unsigned first = 1; first <= full; ++first) {
        chain.assign(1, first);
        enumerate_chains(full, chain, cap + 1, {n, i}, gens);
      }
    }
  }
  // Order generators by dimension of the chain, then lexicographically.
  std::sort(gens.begin(), gens.end(), [](const SdGenerator& a, const SdGenerator& b) {
    if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size();
    return a < b;
  });
  auto id_of = [&](const SdGenerator& g) -> std::size_t {
    auto it = std::lower_bound(gens.begin(), gens.end(), g,
                               [](const SdGenerator& a, const SdGenerator& b) {
                                 if (a.chain.size() != b.chain.size()) {
                                   return a.chain.size() < b.chain.size();
                                 }
                                 return a < b;
                               });
    if (it == gens.end() || *it != g) throw IdentityViolation("missing subdivision generator");
    return static_cast<std::size_t>(it - gens.begin());
  };

  UnionFind uf(gens.size());
  // witness[g] = (h, r) with g = r^*(h), r a non-identity surjection
  std::vector<std::optional<std::pair<std::size_t, OrdinalMap>>> witness(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const SdGenerator& gen = gens[g];
    const int n = gen.sigma.dim;
    const unsigned top = gen.chain.back();
    for (int i = 0; i <= n; ++i) {
      if (top >> i & 1u) continue;
      // (sigma, c) ~ (d_i sigma, c reindexed) = (s^* x, c') ~ (x, s(c'))
      const EzPair& face = z.face(gen.sigma, i);
      std::vector<unsigned> pushed;
      for (unsigned m : gen.chain) pushed.push_back(push_mask(drop_bit(m, i), face.degeneracy));
      std::vector<unsigned> collapsed;
      std::vector<int> r;
      for (unsigned m : pushed) {
        if (collapsed.empty() || collapsed.back() != m) collapsed.push_back(m);
        r.push_back(static_cast<int>(collapsed.size()) - 1);
      }
      const std::size_t h = id_of({face.base, collapsed});
      if (collapsed.size() == pushed.size()) {
        uf.unite(g, h);
      } else if (!witness[g]) {
        witness[g].emplace(h, OrdinalMap(std::move(r), static_cast<int>(collapsed.size()) - 1));
      }
    }
  }

  // Classes: degenerate if any member carries a witness.
  std::vector<std::optional<std::size_t>> class_witness(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (witness[g]) {
      const std::size_t root = uf.find(g);
      if (!class_witness[root]) class_witness[root] = g;
    }
  }
  std::vector<int> class_index(gens.size(), -1);
  std::vector<std::vector<std::size_t>> reps(static_cast<std::size_t>(cap + 1));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::size_t root = uf.find(g);
    if (class_witness[root] || class_index[root] >= 0) continue;
    const int k = static_cast<int>(gens[g].chain.size()) - 1;
    class_index[root] = static_cast<int>(reps[static_cast<std::size_t>(k)].size());
    reps[static_cast<std::size_t>(k)].push_back(g);  // least generator of its class
  }

  std::vector<std::optional<EzPair>> memo(gens.size());
  auto normal_form = [&](auto&& self, std::size_t g) -> EzPair {
    const std::size_t root = uf.find(g);
    if (memo[root]) return *memo[root];
    EzPair result;
    if (class_witness[root]) {
      const auto& [h, r] = *witness[*class_witness[root]];
      const EzPair inner = self(self, h);
      result = {inner.base, compose(inner.degeneracy, r)};
    } else {
      const int k = static_cast<int>(gens[g].chain.size()) - 1;
      result = EzPair::of({k, class_index[root]});
    }
    memo[root] = result;
    return result;
  };

  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(cap + 1));
  Subdivision out;
  out.representatives.resize(static_cast<std::size_t>(cap + 1));
  for (int k = 0; k <= cap; ++k) {
    for (std::size_t g : reps[static_cast<std::size_t>(k)]) {
      const SdGenerator& gen = gens[g];
      Simplex s;
      s.name = generator_name(z, gen);
      for (int i = 0; k > 0 && i <= k; ++i) {
        SdGenerator f = gen;
        f.chain.erase(f.chain.begin() + i);
        s.faces.push_back(normal_form(normal_form, id_of(f)));
      }
      levels[static_cast<std::size_t>(k)].push_back(std::move(s));
      out.representatives[static_cast<std::size_t>(k)].push_back(gen);
    }
  }
  out.complex = std::make_shared<const TruncatedSSet>(cap, std::move(levels));
  return out;
}

SSetMap pi_map(const TruncatedSSet& z, const Subdivision& sd, const NondegPoset& np,
               std::shared_ptr<const TruncatedSSet> nerve) {
  const VertexTupleIndex index(*nerve);
  SSetMap f;
  f.source = sd.complex;
  f.target = nerve;
  f.images.resize(sd.representatives.size());
  for (std::size_t k = 0; k < sd.representatives.size(); ++k) {
    for (const SdGenerator& gen : sd.representatives[k]) {
      std::vector<int> chain;
      std::vector<int> r;
      for (unsigned mask : gen.chain) {
        const EzPair restricted =
            apply_ordinal(z, EzPair::of(gen.sigma), inclusion_of(mask, gen.sigma.dim));
        const int element = static_cast<int>(np.element_of.at(restricted.base));
        if (chain.empty() || chain.back() != element) chain.push_back(element);
        r.push_back(static_cast<int>(chain.size()) - 1);
      }
      auto target = index.find(chain);
      if (!target) throw UnknownSimplex("chain missing from the nerve");
      f.images[k].push_back({*target, OrdinalMap(std::move(r), target->dim)});
    }
  }
  return f;
}

SSetMap pi_map(const TruncatedSSet& z) {
  const Subdivision sd = subdivide(z);
  const NondegPoset np = nondeg_poset(z);
  auto nerve = std::make_shared<const TruncatedSSet>(nerve_of_poset(np.poset, z.cap()));
  return pi_map(z, sd, np, std::move(nerve));
}

SSetMap last_vertex_map(const TruncatedSSet& z, const Subdivision& sd) {
  SSetMap f;
  f.source = sd.complex;
  f.target = std::make_shared<const TruncatedSSet>(z);
  f.images.resize(sd.representatives.size());
  for (std::size_t k = 0; k < sd.representatives.size(); ++k) {
    for (const SdGenerator& gen : sd.representatives[k]) {
      std::vector<int> last;
      for (unsigned mask : gen.chain) last.push_back(31 - __builtin_clz(mask));
      f.images[k].push_back(
          apply_ordinal(z, EzPair::of(gen.sigma), OrdinalMap(std::move(last), gen.sigma.dim)));
    }
  }
  return f;
}

SSetMap last_vertex_map(const TruncatedSSet& z) { return last_vertex_map(z, subdivide(z)); }

bool is_dimensionwise_bijection(const SSetMap& f) {
  for (std::size_t k = 0; k < f.images.size(); ++k) {
    std::set<int> hit;
    for (const auto& img : f.images[k]) {
      if (!img.is_nondegenerate()) return false;
      if (!hit.insert(img.base.index).second) return false;
    }
    if (hit.size() != f.target->count(static_cast<int>(k))) return false;
  }
  return f.images.size() == static_cast<std::size_t>(f.target->cap() + 1);
}

}  // namespace epx
