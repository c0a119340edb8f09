#include "epx/systems.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

#include "epx/errors.hpp"
#include "epx/union_find.hpp"

namespace epx {

FilteredSSet::FilteredSSet(std::vector<ExtDist> critical_values,
                           std::vector<std::shared_ptr<const TruncatedSSet>> stages,
                           std::vector<SSetMap> inclusions, int cap)
    : critical_values_(std::move(critical_values)),
      stages_(std::move(stages)),
      inclusions_(std::move(inclusions)),
      cap_(cap) {
  if (critical_values_.size() != stages_.size()) {
    throw std::invalid_argument("one stage per critical value is required");
  }
  if (!stages_.empty() && inclusions_.size() + 1 != stages_.size()) {
    throw std::invalid_argument("one inclusion between consecutive stages is required");
  }
}

FilteredSSet FilteredSSet::from_named_stages(std::vector<ExtDist> critical_values,
                                             std::vector<TruncatedSSet> stages, int cap) {
  std::vector<std::shared_ptr<const TruncatedSSet>> ptrs;
  for (auto& s : stages) ptrs.push_back(std::make_shared<const TruncatedSSet>(std::move(s)));
  std::vector<SSetMap> inclusions;
  for (std::size_t i = 0; i + 1 < ptrs.size(); ++i) {
    const TruncatedSSet& from = *ptrs[i];
    const TruncatedSSet& to = *ptrs[i + 1];
    std::map<std::string, int> vertex_of;
    for (int v = 0; v < static_cast<int>(to.count(0)); ++v) vertex_of[to.vertex_name(v)] = v;
    std::vector<int> vmap;
    for (int v = 0; v < static_cast<int>(from.count(0)); ++v) {
      auto it = vertex_of.find(from.vertex_name(v));
      if (it == vertex_of.end()) {
        throw UnknownVertex("vertex " + from.vertex_name(v) + " disappears in a later stage");
      }
      vmap.push_back(it->second);
    }
    const VertexTupleIndex index(to);
    SSetMap inc;
    inc.source = ptrs[i];
    inc.target = ptrs[i + 1];
    inc.images.resize(static_cast<std::size_t>(from.cap() + 1));
    for (int n = 0; n <= from.cap(); ++n) {
      for (const auto& s : from.level(n)) {
        std::vector<int> t;
        for (int v : s.vertices) t.push_back(vmap[static_cast<std::size_t>(v)]);
        auto ref = index.find(t);
        if (!ref) throw UnknownSimplex("simplex " + s.name + " disappears in a later stage");
        inc.images[static_cast<std::size_t>(n)].push_back(EzPair::of(*ref));
      }
    }
    inclusions.push_back(std::move(inc));
  }
  return FilteredSSet(std::move(critical_values), std::move(ptrs), std::move(inclusions), cap);
}

int FilteredSSet::stage_index_at(ExtDist s) const {
  int idx = -1;
  for (std::size_t i = 0; i < critical_values_.size(); ++i) {
    if (critical_values_[i] <= s) idx = static_cast<int>(i);
  }
  return idx;
}

std::vector<std::vector<std::size_t>> FilteredSSet::birth_stages(std::size_t j) const {
  std::vector<std::vector<std::size_t>> birth;
  for (std::size_t i = 0; i <= j; ++i) {
    std::vector<std::vector<std::size_t>> next(static_cast<std::size_t>(stages_[i]->cap() + 1));
    for (int n = 0; n <= stages_[i]->cap(); ++n) {
      next[static_cast<std::size_t>(n)].assign(stages_[i]->count(n), i);
    }
    if (i > 0) {
      const SSetMap& inc = inclusions_[i - 1];
      for (std::size_t n = 0; n < birth.size() && n < next.size(); ++n) {
        for (std::size_t k = 0; k < birth[n].size(); ++k) {
          const auto target = static_cast<std::size_t>(inc.images[n][k].base.index);
          next[n][target] = std::min(next[n][target], birth[n][k]);
        }
      }
    }
    birth = std::move(next);
  }
  return birth;
}

std::string check_filtered(const FilteredSSet& f) {
  const auto& cv = f.critical_values();
  for (std::size_t i = 1; i < cv.size(); ++i) {
    if (!(cv[i - 1] < cv[i])) return fmt::format("critical values not increasing at {}", i);
  }
  for (std::size_t i = 0; i + 1 < f.stage_count(); ++i) {
    const SSetMap& inc = f.inclusion(i);
    if (auto v = validate_map(inc); !v) return fmt::format("inclusion {}: {}", i, v.witness);
    for (const auto& lvl : inc.images) {
      std::set<SimplexRef> seen;
      for (const auto& img : lvl) {
        if (!img.is_nondegenerate() || !seen.insert(img.base).second) {
          return fmt::format("inclusion {} is not injective on non-degenerate simplices", i);
        }
      }
    }
  }
  return {};
}

TruncatedSSet evaluate_at(const FilteredSSet& f, ExtDist s) {
  const int idx = f.stage_index_at(s);
  if (idx < 0) return TruncatedSSet(f.cap());
  return f.stage(static_cast<std::size_t>(idx));
}

FilteredSSet represent(ExtDist s, const TruncatedSSet& k) {
  return FilteredSSet({s}, {std::make_shared<const TruncatedSSet>(k)}, {}, k.cap());
}

namespace {

void extend_increasing(const EpMetricSpace& x, const std::vector<int>& allowed, ExtDist t, int cap,
                       std::vector<int>& tuple, std::vector<std::vector<std::vector<int>>>& out) {
  const int n = static_cast<int>(tuple.size()) - 1;
  if (n >= 1) out[static_cast<std::size_t>(n)].push_back(tuple);
  if (n == cap) return;
  for (int next = tuple.back() + 1; next < static_cast<int>(allowed.size()); ++next) {
    const auto p = static_cast<std::size_t>(allowed[static_cast<std::size_t>(next)]);
    bool ok = true;
    for (int v : tuple) {
      if (x.d(static_cast<std::size_t>(allowed[static_cast<std::size_t>(v)]), p) > t) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    tuple.push_back(next);
    extend_increasing(x, allowed, t, cap, tuple, out);
    tuple.pop_back();
  }
}

// Full subcomplex of V_t(X) on the listed points (kept in input order).
TruncatedSSet vr_on(const EpMetricSpace& x, const std::vector<int>& allowed, ExtDist t, int cap) {
  std::vector<std::string> names;
  for (int p : allowed) names.push_back(x.label(static_cast<std::size_t>(p)));
  std::vector<std::vector<std::vector<int>>> tuples(static_cast<std::size_t>(cap + 1));
  std::vector<int> tuple;
  for (int v = 0; v < static_cast<int>(allowed.size()); ++v) {
    tuple.assign(1, v);
    extend_increasing(x, allowed, t, cap, tuple, tuples);
  }
  return tuple_complex(std::move(names), tuples, cap);
}

}  // namespace

TruncatedSSet vr_complex(const EpMetricSpace& x, ExtDist t, int cap) {
  std::vector<int> all(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) all[i] = static_cast<int>(i);
  return vr_on(x, all, t, cap);
}

std::vector<ExtDist> metric_critical_values(const EpMetricSpace& x) {
  std::vector<ExtDist> cv = x.distinct_distances();
  if (cv.empty() || cv.front() != ExtDist{}) cv.insert(cv.begin(), ExtDist{});
  if (x.has_infinite_distance()) cv.push_back(ExtDist::inf());
  return cv;
}

FilteredSSet vr_system(const EpMetricSpace& x, int cap) {
  std::vector<ExtDist> cv = metric_critical_values(x);
  std::vector<TruncatedSSet> stages;
  for (ExtDist t : cv) stages.push_back(vr_complex(x, t, cap));
  return FilteredSSet::from_named_stages(std::move(cv), std::move(stages), cap);
}

TruncatedSSet degree_rips_complex(const EpMetricSpace& x, std::size_t k, ExtDist t, int cap) {
  if (k < 1 || k > x.size()) {
    throw BadDegree(fmt::format("degree {} outside 1..{}", k, x.size()));
  }
  std::vector<int> allowed;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t near = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x.d(i, j) <= t) ++near;
    }
    if (near >= k) allowed.push_back(static_cast<int>(i));
  }
  return vr_on(x, allowed, t, cap);
}

FilteredSSet degree_rips_system(const EpMetricSpace& x, std::size_t k, int cap) {
  if (k < 1 || k > x.size()) {
    throw BadDegree(fmt::format("degree {} outside 1..{}", k, x.size()));
  }
  std::vector<ExtDist> cv = metric_critical_values(x);
  std::vector<TruncatedSSet> stages;
  for (ExtDist t : cv) stages.push_back(degree_rips_complex(x, k, t, cap));
  return FilteredSSet::from_named_stages(std::move(cv), std::move(stages), cap);
}

SubsetPosetSystem subset_poset_system(const EpMetricSpace& x, ExtDist s, int cap) {
  const std::size_t n = x.size();
  if (n > 20) throw std::invalid_argument("subset posets are limited to 20 points");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((mask >> j & 1u) && x.d(i, j) > s) {
          ok = false;
          break;
        }
      }
    }
    if (ok) masks.push_back(mask);
  }
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  SubsetPosetSystem out;
  std::vector<std::string> names;
  for (std::uint32_t mask : masks) {
    std::vector<std::size_t> members;
    std::string name = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        if (!members.empty()) name += ',';
        name += x.label(i);
        members.push_back(i);
      }
    }
    names.push_back(name + "}");
    out.subsets.push_back(std::move(members));
  }
  const std::size_t m = masks.size();
  std::vector<char> leq(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if ((masks[a] & masks[b]) == masks[a]) leq[a * m + b] = 1;
    }
  }
  out.poset = Poset(std::move(names), std::move(leq));
  out.nerve = nerve_of_poset(out.poset, cap);
  return out;
}

FilteredSSet one_skeleton(const FilteredSSet& f) {
  const int cap = std::min(f.cap(), 1);
  std::vector<std::shared_ptr<const TruncatedSSet>> stages;
  for (std::size_t i = 0; i < f.stage_count(); ++i) {
    stages.push_back(std::make_shared<const TruncatedSSet>(f.stage(i).skeleton(1)));
  }
  std::vector<SSetMap> inclusions;
  for (std::size_t i = 0; i + 1 < f.stage_count(); ++i) {
    SSetMap inc;
    inc.source = stages[i];
    inc.target = stages[i + 1];
    const auto& images = f.inclusion(i).images;
    inc.images.assign(images.begin(),
                      images.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(images.size()),
                                                                stages[i]->cap() + 1));
    inclusions.push_back(std::move(inc));
  }
  return FilteredSSet(f.critical_values(), std::move(stages), std::move(inclusions), cap);
}

Barcode pi0_barcode(const FilteredSSet& f) {
  struct Component {
    ExtDist birth;
    std::string label;
  };
  UnionFind uf;
  std::vector<Component> info;  // indexed by union-find element, valid at roots
  std::vector<std::size_t> global;  // stage-local vertex -> element
  Barcode bars;
  for (std::size_t i = 0; i < f.stage_count(); ++i) {
    const TruncatedSSet& st = f.stage(i);
    const ExtDist t = f.critical_values()[i];
    std::vector<std::size_t> next(st.count(0), SIZE_MAX);
    if (i > 0) {
      const auto& vimg = f.inclusion(i - 1).images[0];
      for (std::size_t v = 0; v < vimg.size(); ++v) {
        next[static_cast<std::size_t>(vimg[v].base.index)] = global[v];
      }
    }
    for (std::size_t v = 0; v < next.size(); ++v) {
      if (next[v] != SIZE_MAX) continue;
      next[v] = uf.add();
      info.push_back({t, st.vertex_name(static_cast<int>(v))});
    }
    global = std::move(next);
    if (st.cap() < 1) continue;
    for (const auto& e : st.level(1)) {
      std::size_t a = uf.find(global[static_cast<std::size_t>(e.vertices[0])]);
      std::size_t b = uf.find(global[static_cast<std::size_t>(e.vertices[1])]);
      if (a == b) continue;
      const bool a_survives = info[a].birth < info[b].birth ||
                              (info[a].birth == info[b].birth && info[a].label < info[b].label);
      const Component survivor = a_survives ? info[a] : info[b];
      const Component dying = a_survives ? info[b] : info[a];
      if (dying.birth < t) bars.push_back({dying.birth, t, dying.label});
      uf.unite(a, b);
      info[uf.find(a)] = survivor;
    }
  }
  for (std::size_t e = 0; e < uf.size(); ++e) {
    if (uf.find(e) == e) bars.push_back({info[e].birth, ExtDist::inf(), info[e].label, true});
  }
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death != b.death) return b.death < a.death;
    if (a.essential != b.essential) return a.essential;
    return a.representative < b.representative;
  });
  return bars;
}

std::size_t bars_alive_at(const Barcode& b, ExtDist s) {
  std::size_t n = 0;
  for (const auto& bar : b) {
    if (bar.birth <= s && (s < bar.death || bar.essential)) ++n;
  }
  return n;
}

}  // namespace epx
