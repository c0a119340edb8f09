#include "epx/adjunction.hpp"

#include <algorithm>
#include <deque>

#include "epx/errors.hpp"

namespace epx {

namespace {

EpMetricSpace edge_metric(const TruncatedSSet& stage, const std::vector<ExtDist>& edge_weight) {
  const std::size_t n = stage.count(0);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(stage.vertex_name(static_cast<int>(v)));
  std::vector<ExtDist> w(n * n, ExtDist::inf());
  for (std::size_t v = 0; v < n; ++v) w[v * n + v] = ExtDist{};
  if (stage.cap() >= 1) {
    const auto& edges = stage.level(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto a = static_cast<std::size_t>(edges[e].vertices[0]);
      const auto b = static_cast<std::size_t>(edges[e].vertices[1]);
      if (a == b) continue;
      w[a * n + b] = min(w[a * n + b], edge_weight[e]);
      w[b * n + a] = w[a * n + b];
    }
  }
  floyd_warshall(w, n);
  return EpMetricSpace::unchecked(std::move(labels), std::move(w));
}

EpMetricSpace realize_stage(const FilteredSSet& f, std::size_t j) {
  const TruncatedSSet& stage = f.stage(j);
  std::vector<ExtDist> weight;
  if (stage.cap() >= 1) {
    const auto birth = f.birth_stages(j);
    for (std::size_t b : birth[1]) weight.push_back(f.critical_values()[b]);
  }
  return edge_metric(stage, weight);
}

void extend_walks(const EpMetricSpace& y, ExtDist s, int cap, std::vector<int>& tuple,
                  std::vector<std::vector<std::vector<int>>>& out) {
  const int n = static_cast<int>(tuple.size()) - 1;
  if (n >= 1) out[static_cast<std::size_t>(n)].push_back(tuple);
  if (n == cap) return;
  for (int next = 0; next < static_cast<int>(y.size()); ++next) {
    if (next == tuple.back()) continue;
    bool ok = true;
    for (int v : tuple) {
      if (y.d(static_cast<std::size_t>(v), static_cast<std::size_t>(next)) > s) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    tuple.push_back(next);
    extend_walks(y, s, cap, tuple, out);
    tuple.pop_back();
  }
}

}  // namespace

EpMetricSpace realize(const FilteredSSet& f) {
  if (f.stage_count() == 0) return {};
  return realize_stage(f, f.stage_count() - 1);
}

EpMetricSpace partial_realize(const FilteredSSet& f, ExtDist s) {
  const int idx = f.stage_index_at(s);
  if (idx < 0) return {};
  return realize_stage(f, static_cast<std::size_t>(idx));
}

EpMetricSpace realize_representable(ExtDist s, const TruncatedSSet& k) {
  if (!(ExtDist{} < s)) throw std::invalid_argument("representable realization needs s > 0");
  const std::size_t n = k.count(0);
  std::vector<std::vector<std::size_t>> adj(n);
  if (k.cap() >= 1) {
    for (const auto& e : k.level(1)) {
      const auto a = static_cast<std::size_t>(e.vertices[0]);
      const auto b = static_cast<std::size_t>(e.vertices[1]);
      if (a == b) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::vector<std::string> labels;
  std::vector<ExtDist> m(n * n, ExtDist::inf());
  for (std::size_t src = 0; src < n; ++src) {
    labels.push_back(k.vertex_name(static_cast<int>(src)));
    std::vector<long long> hops(n, -1);
    hops[src] = 0;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[v]) {
        if (hops[w] < 0) {
          hops[w] = hops[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (hops[v] >= 0) m[src * n + v] = s * hops[v];
    }
  }
  return EpMetricSpace::unchecked(std::move(labels), std::move(m));
}

TruncatedSSet singular_at(const EpMetricSpace& y, ExtDist s, int cap) {
  std::vector<std::vector<std::vector<int>>> tuples(static_cast<std::size_t>(cap + 1));
  std::vector<int> tuple;
  for (int v = 0; v < static_cast<int>(y.size()); ++v) {
    tuple.assign(1, v);
    extend_walks(y, s, cap, tuple, tuples);
  }
  return tuple_complex(y.labels(), tuples, cap);
}

FilteredSSet singular_system(const EpMetricSpace& y, int cap) {
  std::vector<ExtDist> cv = metric_critical_values(y);
  std::vector<TruncatedSSet> stages;
  for (ExtDist t : cv) stages.push_back(singular_at(y, t, cap));
  return FilteredSSet::from_named_stages(std::move(cv), std::move(stages), cap);
}

SSetMap counit_vr(const EpMetricSpace& x, ExtDist t, int cap) {
  SSetMap eta;
  eta.source = std::make_shared<const TruncatedSSet>(vr_complex(x, t, cap));
  eta.target = std::make_shared<const TruncatedSSet>(singular_at(x, t, cap));
  const VertexTupleIndex index(*eta.target);
  eta.images.resize(static_cast<std::size_t>(cap + 1));
  for (int n = 0; n <= cap; ++n) {
    for (const auto& s : eta.source->level(n)) {
      auto ref = index.find(s.vertices);
      if (!ref) throw UnknownSimplex("no singular simplex for " + s.name);
      eta.images[static_cast<std::size_t>(n)].push_back(EzPair::of(*ref));
    }
  }
  return eta;
}

std::vector<int> distinct_list(const std::vector<int>& tuple) {
  std::vector<int> out = tuple;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EtaPoset eta_poset(const EpMetricSpace& x, ExtDist t, int cap) {
  const SSetMap eta = counit_vr(x, t, cap);
  EtaPoset out;
  out.vr = eta.source;
  out.singular = eta.target;
  out.source = nondeg_poset(*out.vr);
  out.target = nondeg_poset(*out.singular);
  for (const SimplexRef& ref : out.source.elements) {
    out.eta.push_back(out.target.element_of.at(eta.image(ref).base));
  }
  const VertexTupleIndex vr_index(*out.vr);
  for (const SimplexRef& ref : out.target.elements) {
    auto hit = vr_index.find(distinct_list(out.singular->simplex(ref).vertices));
    if (!hit) throw UnknownSimplex("distinct list of " + out.singular->simplex(ref).name);
    out.ell.push_back(out.source.element_of.at(*hit));
  }
  return out;
}

}  // namespace epx
