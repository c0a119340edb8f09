#include "epx/ep_metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "epx/errors.hpp"
#include "epx/union_find.hpp"

namespace epx {

EpMetricSpace EpMetricSpace::unchecked(std::vector<std::string> labels,
                                       std::vector<ExtDist> matrix) {
  if (matrix.size() != labels.size() * labels.size()) {
    throw std::invalid_argument("distance matrix size does not match label count");
  }
  EpMetricSpace s;
  s.labels_ = std::move(labels);
  s.matrix_ = std::move(matrix);
  return s;
}

std::optional<std::size_t> EpMetricSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::vector<ExtDist>> EpMetricSpace::rows() const {
  std::vector<std::vector<ExtDist>> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i].assign(matrix_.begin() + static_cast<std::ptrdiff_t>(i * size()),
                  matrix_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size()));
  }
  return out;
}

std::vector<ExtDist> EpMetricSpace::distinct_distances() const {
  std::vector<ExtDist> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (!d(i, j).is_inf()) out.push_back(d(i, j));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool EpMetricSpace::has_infinite_distance() const {
  return std::any_of(matrix_.begin(), matrix_.end(), [](ExtDist v) { return v.is_inf(); });
}

namespace {

void check_labels_distinct(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate point label: " + l);
  }
}

void check_axioms(const std::vector<std::string>& labels, const std::vector<ExtDist>& m,
                  double tolerance) {
  const std::size_t n = labels.size();
  auto at = [&](std::size_t i, std::size_t j) { return m[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != ExtDist{}) throw AxiomViolation("reflexivity", "(" + labels[i] + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) {
        throw AxiomViolation("symmetry", "(" + labels[i] + "," + labels[j] + ")");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        ExtDist via = at(x, y) + at(y, z);
        ExtDist direct = at(x, z);
        if (direct.is_inf() ? !via.is_inf() : (!via.is_inf() && direct.value() > via.value() + tolerance)) {
          throw AxiomViolation("triangle",
                               "(" + labels[x] + "," + labels[y] + "," + labels[z] + ")");
        }
      }
    }
  }
}

}  // namespace

EpMetricSpace validate_ep_metric(std::vector<std::string> labels,
                                 const std::vector<std::vector<ExtDist>>& matrix,
                                 double tolerance) {
  const std::size_t n = matrix.size();
  if (labels.empty() && n > 0) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw std::invalid_argument("label count does not match matrix");
  std::vector<ExtDist> flat;
  flat.reserve(n * n);
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("distance matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  check_labels_distinct(labels);
  check_axioms(labels, flat, tolerance);
  return EpMetricSpace::unchecked(std::move(labels), std::move(flat));
}

void check_ep_metric(const EpMetricSpace& space, double tolerance) {
  check_labels_distinct(space.labels());
  check_axioms(space.labels(), space.matrix(), tolerance);
}

EpMetricSpace euclidean_space(const std::vector<std::vector<double>>& points,
                              std::vector<std::string> labels) {
  const std::size_t n = points.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  std::vector<std::vector<ExtDist>> m(n, std::vector<ExtDist>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].size() != points[j].size()) {
        throw std::invalid_argument("points have different dimensions");
      }
      double sq = 0.0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        const double diff = points[i][k] - points[j][k];
        sq += diff * diff;
      }
      m[i][j] = m[j][i] = ExtDist(std::sqrt(sq));
    }
  }
  // Square roots can break the triangle inequality by an ulp on near-collinear triples.
  return validate_ep_metric(std::move(labels), m, 1e-9);
}

bool same_space(const EpMetricSpace& a, const EpMetricSpace& b) { return a == b; }

bool approx_same_space(const EpMetricSpace& a, const EpMetricSpace& b, double tol) {
  if (a.labels() != b.labels()) return false;
  for (std::size_t i = 0; i < a.matrix().size(); ++i) {
    if (!approx_equal(a.matrix()[i], b.matrix()[i], tol)) return false;
  }
  return true;
}

bool is_nonexpanding(const PointMap& f, const EpMetricSpace& x, const EpMetricSpace& y) {
  if (f.size() != x.size()) throw UnknownPoint("map is not total on the source space");
  for (std::size_t v : f) {
    if (v >= y.size()) throw UnknownPoint(fmt::format("image index {} not in target", v));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (y.d(f[i], f[j]) > x.d(i, j)) return false;
    }
  }
  return true;
}

bool is_nonexpanding(const std::map<std::string, std::string>& f, const EpMetricSpace& x,
                     const EpMetricSpace& y) {
  PointMap indices(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto it = f.find(x.label(i));
    if (it == f.end()) throw UnknownPoint("map undefined on " + x.label(i));
    auto target = y.index_of(it->second);
    if (!target) throw UnknownPoint("image " + it->second + " not in target");
    indices[i] = *target;
  }
  return is_nonexpanding(indices, x, y);
}

EpMorphism make_morphism(EpMetricSpace source, EpMetricSpace target, PointMap map) {
  if (!is_nonexpanding(map, source, target)) {
    throw std::invalid_argument("map is not non-expanding");
  }
  return EpMorphism{std::move(source), std::move(target), std::move(map)};
}

EpMetricSpace standard_space(std::size_t n, ExtDist s) {
  std::vector<std::string> labels;
  std::vector<ExtDist> m((n + 1) * (n + 1), s);
  for (std::size_t i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    m[i * (n + 1) + i] = ExtDist{};
  }
  return EpMetricSpace::unchecked(std::move(labels), std::move(m));
}

Cocone coproduct(std::span<const EpMetricSpace> spaces) {
  std::size_t total = 0;
  for (const auto& s : spaces) total += s.size();
  std::vector<std::string> labels;
  labels.reserve(total);
  std::vector<ExtDist> m(total * total, ExtDist::inf());
  Cocone out;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    const auto& s = spaces[k];
    PointMap leg(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      labels.push_back(fmt::format("{}/{}", k, s.label(i)));
      leg[i] = offset + i;
      for (std::size_t j = 0; j < s.size(); ++j) {
        m[(offset + i) * total + offset + j] = s.d(i, j);
      }
    }
    out.legs.push_back(std::move(leg));
    offset += s.size();
  }
  out.apex = EpMetricSpace::unchecked(std::move(labels), std::move(m));
  return out;
}

void floyd_warshall(std::vector<ExtDist>& w, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtDist ik = w[i * n + k];
      if (ik.is_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const ExtDist via = ik + w[k * n + j];
        if (via < w[i * n + j]) w[i * n + j] = via;
      }
    }
  }
}

EpMetricSpace quotient_metric(const EpMetricSpace& x, const PointMap& p,
                              std::vector<std::string> target_labels) {
  const std::size_t n = x.size();
  const std::size_t m = target_labels.size();
  if (p.size() != n) throw UnknownPoint("projection is not total");
  std::vector<std::size_t> representative(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] >= m) throw UnknownPoint(fmt::format("projection value {} out of range", p[i]));
    if (representative[p[i]] == n) representative[p[i]] = i;
  }
  for (std::size_t c = 0; c < m; ++c) {
    if (representative[c] == n) throw NotSurjective("no point maps to " + target_labels[c]);
  }
  // Identified points are joined by weight-zero edges; polygonal paths become graph paths.
  std::vector<ExtDist> w = x.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p[i] == p[j]) w[i * n + j] = ExtDist{};
    }
  }
  floyd_warshall(w, n);
  std::vector<ExtDist> out(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      out[a * m + b] = a == b ? ExtDist{} : w[representative[a] * n + representative[b]];
    }
  }
  return EpMetricSpace::unchecked(std::move(target_labels), std::move(out));
}

std::string class_label(std::vector<std::string> members) {
  if (members.size() == 1) return members.front();
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  return out + "}";
}

Quotient quotient_by_relation(const EpMetricSpace& x,
                              std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t n = x.size();
  UnionFind uf(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw UnknownPoint("relation refers to a point outside the space");
    uf.unite(a, b);
  }
  // Classes ordered by least member.
  std::vector<std::size_t> class_of_root(n, n);
  PointMap p(n);
  std::vector<std::vector<std::string>> members;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (class_of_root[r] == n) {
      class_of_root[r] = members.size();
      members.emplace_back();
    }
    p[i] = class_of_root[r];
    members[p[i]].push_back(x.label(i));
  }
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (auto& m : members) labels.push_back(class_label(std::move(m)));
  Quotient q;
  q.space = quotient_metric(x, p, std::move(labels));
  q.projection = std::move(p);
  return q;
}

Quotient coequalizer(const EpMorphism& f, const EpMorphism& g) {
  if (f.source != g.source || f.target != g.target) {
    throw std::invalid_argument("coequalizer needs parallel morphisms");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < f.source.size(); ++a) pairs.emplace_back(f.map[a], g.map[a]);
  return quotient_by_relation(f.target, pairs);
}

Cocone pushout(const EpMorphism& f, const EpMorphism& g) {
  if (f.source != g.source) throw std::invalid_argument("pushout needs a common source");
  const std::vector<EpMetricSpace> legs{f.target, g.target};
  Cocone sum = coproduct(legs);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < f.source.size(); ++a) {
    pairs.emplace_back(sum.legs[0][f.map[a]], sum.legs[1][g.map[a]]);
  }
  Quotient q = quotient_by_relation(sum.apex, pairs);
  Cocone out;
  out.apex = std::move(q.space);
  for (const auto& leg : sum.legs) {
    PointMap composed(leg.size());
    for (std::size_t i = 0; i < leg.size(); ++i) composed[i] = q.projection[leg[i]];
    out.legs.push_back(std::move(composed));
  }
  return out;
}

EpMetricSpace induced_subspace(const EpMetricSpace& x, std::span<const std::size_t> subset) {
  std::vector<std::string> labels;
  std::vector<ExtDist> m;
  m.reserve(subset.size() * subset.size());
  for (std::size_t i : subset) {
    if (i >= x.size()) throw UnknownPoint(fmt::format("point index {} out of range", i));
    labels.push_back(x.label(i));
  }
  check_labels_distinct(labels);
  for (std::size_t i : subset) {
    for (std::size_t j : subset) m.push_back(x.d(i, j));
  }
  return EpMetricSpace::unchecked(std::move(labels), std::move(m));
}

EpMetricSpace induced_subspace(const EpMetricSpace& x, const std::vector<std::string>& subset) {
  std::vector<std::size_t> idx;
  for (const auto& l : subset) {
    auto i = x.index_of(l);
    if (!i) throw UnknownPoint("unknown point " + l);
    idx.push_back(*i);
  }
  return induced_subspace(x, idx);
}

EpMetricSpace subspace_pushout(const EpMetricSpace& ambient, std::span<const std::size_t> xs,
                               std::span<const std::size_t> ys) {
  std::vector<std::size_t> common;
  for (std::size_t i : xs) {
    if (std::find(ys.begin(), ys.end(), i) != ys.end()) common.push_back(i);
  }
  auto position = [](std::span<const std::size_t> in, std::size_t v) {
    return static_cast<std::size_t>(std::find(in.begin(), in.end(), v) - in.begin());
  };
  const EpMetricSpace x = induced_subspace(ambient, xs);
  const EpMetricSpace y = induced_subspace(ambient, ys);
  const EpMetricSpace a = induced_subspace(ambient, common);
  PointMap fa, ga;
  for (std::size_t v : common) {
    fa.push_back(position(xs, v));
    ga.push_back(position(ys, v));
  }
  Cocone po = pushout(EpMorphism{a, x, fa}, EpMorphism{a, y, ga});

  // Relabel and reorder the classes by ambient index.
  std::vector<std::size_t> ambient_of_class(po.apex.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ambient_of_class[po.legs[0][i]] = xs[i];
  for (std::size_t i = 0; i < ys.size(); ++i) ambient_of_class[po.legs[1][i]] = ys[i];
  std::vector<std::size_t> order(po.apex.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return ambient_of_class[l] < ambient_of_class[r];
  });
  std::vector<std::string> labels;
  std::vector<ExtDist> m;
  for (std::size_t c : order) labels.push_back(ambient.label(ambient_of_class[c]));
  for (std::size_t c : order) {
    for (std::size_t e : order) m.push_back(po.apex.d(c, e));
  }
  return EpMetricSpace::unchecked(std::move(labels), std::move(m));
}

Quotient metric_identification(const EpMetricSpace& x) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x.d(i, j) == ExtDist{}) pairs.emplace_back(i, j);
    }
  }
  return quotient_by_relation(x, pairs);
}

Cocone colimit(std::span<const EpMetricSpace> objects, std::span<const DiagramArrow> arrows) {
  Cocone sum = coproduct(objects);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& arrow : arrows) {
    if (arrow.from >= objects.size() || arrow.to >= objects.size()) {
      throw std::invalid_argument("diagram arrow refers to a missing object");
    }
    if (!is_nonexpanding(arrow.map, objects[arrow.from], objects[arrow.to])) {
      throw std::invalid_argument("diagram arrow is not non-expanding");
    }
    for (std::size_t i = 0; i < arrow.map.size(); ++i) {
      pairs.emplace_back(sum.legs[arrow.from][i], sum.legs[arrow.to][arrow.map[i]]);
    }
  }
  Quotient q = quotient_by_relation(sum.apex, pairs);
  Cocone out;
  out.apex = std::move(q.space);
  for (const auto& leg : sum.legs) {
    PointMap composed(leg.size());
    for (std::size_t i = 0; i < leg.size(); ++i) composed[i] = q.projection[leg[i]];
    out.legs.push_back(std::move(composed));
  }
  return out;
}

}  // namespace epx
