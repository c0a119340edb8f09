#include "epx/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include <fmt/format.h>

#include "epx/adjunction.hpp"
#include "epx/errors.hpp"
#include "epx/homology.hpp"
#include "epx/oracles.hpp"
#include "epx/parallel.hpp"
#include "epx/poset.hpp"
#include "epx/subdivision.hpp"
#include "epx/systems.hpp"

namespace epx {

namespace {

constexpr double kEuclideanTol = 1e-9;

// Portable draws: the standard distributions are implementation-defined.
struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen() % n); }
  std::mt19937_64 gen;
};

std::uint64_t instance_seed(std::uint64_t seed, std::size_t i) { return seed * 1000003ULL + i; }

std::size_t corpus_size(std::size_t i, std::size_t max_points) {
  return 2 + i % std::max<std::size_t>(max_points - 1, 1);
}

struct Outcome {
  std::vector<Check> checks;
  std::vector<CompareRow> rows;

  void add(std::string id, std::string property, bool passed, std::string witness = {}) {
    checks.push_back({std::move(id), std::move(property), passed, passed ? std::string{} : std::move(witness)});
  }
};

struct Task {
  std::string name;
  std::function<void(Outcome&)> run;
};

void run_tasks(SuiteReport& report, const std::vector<Task>& tasks) {
  std::vector<Outcome> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    try {
      tasks[i].run(results[i]);
    } catch (const std::exception& e) {
      results[i].add("error/" + tasks[i].name, "completes without raising", false, e.what());
    }
  });
  for (auto& out : results) {
    for (auto& c : out.checks) report.add(c.id, c.property, c.passed, c.witness);
    for (auto& row : out.rows) report.rows.push_back(std::move(row));
  }
}

std::string space_witness(const std::string& corpus, std::uint64_t seed, std::size_t i) {
  return fmt::format("corpus={} seed={} index={}", corpus, seed, i);
}

// Empty when the matrices agree (exactly for tol == 0); otherwise the first bad pair.
std::string compare_spaces(const EpMetricSpace& a, const EpMetricSpace& b, double tol) {
  if (a.labels() != b.labels()) return "labels differ";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const bool ok = tol == 0.0 ? a.d(i, j) == b.d(i, j) : approx_equal(a.d(i, j), b.d(i, j), tol);
      if (!ok) {
        return fmt::format("d({},{}) = {} vs {}", a.label(i), a.label(j), a.d(i, j).to_string(),
                           b.d(i, j).to_string());
      }
    }
  }
  return {};
}

std::string compare_flat(const std::vector<ExtDist>& a, const std::vector<ExtDist>& b, double tol) {
  if (a.size() != b.size()) return "sizes differ";
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool ok = tol == 0.0 ? a[i] == b[i] : approx_equal(a[i], b[i], tol);
    if (!ok) return fmt::format("entry {}: {} vs {}", i, a[i].to_string(), b[i].to_string());
  }
  return {};
}

bool is_point_homology(const HomologyResult& h) {
  for (const auto& g : h.groups) {
    if (g.betti != (g.degree == 0 ? 1 : 0) || !g.torsion.empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- compare

void check_subdivision(const TruncatedSSet& z, int kmax, const std::string& id, const std::string& where,
                       Outcome& out) {
  const Subdivision sd = subdivide(z, kmax + 1);
  const NondegPoset np = nondeg_poset(z);
  auto nerve = std::make_shared<const TruncatedSSet>(nerve_of_poset(np.poset, kmax + 1));
  const SSetMap pi = pi_map(z, sd, np, nerve);
  const SSetMap gamma = last_vertex_map(z, sd);
  std::string witness;
  if (auto v = validate_map(pi); !v) witness = "pi: " + v.witness;
  if (witness.empty() && !is_dimensionwise_bijection(pi)) witness = "pi is not a dimensionwise bijection";
  if (auto v = validate_map(gamma); witness.empty() && !v) witness = "gamma: " + v.witness;
  const HomologyResult hz = homology(z, kmax);
  const HomologyResult hsd = homology(*sd.complex, kmax);
  const HomologyResult hn = homology(*nerve, kmax);
  if (witness.empty() && !(hz == hsd && hz == hn)) {
    witness = fmt::format("Z {} / sd {} / BN {}", format_homology(hz), format_homology(hsd),
                          format_homology(hn));
  }
  out.add(id, "pi: sd(Z) -> BNZ is a bijection and Z, sd(Z), BNZ have equal homology",
          witness.empty(), where + " " + witness);
}

void compare_stage(const EpMetricSpace& x, ExtDist t, int cap, int kmax, const std::string& inst,
                   const std::string& where, Outcome& out) {
  const std::string at = fmt::format("{}t={}", inst, t.to_string());
  const std::string w = fmt::format("{} t={}", where, t.to_string());
  const TruncatedSSet v = vr_complex(x, t, cap);
  const TruncatedSSet s = singular_at(x, t, cap);

  const auto cv = path_components(v);
  const auto cs = path_components(s);
  out.add("pi0/" + at, "eta induces a bijection on path components", cv == cs,
          fmt::format("{} components {} vs {}", w, cv.size(), cs.size()));

  const HomologyResult hv = homology(v, kmax);
  const HomologyResult hs = homology(s, kmax);
  for (int k = 0; k <= kmax; ++k) {
    const auto& a = hv.groups[static_cast<std::size_t>(k)];
    const auto& b = hs.groups[static_cast<std::size_t>(k)];
    out.rows.push_back({t, k, a.betti, b.betti, a.torsion, b.torsion, a == b});
  }
  out.add("homology/" + at, "V_t(X) and S_t(X) have equal integral homology", hv == hs,
          fmt::format("{} V: {} S: {}", w, format_homology(hv), format_homology(hs)));

  const SSetMap eta = counit_vr(x, t, cap);
  bool eta_ok = static_cast<bool>(validate_map(eta));
  for (const auto& lvl : eta.images) {
    for (const auto& img : lvl) eta_ok = eta_ok && img.is_nondegenerate();
  }
  out.add("eta/" + at, "eta commutes with faces and keeps simplices non-degenerate", eta_ok, w);

  const EtaPoset ep = eta_poset(x, t, cap);
  bool retract = true;
  for (std::size_t i = 0; i < ep.eta.size(); ++i) retract = retract && ep.ell[ep.eta[i]] == i;
  const bool eta_monotone = is_order_preserving(ep.source.poset, ep.target.poset, ep.eta);
  const bool ell_monotone = is_order_preserving(ep.target.poset, ep.source.poset, ep.ell);
  out.add("poset-maps/" + at, "eta_* and L are order-preserving and L eta_* is the identity",
          retract && eta_monotone && ell_monotone,
          fmt::format("{} retract={} eta_monotone={} L_monotone={}", w, retract, eta_monotone, ell_monotone));

  const HomologyResult hnv = homology(nerve_of_poset(ep.source.poset, kmax + 1), kmax);
  const HomologyResult hns = homology(nerve_of_poset(ep.target.poset, kmax + 1), kmax);
  out.add("poset-nerves/" + at, "the nerves of NV_t(X) and NS_t(X) have equal homology", hnv == hns,
          fmt::format("{} BNV: {} BNS: {}", w, format_homology(hnv), format_homology(hns)));

  check_subdivision(v, kmax, "subdivision/" + at, w, out);
}

void compare_into(std::vector<Task>& tasks, const EpMetricSpace& x, int cap, int kmax,
                  const std::vector<ExtDist>& ts, const std::string& inst, const std::string& where) {
  const std::vector<ExtDist> values = ts.empty() ? metric_critical_values(x) : ts;
  for (ExtDist t : values) {
    tasks.push_back({fmt::format("{}t={}", inst, t.to_string()),
                     [x, t, cap, kmax, inst, where](Outcome& out) {
                       compare_stage(x, t, cap, kmax, inst, where, out);
                     }});
  }
}

void require_caps(int cap, int kmax) {
  if (kmax < 0 || kmax > cap - 1) {
    throw CapTooLow(fmt::format("kmax {} needs a dimension cap of at least {}", kmax, kmax + 1));
  }
}

// ---------------------------------------------------------------- suites

std::size_t or_default(std::size_t v, std::size_t d) { return v == 0 ? d : v; }

PointMap random_surjection(Rng& rng, std::size_t n, std::size_t& m) {
  m = 1 + rng.below(n);
  PointMap p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i < m ? i : rng.below(m);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

std::vector<std::size_t> random_subset(Rng& rng, std::size_t n) {
  std::vector<std::size_t> out;
  while (out.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.below(2)) out.push_back(i);
    }
  }
  return out;
}

template <class F>
bool throws_axiom(F&& f, const std::string& axiom) {
  try {
    f();
  } catch (const AxiomViolation& e) {
    return e.axiom() == axiom;
  }
  return false;
}

EpMetricSpace matrix_space(std::vector<std::string> labels, const std::vector<std::vector<double>>& m) {
  std::vector<std::vector<ExtDist>> rows;
  for (const auto& r : m) {
    std::vector<ExtDist> row;
    for (double v : r) row.push_back(std::isinf(v) ? ExtDist::inf() : ExtDist(v));
    rows.push_back(std::move(row));
  }
  return validate_ep_metric(std::move(labels), rows);
}

struct NamedSpace {
  std::string inst;
  std::string where;
  EpMetricSpace space;
  double tol;
};

std::vector<NamedSpace> both_corpora(const SuiteOptions& o, std::size_t euclid, std::size_t integer) {
  std::vector<NamedSpace> out;
  const auto e = euclidean_corpus(o.seed, euclid, o.max_points);
  for (std::size_t i = 0; i < e.size(); ++i) {
    out.push_back({fmt::format("euclid{}", i), space_witness("euclidean", o.seed, i), e[i], kEuclideanTol});
  }
  const auto z = integer_corpus(o.seed, integer, o.max_points);
  for (std::size_t i = 0; i < z.size(); ++i) {
    out.push_back({fmt::format("integer{}", i), space_witness("integer", o.seed, i), z[i], 0.0});
  }
  return out;
}

void suite_axioms(const SuiteOptions& o, SuiteReport& r) {
  const std::vector<ExtDist> row{ExtDist{}};
  Outcome fixed;
  fixed.add("axiom-triangle", "a triangle violation is reported with its witness",
            throws_axiom([] { matrix_space({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}); }, "triangle"));
  fixed.add("axiom-symmetry", "an asymmetric matrix is rejected",
            throws_axiom([] { matrix_space({"a", "b"}, {{0, 1}, {2, 0}}); }, "symmetry"));
  fixed.add("axiom-reflexivity", "a non-zero diagonal is rejected",
            throws_axiom([] { matrix_space({"a", "b"}, {{1, 1}, {1, 0}}); }, "reflexivity"));
  {
    const double inf = std::numeric_limits<double>::infinity();
    bool ok = true;
    try {
      matrix_space({"a", "b"}, {{0, inf}, {inf, 0}});
      matrix_space({"a"}, {{0}});
    } catch (const Error&) {
      ok = false;
    }
    fixed.add("axiom-extended", "infinite distances and single points are valid", ok);
  }
  {
    const EpMetricSpace u = standard_space(2, ExtDist(3));
    bool ok = u.size() == 3;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      for (std::size_t j = 0; j < 3; ++j) ok = ok && u.d(i, j) == (i == j ? ExtDist{} : ExtDist(3));
    }
    ok = ok && standard_space(0, ExtDist(5)).size() == 1 && standard_space(1, ExtDist::inf()).d(0, 1).is_inf();
    fixed.add("standard-space", "U^n_s has all off-diagonal distances s", ok);
  }
  {
    const EpMetricSpace u1 = standard_space(1, ExtDist(1));
    const EpMetricSpace u2 = standard_space(1, ExtDist(2));
    const bool ok = is_nonexpanding(PointMap{0, 1}, u1, u1) && is_nonexpanding(PointMap{0, 0}, u2, u1) &&
                    !is_nonexpanding(PointMap{0, 1}, u1, u2);
    fixed.add("nonexpanding", "identity and constant maps are morphisms; U^1_1 -> U^1_2 is not", ok);
  }
  {
    const EpMetricSpace x = matrix_space({"a", "b", "c"}, {{0, 0, 2}, {0, 0, 2}, {2, 2, 0}});
    const Quotient q = metric_identification(x);
    const bool ok = q.space.size() == 2 && q.space.d(0, 1) == ExtDist(2);
    fixed.add("identification-example", "collapsing d = 0 keeps the remaining distance", ok);
  }

  std::vector<Task> tasks;
  tasks.push_back({"fixed", [fixed](Outcome& out) { out = fixed; }});
  for (const auto& ns : both_corpora(o, or_default(o.count, 20), or_default(o.count, 20))) {
    tasks.push_back({ns.inst, [ns, seed = o.seed](Outcome& out) {
      const EpMetricSpace& x = ns.space;
      std::string witness;
      auto valid = [&](const EpMetricSpace& y, const char* what) {
        try {
          check_ep_metric(y, ns.tol);
        } catch (const AxiomViolation& e) {
          if (witness.empty()) witness = fmt::format("{}: {}", what, e.what());
        }
      };
      const EpMetricSpace pair[2] = {x, x};
      valid(coproduct(pair).apex, "coproduct");
      Rng rng(instance_seed(seed, 7));
      std::size_t m = 0;
      const PointMap p = random_surjection(rng, x.size(), m);
      std::vector<std::string> names;
      for (std::size_t c = 0; c < m; ++c) names.push_back(fmt::format("c{}", c));
      valid(quotient_metric(x, p, names), "quotient");
      const Quotient id = metric_identification(x);
      valid(id.space, "identification");
      const auto sub = random_subset(rng, x.size());
      valid(induced_subspace(x, sub), "subspace");
      out.add("constructors-valid/" + ns.inst, "every constructed space satisfies the axioms",
              witness.empty(), ns.where + " " + witness);

      bool ok = true;
      for (std::size_t i = 0; i < id.space.size(); ++i) {
        for (std::size_t j = 0; j < id.space.size(); ++j) {
          if (i != j && id.space.d(i, j) == ExtDist{}) ok = false;
        }
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
          if (!approx_equal(id.space.d(id.projection[i], id.projection[j]), x.d(i, j), ns.tol)) ok = false;
        }
      }
      const Quotient again = metric_identification(id.space);
      ok = ok && again.space.size() == id.space.size();
      out.add("identification/" + ns.inst,
              "identification separates points, preserves distances and is idempotent", ok, ns.where);
    }});
  }

  // Universal property of coequalizers on spaces with at most four points:
  // every coequalizing morphism alpha : X -> X factors non-expandingly.
  const auto small = both_corpora(o, or_default(o.count, 20), or_default(o.count, 20));
  for (const auto& ns : small) {
    if (ns.space.size() > 4) continue;
    tasks.push_back({"coequalizer/" + ns.inst, [ns, seed = o.seed](Outcome& out) {
      const EpMetricSpace& x = ns.space;
      const std::size_t n = x.size();
      Rng rng(instance_seed(seed, 11));
      const EpMetricSpace a = standard_space(1, ExtDist::inf());
      PointMap fmap{rng.below(n), rng.below(n)};
      PointMap gmap{rng.below(n), rng.below(n)};
      const EpMorphism f = make_morphism(a, x, fmap);
      const EpMorphism g = make_morphism(a, x, gmap);
      const Quotient c = coequalizer(f, g);
      bool ok = is_nonexpanding(c.projection, x, c.space);
      std::size_t tried = 0;
      PointMap alpha(n, 0);
      while (true) {
        const bool coequalizes = alpha[fmap[0]] == alpha[gmap[0]] && alpha[fmap[1]] == alpha[gmap[1]];
        if (coequalizes && is_nonexpanding(alpha, x, x)) {
          ++tried;
          PointMap induced(c.space.size(), SIZE_MAX);
          for (std::size_t i = 0; i < n; ++i) {
            std::size_t& slot = induced[c.projection[i]];
            if (slot != SIZE_MAX && slot != alpha[i]) ok = false;
            slot = alpha[i];
          }
          if (ok && !is_nonexpanding(induced, c.space, x)) ok = false;
        }
        std::size_t pos = 0;
        while (pos < n && ++alpha[pos] == n) alpha[pos++] = 0;
        if (pos == n) break;
      }
      out.add("coequalizer-universal/" + ns.inst,
              "maps coequalizing f and g factor through the coequalizer non-expandingly", ok && tried > 0,
              ns.where);
    }});
  }
  run_tasks(r, tasks);
}

void suite_colimits(const SuiteOptions& o, SuiteReport& r) {
  std::vector<Task> tasks;
  tasks.push_back({"fixed", [](Outcome& out) {
    const double inf = std::numeric_limits<double>::infinity();
    {
      const EpMetricSpace x = matrix_space({"a", "b", "a'", "b'"}, {{0, 1, inf, inf},
                                                                   {1, 0, inf, inf},
                                                                   {inf, inf, 0, 1},
                                                                   {inf, inf, 1, 0}});
      const EpMetricSpace q = quotient_metric(x, PointMap{0, 1, 1, 2}, {"a", "b", "b'"});
      out.add("quotient-example", "gluing b to a' gives d(a, b') = 2 through the glued point",
              q.d(0, 2) == ExtDist(2));
    }
    {
      const EpMetricSpace x = euclidean_space({{0, 0}, {0.5, 1}, {1, 0}}, {"a", "b", "c"});
      const std::size_t xs[] = {0, 1};
      const std::size_t ys[] = {1, 2};
      const EpMetricSpace m = subspace_pushout(x, xs, ys);
      const double expect = 2 * std::sqrt(1.25);
      out.add("pushout-triangle", "the pushout metric routes a to c through the shared point b",
              approx_equal(m.d(0, 2), ExtDist(expect), kEuclideanTol) && x.d(0, 2) == ExtDist(1));
    }
    {
      const EpMetricSpace one = standard_space(0, ExtDist{});
      const EpMetricSpace two[] = {one, one};
      const Cocone c = coproduct(two);
      const EpMetricSpace pair[] = {standard_space(1, ExtDist(1)), standard_space(1, ExtDist(2))};
      const Cocone d = coproduct(pair);
      const bool ok = c.apex.size() == 2 && c.apex.d(0, 1).is_inf() && d.apex.size() == 4 &&
                      d.apex.d(0, 1) == ExtDist(1) && d.apex.d(2, 3) == ExtDist(2) && d.apex.d(1, 2).is_inf();
      out.add("coproduct-example", "coproducts keep distances inside summands and put INF across", ok);
    }
  }});

  for (const auto& ns : both_corpora(o, or_default(o.count, 20), or_default(o.count, 20))) {
    tasks.push_back({"quotient/" + ns.inst, [ns, seed = o.seed](Outcome& out) {
      const EpMetricSpace& x = ns.space;
      // identity quotient first, then three random surjections
      std::string witness = compare_flat(
          oracle::polygonal_paths(x, [&] { PointMap p(x.size()); for (std::size_t i = 0; i < p.size(); ++i) p[i] = i; return p; }(), x.size()),
          x.matrix(), ns.tol);
      Rng rng(instance_seed(seed, 13));
      for (int trial = 0; trial < 3 && witness.empty(); ++trial) {
        std::size_t m = 0;
        const PointMap p = random_surjection(rng, x.size(), m);
        std::vector<std::string> names;
        for (std::size_t c = 0; c < m; ++c) names.push_back(fmt::format("c{}", c));
        const EpMetricSpace q = quotient_metric(x, p, names);
        witness = compare_flat(q.matrix(), oracle::polygonal_paths(x, p, m), ns.tol);
        if (!witness.empty()) witness = fmt::format("trial {}: {}", trial, witness);
      }
      out.add("quotient-oracle/" + ns.inst,
              "shortest paths with zero-weight fibres equal the minimum over polygonal paths",
              witness.empty(), ns.where + " " + witness);
    }});
  }

  const auto e = euclidean_corpus(o.seed, or_default(o.count, 20), o.max_points);
  for (std::size_t i = 0; i < e.size(); ++i) {
    tasks.push_back({fmt::format("pushout/{}", i), [x = e[i], i, seed = o.seed](Outcome& out) {
      Rng rng(instance_seed(seed, 17 + i));
      const auto xs = random_subset(rng, x.size());
      const auto ys = random_subset(rng, x.size());
      const EpMetricSpace m = subspace_pushout(x, xs, ys);
      std::string witness = compare_flat(m.matrix(), oracle::alternating_paths(x, xs, ys), kEuclideanTol);
      std::vector<std::size_t> pts;
      for (const auto& l : m.labels()) pts.push_back(*x.index_of(l));
      auto inside = [](const std::vector<std::size_t>& s, std::size_t v) {
        return std::find(s.begin(), s.end(), v) != s.end();
      };
      for (std::size_t a = 0; a < pts.size() && witness.empty(); ++a) {
        for (std::size_t b = 0; b < pts.size(); ++b) {
          const ExtDist amb = x.d(pts[a], pts[b]);
          if (m.d(a, b) < amb && !approx_equal(m.d(a, b), amb, kEuclideanTol)) {
            witness = "pushout distance below the ambient one";
          }
          const bool same_leg = (inside(xs, pts[a]) && inside(xs, pts[b])) || (inside(ys, pts[a]) && inside(ys, pts[b]));
          if (same_leg && !approx_equal(m.d(a, b), amb, kEuclideanTol)) witness = "distance changed inside a leg";
        }
      }
      out.add(fmt::format("pushout-oracle/euclid{}", i),
              "the pushout metric is the alternating-path minimum, dominates d and agrees inside each leg",
              witness.empty(), space_witness("euclidean", seed, i) + " " + witness);
    }});
  }

  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].size() != 4) continue;
    tasks.push_back({fmt::format("subsets/{}", i), [x = e[i], i, seed = o.seed](Outcome& out) {
      // Colimit over the poset of non-empty subsets, with the covering inclusions.
      const std::size_t n = x.size();
      std::vector<EpMetricSpace> objects;
      std::vector<unsigned> masks;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t b = 0; b < n; ++b) {
          if (mask >> b & 1u) sub.push_back(b);
        }
        objects.push_back(induced_subspace(x, sub));
        masks.push_back(mask);
      }
      std::vector<DiagramArrow> arrows;
      for (std::size_t a = 0; a < masks.size(); ++a) {
        for (std::size_t b = 0; b < masks.size(); ++b) {
          if ((masks[a] & masks[b]) != masks[a] || __builtin_popcount(masks[b] ^ masks[a]) != 1) continue;
          PointMap map;
          for (std::size_t bit = 0; bit < n; ++bit) {
            if (!(masks[a] >> bit & 1u)) continue;
            map.push_back(static_cast<std::size_t>(__builtin_popcount(masks[b] & ((1u << bit) - 1u))));
          }
          arrows.push_back({a, b, std::move(map)});
        }
      }
      const Cocone c = colimit(objects, arrows);
      bool ok = c.apex.size() == n;
      // point j of X is the unique point of the singleton {j}
      PointMap psi(n);
      for (std::size_t j = 0; j < n; ++j) {
        const auto it = std::find(masks.begin(), masks.end(), 1u << j);
        psi[j] = c.legs[static_cast<std::size_t>(it - masks.begin())][0];
      }
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n; ++b) ok = ok && c.apex.d(psi[a], psi[b]) == x.d(a, b);
      }
      out.add(fmt::format("finite-subsets/euclid{}", i),
              "the colimit of the finite subspaces recovers the space", ok, space_witness("euclidean", seed, i));
    }});
  }
  run_tasks(r, tasks);
}

FilteredSSet two_stage_late_edge() {
  // vertices a, b at 0; the edge a-b only at 3
  std::vector<TruncatedSSet> stages;
  stages.push_back(from_ordered_complex({"a", "b"}, std::vector<std::vector<int>>{{0}, {1}}, 1));
  stages.push_back(from_ordered_complex({"a", "b"}, std::vector<std::vector<int>>{{0, 1}}, 1));
  return FilteredSSet::from_named_stages({ExtDist{}, ExtDist(3)}, std::move(stages), 1);
}

void suite_realization(const SuiteOptions& o, SuiteReport& r) {
  std::vector<Task> tasks;
  tasks.push_back({"fixed", [](Outcome& out) {
    const EpMetricSpace late = realize(two_stage_late_edge());
    out.add("late-edge", "an edge counts from its own birth, not from its endpoints'", late.d(0, 1) == ExtDist(3));
    const EpMetricSpace x = matrix_space({"a", "b", "c"}, {{0, 1, 1.9}, {1, 0, 1}, {1.9, 1, 0}});
    const EpMetricSpace p = partial_realize(vr_system(x, 2), ExtDist(1));
    out.add("partial-example", "at s = 1 only the unit edges exist, so d_1(a, c) = 2", p.d(0, 2) == ExtDist(2));
    const EpMetricSpace k = realize_representable(ExtDist(2), from_ordered_complex({"0", "1", "2"}, std::vector<std::vector<int>>{{0, 1}, {1, 2}}, 1));
    out.add("representable-path", "on the path 0-1-2 at s = 2, d(0, 2) = 4", k.d(0, 2) == ExtDist(4));
  }});

  for (const auto& ns : both_corpora(o, or_default(o.count, 20), or_default(o.count, 10))) {
    tasks.push_back({"realize/" + ns.inst, [ns, cap = o.cap](Outcome& out) {
      const EpMetricSpace& x = ns.space;
      const FilteredSSet vr = vr_system(x, cap);
      const EpMetricSpace rv = realize(vr);
      std::string w = compare_spaces(rv, x, ns.tol);
      out.add("vr-realization/" + ns.inst, "Re(V(X)) = X", w.empty(), ns.where + " " + w);
      for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
        const FilteredSSet dr = degree_rips_system(x, k, cap);
        w = compare_spaces(realize(dr), x, ns.tol);
        out.add(fmt::format("degree-rips-realization/{}/k={}", ns.inst, k), "Re(L_{*,k}(X)) = X", w.empty(),
                ns.where + " " + w);
        w = compare_spaces(realize(dr), realize(one_skeleton(dr)), 0.0);
        out.add(fmt::format("one-skeleton/{}/degree-rips-k={}", ns.inst, k),
                "realization only sees the 1-skeleton", w.empty(), ns.where + " " + w);
      }
      w = compare_spaces(rv, realize(one_skeleton(vr)), 0.0);
      out.add("one-skeleton/" + ns.inst + "/vr", "realization only sees the 1-skeleton", w.empty(),
              ns.where + " " + w);
      const FilteredSSet sing = singular_system(x, 2);
      w = compare_spaces(realize(sing), realize(one_skeleton(sing)), 0.0);
      out.add("one-skeleton/" + ns.inst + "/singular", "realization only sees the 1-skeleton", w.empty(),
              ns.where + " " + w);

      // Partial realizations shrink towards Re(F) and reach it at the top value.
      std::string pw;
      EpMetricSpace previous;
      const auto& cv = vr.critical_values();
      for (std::size_t i = 0; i < cv.size() && pw.empty(); ++i) {
        const EpMetricSpace p = partial_realize(vr, cv[i]);
        for (std::size_t a = 0; a < p.size(); ++a) {
          for (std::size_t b = 0; b < p.size(); ++b) {
            if (p.d(a, b) < rv.d(a, b)) pw = fmt::format("below Re(F) at s={}", cv[i].to_string());
            if (i > 0 && previous.d(a, b) < p.d(a, b)) pw = fmt::format("increase at s={}", cv[i].to_string());
          }
        }
        previous = p;
      }
      if (pw.empty()) pw = compare_spaces(partial_realize(vr, cv.back()), rv, 0.0);
      if (pw.empty() && partial_realize(vr, ExtDist::inf()) != rv) pw = "Re(F)_inf differs";
      out.add("partial/" + ns.inst,
              "partial realizations are non-increasing, dominate Re(F) and equal it at the top value",
              pw.empty(), ns.where + " " + pw);
    }});
  }

  const auto graphs = graph_corpus(o.seed, or_default(o.count, 10));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    tasks.push_back({fmt::format("graph{}", i), [g = graphs[i], i, seed = o.seed](Outcome& out) {
      const FilteredSSet f = represent(g.s, g.complex);
      const EpMetricSpace re = realize(f);
      const EpMetricSpace closed = realize_representable(g.s, g.complex);
      std::string w = compare_spaces(re, closed, 0.0);
      // independent check: simple-path search on edges of weight s
      const std::size_t n = g.complex.count(0);
      std::vector<ExtDist> wts(n * n, ExtDist::inf());
      for (const auto& e : g.complex.level(1)) {
        const auto a = static_cast<std::size_t>(e.vertices[0]);
        const auto b = static_cast<std::size_t>(e.vertices[1]);
        wts[a * n + b] = wts[b * n + a] = g.s;
      }
      if (w.empty()) w = compare_flat(re.matrix(), oracle::simple_path_minimum(wts, n), 0.0);
      const std::string where = fmt::format("corpus=graph seed={} index={} s={}", seed, i, g.s.to_string());
      out.add(fmt::format("representable/graph{}", i), "Re(L_s K) is s times the hop distance, INF across components",
              w.empty(), where + " " + w);
      w = compare_spaces(re, realize(one_skeleton(f)), 0.0);
      out.add(fmt::format("one-skeleton/graph{}", i), "realization only sees the 1-skeleton", w.empty(), where + " " + w);
    }});
  }
  run_tasks(r, tasks);
}

void suite_theorem16(const SuiteOptions& o, SuiteReport& r) {
  require_caps(o.cap, o.kmax);
  std::vector<Task> tasks;
  const auto e = euclidean_corpus(o.seed, or_default(o.count, 20), o.max_points);
  for (std::size_t i = 0; i < e.size(); ++i) {
    compare_into(tasks, e[i], o.cap, o.kmax, {}, fmt::format("euclid{}/", i),
                 space_witness("euclidean", o.seed, i));
  }
  run_tasks(r, tasks);
}

void suite_subdivision(const SuiteOptions& o, SuiteReport& r) {
  require_caps(o.cap, o.kmax);
  std::vector<Task> tasks;
  tasks.push_back({"fixed", [](Outcome& out) {
    const Subdivision sd1 = subdivide(standard_simplex(1, 1));
    out.add("sd-interval", "sd(Delta^1) has 3 vertices and 2 edges",
            sd1.complex->counts() == std::vector<std::size_t>{3, 2});
    const TruncatedSSet boundary = from_ordered_complex({"0", "1", "2"}, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}}, 2);
    const Subdivision sd2 = subdivide(boundary);
    out.add("sd-hexagon", "sd of the boundary of Delta^2 is a hexagon",
            sd2.complex->counts() == std::vector<std::size_t>{6, 6, 0});
    const SSetMap g = last_vertex_map(standard_simplex(1, 1));
    std::vector<int> targets;
    for (const auto& img : g.images[0]) targets.push_back(img.base.index);
    // vertices of sd(Delta^1) in generator order: {0}, {1}, {0,1}
    out.add("last-vertex-interval", "gamma sends {0}, {1}, {0,1} to 0, 1, 1",
            targets == std::vector<int>{0, 1, 1});
  }});
  const auto e = euclidean_corpus(o.seed, or_default(o.count, 20), o.max_points);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (ExtDist t : metric_critical_values(e[i])) {
      tasks.push_back({fmt::format("euclid{}/t={}", i, t.to_string()),
                       [x = e[i], t, i, o](Outcome& out) {
                         const std::string at = fmt::format("euclid{}/t={}", i, t.to_string());
                         const std::string where =
                             fmt::format("{} t={}", space_witness("euclidean", o.seed, i), t.to_string());
                         const TruncatedSSet v = vr_complex(x, t, o.cap);
                         check_subdivision(v, o.kmax, "subdivision/" + at, where, out);
                         const SubsetPosetSystem ps = subset_poset_system(x, t, o.kmax + 1);
                         // P_s(X) holds subsets of every size, so subdivide the untruncated V_s(X).
                         const int full = std::max(static_cast<int>(x.size()) - 1, o.kmax + 1);
                         const Subdivision sd = subdivide(vr_complex(x, t, full), o.kmax + 1);
                         out.add("subset-poset/" + at, "BP_s(X) and sd(V_s(X)) have the same simplex counts",
                                 ps.nerve.counts() == sd.complex->counts(), where);
                       }});
    }
  }
  run_tasks(r, tasks);
}

void suite_excision(const SuiteOptions& o, SuiteReport& r) {
  std::vector<Task> tasks;
  const std::size_t count = or_default(o.count, 10);
  for (std::size_t i = 0; i < count; ++i) {
    tasks.push_back({fmt::format("triple{}", i), [i, o](Outcome& out) {
      Rng rng(instance_seed(o.seed, 100 + i));
      const std::size_t n = 3 + rng.below(std::max<std::size_t>(o.max_points, 3) - 2);
      std::vector<std::vector<double>> pts;
      std::vector<std::string> labels;
      for (std::size_t p = 0; p < n; ++p) {
        const double a = rng.uniform();
        const double b = rng.uniform();
        pts.push_back({a, b});
        labels.push_back(fmt::format("z{}", p));
      }
      const EpMetricSpace z = euclidean_space(pts, labels);
      // X and Y share a point, so every alternating sum is finite.
      auto xs = random_subset(rng, n);
      auto ys = random_subset(rng, n);
      const std::size_t shared = rng.below(n);
      for (auto* part : {&xs, &ys}) {
        part->push_back(shared);
        std::sort(part->begin(), part->end());
        part->erase(std::unique(part->begin(), part->end()), part->end());
      }
      const EpMetricSpace m = subspace_pushout(z, xs, ys);
      const std::string where = fmt::format("corpus=excision seed={} index={}", o.seed, i);

      std::string w = compare_flat(m.matrix(), oracle::alternating_paths(z, xs, ys), kEuclideanTol);
      out.add(fmt::format("pushout-metric/triple{}", i), "the pushout metric is the alternating-path minimum",
              w.empty(), where + " " + w);

      // union vertices in ambient order, as in the pushout
      std::vector<std::size_t> pts_of_m;
      for (const auto& l : m.labels()) pts_of_m.push_back(*z.index_of(l));
      auto inside = [](const std::vector<std::size_t>& s, std::size_t v) {
        return std::find(s.begin(), s.end(), v) != s.end();
      };
      std::vector<ExtDist> scales = metric_critical_values(m);
      for (const auto* part : {&xs, &ys}) {
        for (ExtDist t : metric_critical_values(induced_subspace(z, *part))) scales.push_back(t);
      }
      std::sort(scales.begin(), scales.end(), [](ExtDist a, ExtDist b) { return a < b; });
      scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
      w.clear();
      for (ExtDist s : scales) {
        std::vector<std::pair<std::size_t, std::size_t>> union_edges;
        std::vector<std::pair<std::size_t, std::size_t>> pushout_edges;
        for (std::size_t a = 0; a < pts_of_m.size(); ++a) {
          for (std::size_t b = a + 1; b < pts_of_m.size(); ++b) {
            const std::size_t pa = pts_of_m[a];
            const std::size_t pb = pts_of_m[b];
            const bool leg = (inside(xs, pa) && inside(xs, pb)) || (inside(ys, pa) && inside(ys, pb));
            if (leg && z.d(pa, pb) <= s) union_edges.emplace_back(a, b);
          }
        }
        const TruncatedSSet vm = vr_complex(m, s, 1);
        for (const auto& e : vm.level(1)) {
          pushout_edges.emplace_back(static_cast<std::size_t>(e.vertices[0]), static_cast<std::size_t>(e.vertices[1]));
        }
        const auto left = oracle::components(m.labels(), union_edges);
        const auto right = oracle::components(m.labels(), pushout_edges);
        const auto direct = path_components(vm);
        if (left != right || direct.size() != right.size()) {
          w = fmt::format("s={}: {} vs {} components", s.to_string(), left.size(), right.size());
          break;
        }
      }
      out.add(fmt::format("excision/triple{}", i),
              "path components of V_s(X) u V_s(Y) and V_s(X u_m Y) correspond at every critical s", w.empty(),
              where + " " + w);
    }});
  }
  tasks.push_back({"disjoint", [](Outcome& out) {
    // With X and Y disjoint, d_m is infinite across, so V_inf(X u_m Y) is connected
    // while V_inf(X) u V_inf(Y) is not; at finite s the components still agree.
    const EpMetricSpace z = euclidean_space({{0, 0}, {1, 0}, {5, 0}}, {"a", "b", "c"});
    const std::size_t xs[] = {0, 1};
    const std::size_t ys[] = {2};
    const EpMetricSpace m = subspace_pushout(z, xs, ys);
    const bool finite_ok = path_components(vr_complex(m, ExtDist(10), 1)).size() == 2;
    const bool inf_glued = path_components(vr_complex(m, ExtDist::inf(), 1)).size() == 1;
    out.add("excision-disjoint", "disjoint X, Y: components agree at finite s and merge only at s = inf",
            m.d(0, 2).is_inf() && finite_ok && inf_glued);
  }});
  run_tasks(r, tasks);
}

void suite_bad_colimit(const SuiteOptions& o, SuiteReport& r) {
  const std::size_t stages = o.stages;
  auto stage_space = [](std::size_t i) {
    const ExtDist d(std::ldexp(1.0, -static_cast<int>(i)));
    return EpMetricSpace::unchecked({"p", "q"}, {ExtDist{}, d, d, ExtDist{}});
  };
  Outcome out;
  ExtDist previous = ExtDist::inf();
  EpMetricSpace last;
  bool monotone = true;
  for (std::size_t k = 1; k <= stages; ++k) {
    std::vector<EpMetricSpace> objects;
    std::vector<DiagramArrow> arrows;
    for (std::size_t i = 1; i <= k; ++i) {
      objects.push_back(stage_space(i));
      if (i > 1) arrows.push_back({i - 2, i - 1, PointMap{0, 1}});
    }
    const Cocone c = colimit(objects, arrows);
    const ExtDist expect(std::ldexp(1.0, -static_cast<int>(k)));
    bool ok = c.apex.size() == 2 && c.apex.d(0, 1) == expect;
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = c.apex.d(c.legs[i][0], c.legs[i][1]) <= objects[i].d(0, 1);
    }
    out.add(fmt::format("stage-colimit/k={}", k), "the colimit of stages s = 2..2^k has d(p, q) = 2^-k", ok,
            fmt::format("stages={} got {}", k, c.apex.size() == 2 ? c.apex.d(0, 1).to_string() : "?"));
    if (c.apex.size() == 2) {
      monotone = monotone && c.apex.d(0, 1) < previous;
      previous = c.apex.d(0, 1);
    }
    last = c.apex;
  }
  out.add("monotone", "d(p, q) decreases strictly with the number of stages", monotone);
  out.add("final-bound", "the full chain leaves d(p, q) <= 1e-6",
          last.size() == 2 && last.d(0, 1) <= ExtDist(1e-6), fmt::format("stages={}", stages));

  // The colimit over every s > 0: d(p, q) is bounded by each 1/s, hence 0, while
  // p and q stay distinct. Every stage and the finite colimits map into it.
  const EpMetricSpace limit = EpMetricSpace::unchecked({"p", "q"}, {ExtDist{}, ExtDist{}, ExtDist{}, ExtDist{}});
  bool cocone = true;
  for (std::size_t i = 1; i <= stages; ++i) cocone = cocone && is_nonexpanding(PointMap{0, 1}, stage_space(i), limit);
  if (last.size() == 2) cocone = cocone && is_nonexpanding(PointMap{0, 1}, last, limit);
  out.add("limit-cocone", "every stage maps non-expandingly to the two-point space at distance 0", cocone);
  const Quotient id = metric_identification(limit);
  out.add("identification", "metric identification collapses the colimit to one point", id.space.size() == 1);
  for (auto& c : out.checks) r.add(c.id, c.property, c.passed, c.witness);
}

void suite_ez(const SuiteOptions& o, SuiteReport& r) {
  const auto e = euclidean_corpus(o.seed, 5, o.max_points);
  const auto z = integer_corpus(o.seed, 5, o.max_points);
  auto mid = [](const EpMetricSpace& x) {
    const auto cv = metric_critical_values(x);
    return cv[cv.size() / 2];
  };
  struct Case {
    std::string name;
    TruncatedSSet complex;
  };
  std::vector<Case> cases;
  cases.push_back({"singular-euclid2", singular_at(e[2], mid(e[2]), o.cap)});
  cases.push_back({"singular-euclid3", singular_at(e[3], mid(e[3]), o.cap)});
  cases.push_back({"singular-inf-3pt", singular_at(standard_space(2, ExtDist(1)), ExtDist::inf(), o.cap)});
  cases.push_back({"vr-euclid4", vr_complex(e[4], mid(e[4]), o.cap)});
  cases.push_back({"singular-integer3", singular_at(z[3], mid(z[3]), o.cap)});
  std::vector<Task> tasks;
  for (const auto& c : cases) {
    tasks.push_back({c.name, [c, o](Outcome& out) {
      const oracle::EzCensus census = oracle::ez_uniqueness(c.complex, 3);
      out.add("ez/" + c.name, "every simplex has exactly one Eilenberg-Zilber decomposition",
              census.failure.empty() && census.simplices > 0,
              fmt::format("seed={} complex={} {}", o.seed, c.name, census.failure));
    }});
  }
  run_tasks(r, tasks);
}

void suite_contractibility(const SuiteOptions& o, SuiteReport& r) {
  std::vector<Task> tasks;
  for (const auto& ns : both_corpora(o, or_default(o.count, 20), or_default(o.count, 10))) {
    tasks.push_back({ns.inst, [ns, o](Outcome& out) {
      const EpMetricSpace& x = ns.space;
      // <sigma> depends only on the tuple, so results are shared across scales.
      std::map<std::vector<int>, bool> seen;
      std::string w;
      std::size_t checked = 0;
      for (ExtDist t : metric_critical_values(x)) {
        const TruncatedSSet s = singular_at(x, t, o.cap);
        for (int n = 0; n <= std::min(o.cap, 3) && w.empty(); ++n) {
          for (int i = 0; i < static_cast<int>(s.count(n)); ++i) {
            const auto& vs = s.simplex({n, i}).vertices;
            auto [it, fresh] = seen.try_emplace(vs, true);
            if (fresh) {
              const TruncatedSSet g = generated_subcomplex(s, {n, i});
              it->second = is_point_homology(homology(g, std::min(2, o.cap - 1)));
              ++checked;
            }
            if (!it->second) {
              w = fmt::format("t={} sigma={}", t.to_string(), s.simplex({n, i}).name);
              break;
            }
          }
        }
      }
      out.add("generated/" + ns.inst, "every generated subcomplex <sigma> of S_t(X) is acyclic",
              w.empty() && checked > 0, ns.where + " " + w);
      const HomologyResult h = homology(singular_at(x, ExtDist::inf(), o.cap), std::min(2, o.cap - 1));
      out.add("infinite-scale/" + ns.inst, "S_inf(X) has the homology of a point", is_point_homology(h),
              ns.where + " " + format_homology(h));
    }});
  }
  run_tasks(r, tasks);
}

}  // namespace

std::vector<EpMetricSpace> euclidean_corpus(std::uint64_t seed, std::size_t count, std::size_t max_points) {
  std::vector<EpMetricSpace> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(instance_seed(seed, i));
    const std::size_t n = corpus_size(i, max_points);
    std::vector<std::vector<double>> pts;
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < n; ++p) {
      const double a = rng.uniform();
      const double b = rng.uniform();
      pts.push_back({a, b});
      labels.push_back(fmt::format("x{}", p));
    }
    out.push_back(euclidean_space(pts, labels));
  }
  return out;
}

std::vector<EpMetricSpace> integer_corpus(std::uint64_t seed, std::size_t count, std::size_t max_points) {
  std::vector<EpMetricSpace> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(instance_seed(seed, 500 + i));
    const std::size_t n = corpus_size(i, max_points);
    std::vector<ExtDist> w(n * n, ExtDist{});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const std::size_t roll = rng.below(9);
        const ExtDist d = roll == 0 ? ExtDist::inf() : roll == 1 ? ExtDist{} : ExtDist(static_cast<double>(roll - 1));
        w[a * n + b] = w[b * n + a] = d;
      }
    }
    floyd_warshall(w, n);
    std::vector<std::string> labels;
    std::vector<std::vector<ExtDist>> rows(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(fmt::format("v{}", a));
      rows[a].assign(w.begin() + static_cast<std::ptrdiff_t>(a * n), w.begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
    }
    out.push_back(validate_ep_metric(labels, rows));
  }
  return out;
}

std::vector<GraphCase> graph_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  static const double scales[] = {0.25, 0.5, 1, 1.5, 2, 3};
  std::vector<GraphCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(instance_seed(seed, 900 + i));
    const std::size_t n = 1 + rng.below(max_vertices);
    std::vector<std::string> names;
    std::vector<std::vector<int>> facets;
    for (std::size_t v = 0; v < n; ++v) {
      names.push_back(fmt::format("g{}", v));
      facets.push_back({static_cast<int>(v)});
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rng.below(100) < 35) facets.push_back({static_cast<int>(a), static_cast<int>(b)});
      }
    }
    const ExtDist s(scales[rng.below(6)]);
    out.push_back({from_ordered_complex(names, facets, 2), s});
  }
  return out;
}

SuiteReport run_compare(const EpMetricSpace& x, int cap, int kmax, const std::vector<ExtDist>& ts) {
  require_caps(cap, kmax);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.name = "compare";
  std::vector<Task> tasks;
  compare_into(tasks, x, cap, kmax, ts, "", "input");
  run_tasks(report, tasks);
  report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",     "colimits",    "realization",
                                              "theorem16",  "subdivision", "excision",
                                              "bad-colimit", "ez-uniqueness", "contractibility"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  static const std::map<std::string, void (*)(const SuiteOptions&, SuiteReport&)> suites{
      {"axioms", suite_axioms},           {"colimits", suite_colimits},
      {"realization", suite_realization}, {"theorem16", suite_theorem16},
      {"subdivision", suite_subdivision}, {"excision", suite_excision},
      {"bad-colimit", suite_bad_colimit}, {"ez-uniqueness", suite_ez},
      {"contractibility", suite_contractibility}};
  const auto it = suites.find(name);
  if (it == suites.end()) throw UnknownSuite("unknown suite " + name);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.name = name;
  it->second(options, report);
  report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace epx
