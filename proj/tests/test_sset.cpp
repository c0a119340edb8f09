#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "epx/adjunction.hpp"
#include "epx/errors.hpp"
#include "epx/homology.hpp"
#include "epx/oracles.hpp"
#include "epx/poset.hpp"
#include "epx/subdivision.hpp"
#include "epx/systems.hpp"
#include "epx/verify.hpp"
#include "support.hpp"

using namespace epx;
using testing::D;

namespace {

using Facets = std::vector<std::vector<int>>;

TruncatedSSet boundary_triangle(int cap = 2) {
  return from_ordered_complex({"0", "1", "2"}, Facets{{0, 1}, {1, 2}, {0, 2}}, cap);
}

TruncatedSSet two_point_singular(int cap) { return singular_at(standard_space(1, D(1)), D(1), cap); }

std::optional<SimplexRef> find_named(const TruncatedSSet& z, const std::string& name) {
  for (int n = 0; n <= z.cap(); ++n) {
    for (int i = 0; i < static_cast<int>(z.count(n)); ++i) {
      if (z.simplex({n, i}).name == name) return SimplexRef{n, i};
    }
  }
  return std::nullopt;
}

Poset chain_poset(std::size_t n) {
  std::vector<std::string> names;
  std::vector<char> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = a; b < n; ++b) leq[a * n + b] = 1;
  }
  return Poset(names, leq);
}

Poset random_poset(std::mt19937_64& gen, std::size_t n) {
  // transitive closure of a random DAG on 0..n-1
  std::vector<char> leq(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    leq[a * n + a] = 1;
    for (std::size_t b = a + 1; b < n; ++b) leq[a * n + b] = gen() % 3 == 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[a * n + k] && leq[k * n + b]) leq[a * n + b] = 1;
      }
    }
  }
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back("p" + std::to_string(a));
  return Poset(names, leq);
}

}  // namespace

TEST_CASE("ordinal maps factor uniquely as injection after surjection") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const OrdinalMap& theta : all_ordinal_maps(m, n)) {
        const auto [s, d] = epi_mono(theta);
        CHECK(s.is_surjective());
        CHECK(d.is_injective());
        CHECK(compose(d, s) == theta);
        // brute force: no other (injection, surjection) pair composes to theta
        int hits = 0;
        for (int k = 0; k <= std::min(m, n); ++k) {
          for (const OrdinalMap& s2 : all_surjections(m, k)) {
            for (const OrdinalMap& d2 : all_ordinal_maps(k, n)) {
              if (d2.is_injective() && compose(d2, s2) == theta) ++hits;
            }
          }
        }
        CHECK(hits == 1);
      }
    }
  }
  CHECK(all_surjections(3, 1).size() == 3);
  CHECK(all_ordinal_maps(2, 2).size() == 10);
  CHECK_THROWS_AS(OrdinalMap({1, 0}, 1), DimensionMismatch);
  CHECK(OrdinalMap::coface(2, 1).values() == std::vector<int>{0, 2});
  CHECK(OrdinalMap::codegeneracy(1, 0).values() == std::vector<int>{0, 0, 1});
}

TEST_CASE("apply_ordinal") {
  const TruncatedSSet d1 = standard_simplex(1, 2);
  const EzPair edge = EzPair::of({1, 0});
  CHECK(apply_ordinal(d1, edge, OrdinalMap::identity(1)) == edge);
  const EzPair s0 = apply_ordinal(d1, edge, OrdinalMap::codegeneracy(1, 0));
  CHECK(s0.base == SimplexRef{1, 0});
  CHECK(s0.degeneracy == OrdinalMap::codegeneracy(1, 0));
  CHECK_THROWS_AS(apply_ordinal(d1, edge, OrdinalMap::identity(2)), DimensionMismatch);

  // d_1 of (a,b,a) is the degenerate (a,a) = s_0(a)
  const TruncatedSSet s = two_point_singular(2);
  const auto aba = find_named(s, "(0,1,0)");
  REQUIRE(aba);
  const EzPair face = face_of(s, EzPair::of(*aba), 1);
  CHECK(face.base == SimplexRef{0, 0});
  CHECK(face.degeneracy.values() == std::vector<int>{0, 0});
}

TEST_CASE("Eilenberg-Zilber decompositions are unique") {
  CHECK(oracle::ez_uniqueness(two_point_singular(3), 3).failure.empty());
  CHECK(oracle::ez_uniqueness(standard_simplex(3, 3), 3).failure.empty());
  const auto x = euclidean_corpus(4, 4).back();
  const auto census = oracle::ez_uniqueness(singular_at(x, D(0.6), 3), 3);
  CHECK(census.failure.empty());
  CHECK(census.simplices > 100);
}

TEST_CASE("validate_sset") {
  for (int n = 0; n <= 4; ++n) CHECK(validate_sset(standard_simplex(n, n)));
  CHECK(validate_sset(two_point_singular(3)));

  // swap two faces of the 2-simplex of Delta^2
  TruncatedSSet d2 = standard_simplex(2, 2);
  std::vector<std::vector<Simplex>> levels;
  for (int n = 0; n <= 2; ++n) levels.push_back(d2.level(n));
  std::swap(levels[2][0].faces[0], levels[2][0].faces[1]);
  const TruncatedSSet broken(2, levels);
  const SSetValidation v = validate_sset(broken);
  CHECK_FALSE(v);
  CHECK_FALSE(v.witness.empty());

  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Poset p = random_poset(gen, 6);
    CHECK(check_poset(p).empty());
    CHECK(validate_sset(nerve_of_poset(p, 3)));
  }
}

TEST_CASE("ordered complexes") {
  const TruncatedSSet d2 = from_ordered_complex({"0", "1", "2"}, Facets{{0, 1, 2}}, 2);
  CHECK(d2.counts() == std::vector<std::size_t>{3, 3, 1});
  CHECK(boundary_triangle().counts() == std::vector<std::size_t>{3, 3, 0});
  CHECK_THROWS_AS(from_ordered_complex({"a", "b"}, std::vector<std::vector<std::string>>{{"a", "c"}}, 1),
                  UnknownVertex);

  // the pairs at distance <= s give the 1-skeleton of V_s
  const EpMetricSpace x = euclidean_corpus(6, 4).back();
  const ExtDist s = metric_critical_values(x)[3];
  Facets edges;
  for (std::size_t i = 0; i < x.size(); ++i) {
    edges.push_back({static_cast<int>(i)});
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x.d(i, j) <= s) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  const TruncatedSSet k = from_ordered_complex(x.labels(), edges, 1);
  const TruncatedSSet v = vr_complex(x, s, 1);
  REQUIRE(k.counts() == v.counts());
  for (std::size_t e = 0; e < k.count(1); ++e) CHECK(k.level(1)[e].vertices == v.level(1)[e].vertices);
}

TEST_CASE("posets of non-degenerate simplices") {
  const NondegPoset n1 = nondeg_poset(standard_simplex(1, 1));
  CHECK(n1.poset.size() == 3);
  CHECK(n1.poset.less(0, 2));
  CHECK(n1.poset.less(1, 2));
  CHECK_FALSE(n1.poset.leq(0, 1));
  const NondegPoset n2 = nondeg_poset(standard_simplex(2, 2));
  CHECK(n2.poset.size() == 7);
  CHECK(check_poset(n2.poset).empty());

  const TruncatedSSet s = two_point_singular(2);
  const NondegPoset ns = nondeg_poset(s);
  const auto aba = ns.element_of.at(*find_named(s, "(0,1,0)"));
  CHECK(ns.poset.less(ns.element_of.at(*find_named(s, "(0,1)")), aba));
  CHECK(ns.poset.less(ns.element_of.at(*find_named(s, "(1,0)")), aba));
  CHECK_FALSE(ns.poset.leq(ns.element_of.at(*find_named(s, "(1,0,1)")), aba));
}

TEST_CASE("nerves of posets") {
  CHECK(nerve_of_poset(chain_poset(2), 2).counts() == std::vector<std::size_t>{2, 1, 0});
  const Poset anti({"a", "b", "c"}, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(nerve_of_poset(anti, 2).counts() == std::vector<std::size_t>{3, 0, 0});
  CHECK(nerve_of_poset(nondeg_poset(standard_simplex(1, 1)).poset, 1).counts() ==
        std::vector<std::size_t>{3, 2});
  // Delta^3 as the nerve of a 4-chain
  CHECK(nerve_of_poset(chain_poset(4), 3).counts() == std::vector<std::size_t>{4, 6, 4, 1});
}

TEST_CASE("generated subcomplexes") {
  const TruncatedSSet d2 = standard_simplex(2, 2);
  CHECK(generated_subcomplex(d2, {0, 1}).counts() == std::vector<std::size_t>{1, 0, 0});
  CHECK(generated_subcomplex(d2, {2, 0}).counts() == d2.counts());
  CHECK_THROWS_AS(generated_subcomplex(d2, {2, 4}), UnknownSimplex);

  const TruncatedSSet s = two_point_singular(3);
  const TruncatedSSet g = generated_subcomplex(s, *find_named(s, "(0,1,0)"));
  std::set<std::string> names;
  for (int n = 0; n <= g.cap(); ++n) {
    for (const auto& x : g.level(n)) names.insert(x.name);
  }
  CHECK(names == std::set<std::string>{"0", "1", "(0,1)", "(1,0)", "(0,1,0)"});
  CHECK(validate_sset(g));
}

TEST_CASE("subdivision") {
  CHECK(subdivide(standard_simplex(0, 0)).complex->counts() == std::vector<std::size_t>{1});
  CHECK(subdivide(standard_simplex(1, 1)).complex->counts() == std::vector<std::size_t>{3, 2});
  CHECK(subdivide(boundary_triangle()).complex->counts() == std::vector<std::size_t>{6, 6, 0});
  CHECK(subdivide(standard_simplex(2, 2)).complex->counts() == std::vector<std::size_t>{7, 12, 6});
  CHECK_THROWS_AS(subdivide(standard_simplex(1, 1), 2), CapExceeded);
  for (const auto* z : {new TruncatedSSet(two_point_singular(3)), new TruncatedSSet(boundary_triangle())}) {
    CHECK(validate_sset(*subdivide(*z).complex));
    delete z;
  }
}

TEST_CASE("pi is a bijection on polyhedral complexes") {
  const SSetMap p1 = pi_map(standard_simplex(1, 1));
  CHECK(validate_map(p1));
  CHECK(is_dimensionwise_bijection(p1));
  CHECK(is_dimensionwise_bijection(pi_map(boundary_triangle())));
  CHECK(is_dimensionwise_bijection(pi_map(standard_simplex(3, 3))));
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 5; ++trial) {
    const TruncatedSSet nerve = nerve_of_poset(random_poset(gen, 5), 2);
    CHECK(is_dimensionwise_bijection(pi_map(nerve)));
  }
}

TEST_CASE("pi is not injective on S_t of two points but commutes with faces") {
  const TruncatedSSet s = two_point_singular(2);
  const Subdivision sd = subdivide(s);
  const NondegPoset np = nondeg_poset(s);
  auto nerve = std::make_shared<const TruncatedSSet>(nerve_of_poset(np.poset, 2));
  const SSetMap pi = pi_map(s, sd, np, nerve);
  CHECK(validate_map(pi));
  CHECK_FALSE(is_dimensionwise_bijection(pi));
  const auto e0 = find_named(*sd.complex, "(0,1,0)|{0}<{0,1,2}");
  const auto e2 = find_named(*sd.complex, "(0,1,0)|{2}<{0,1,2}");
  REQUIRE(e0);
  REQUIRE(e2);
  CHECK(*e0 != *e2);
  CHECK(pi.image(*e0) == pi.image(*e2));
}

TEST_CASE("last vertex map") {
  const SSetMap g0 = last_vertex_map(standard_simplex(0, 0));
  CHECK(g0.images[0][0] == EzPair::of({0, 0}));
  const SSetMap g1 = last_vertex_map(standard_simplex(1, 1));
  std::vector<int> targets;
  for (const auto& img : g1.images[0]) targets.push_back(img.base.index);
  CHECK(targets == std::vector<int>{0, 1, 1});
  CHECK(validate_map(g1));
  CHECK(validate_map(last_vertex_map(two_point_singular(3))));
}

TEST_CASE("homology is invariant under subdivision on the corpus") {
  for (const auto& x : euclidean_corpus(8, 8, 5)) {
    for (ExtDist t : metric_critical_values(x)) {
      const TruncatedSSet v = vr_complex(x, t, 3);
      CHECK(homology(*subdivide(v).complex, 2) == homology(v, 2));
    }
    const TruncatedSSet s = singular_at(x, metric_critical_values(x)[1], 3);
    CHECK(homology(*subdivide(s).complex, 2) == homology(s, 2));
  }
}

TEST_CASE("path components") {
  CHECK(path_components(standard_simplex(3, 3)).size() == 1);
  CHECK(path_components(from_ordered_complex({"a", "b"}, Facets{{0}, {1}}, 1)).size() == 2);
  const EpMetricSpace line = euclidean_space({{0}, {1}, {11}, {12}});
  const auto comps = path_components(vr_complex(line, D(1), 2));
  CHECK(comps == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}
