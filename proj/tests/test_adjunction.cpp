#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epx/adjunction.hpp"
#include "epx/homology.hpp"
#include "epx/oracles.hpp"
#include "epx/systems.hpp"
#include "epx/verify.hpp"
#include "support.hpp"

using namespace epx;
using testing::D;
using testing::kInf;
using testing::space;

namespace {

// Equal up to relabelling by name, finite distances within tol.
bool same_metric(const EpMetricSpace& a, const EpMetricSpace& b, double tol = 0) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> to(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto j = b.index_of(a.label(i));
    if (!j) return false;
    to[i] = *j;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const ExtDist x = a.d(i, j);
      const ExtDist y = b.d(to[i], to[j]);
      if (x.is_inf() != y.is_inf()) return false;
      if (!x.is_inf() && std::abs(x.value() - y.value()) > tol) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("realizing a representable gives the standard space") {
  for (int n = 0; n <= 3; ++n) {
    for (double s : {0.5, 1.0, 2.0}) {
      const EpMetricSpace r = realize(represent(D(s), standard_simplex(n, n)));
      const EpMetricSpace u = standard_space(static_cast<std::size_t>(n), D(s));
      REQUIRE(r.size() == u.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < r.size(); ++j) CHECK(r.d(i, j) == u.d(i, j));
      }
    }
  }
}

TEST_CASE("realizing a Vietoris-Rips system recovers the space") {
  for (const auto& x : integer_corpus(31, 15)) CHECK(same_metric(realize(vr_system(x, 1)), x));
  for (const auto& x : euclidean_corpus(31, 15)) CHECK(same_metric(realize(vr_system(x, 2)), x, 1e-9));
  const EpMetricSpace gap = space({"a", "b", "c"}, {{0, 1, kInf}, {1, 0, kInf}, {kInf, kInf, 0}});
  CHECK(same_metric(realize(vr_system(gap, 1)), gap));
}

TEST_CASE("an edge born late is measured by its birth") {
  // a path a-b-c with the a-c edge appearing at 5 keeps d(a,c) = 2
  TruncatedSSet early = from_ordered_complex({"a", "b", "c"}, std::vector<std::vector<int>>{{0, 1}, {1, 2}}, 1);
  TruncatedSSet late = from_ordered_complex({"a", "b", "c"}, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}}, 1);
  const FilteredSSet f = FilteredSSet::from_named_stages({D(1), D(5)}, {early, late}, 1);
  const EpMetricSpace r = realize(f);
  CHECK(r.d(0, 2) == D(2));
  CHECK(r.d(0, 1) == D(1));

  const FilteredSSet g = FilteredSSet::from_named_stages({D(1), D(1.5)}, {early, late}, 1);
  CHECK(realize(g).d(0, 2) == D(1.5));
}

TEST_CASE("partial realizations") {
  const EpMetricSpace x = euclidean_space({{0}, {1}, {3}}, {"a", "b", "c"});
  const FilteredSSet f = vr_system(x, 1);
  CHECK(partial_realize(f, D(-0.0)).size() == 3);
  const EpMetricSpace p1 = partial_realize(f, D(1));
  CHECK(p1.d(0, 1) == D(1));
  CHECK(p1.d(0, 2).is_inf());
  const EpMetricSpace p2 = partial_realize(f, D(2));
  CHECK(p2.d(0, 2) == D(3));
  CHECK(same_metric(partial_realize(f, ExtDist::inf()), x));
  CHECK(partial_realize(represent(D(2), standard_simplex(1, 1)), D(1)).empty());
}

TEST_CASE("realizing a complex at one scale") {
  const TruncatedSSet path = from_ordered_complex({"a", "b", "c", "d"}, std::vector<std::vector<int>>{{0, 1}, {1, 2}}, 1);
  const EpMetricSpace r = realize_representable(D(0.5), path);
  CHECK(r.d(0, 2) == D(1));
  CHECK(r.d(0, 1) == D(0.5));
  CHECK(r.d(0, 3).is_inf());
  CHECK(r.d(3, 3) == D(0));
  CHECK_THROWS_AS(realize_representable(D(0), path), std::invalid_argument);
}

TEST_CASE("singular complexes") {
  const EpMetricSpace two = standard_space(1, D(1));
  CHECK(singular_at(two, D(1), 2).counts() == std::vector<std::size_t>{2, 2, 2});
  CHECK(singular_at(two, D(0.5), 2).counts() == std::vector<std::size_t>{2, 0, 0});
  CHECK(validate_sset(singular_at(two, D(1), 3)));

  for (const auto& y : integer_corpus(32, 10)) {
    const HomologyResult h = homology(singular_at(y, ExtDist::inf(), 3), 2);
    CHECK(h.betti() == std::vector<std::int64_t>{1, 0, 0});
    for (const auto& g : h.groups) CHECK(g.torsion.empty());
  }
}

TEST_CASE("simplices of S_s(Y) are morphisms from standard spaces") {
  for (const auto& y : integer_corpus(33, 12)) {
    if (y.size() > 3) continue;
    for (ExtDist s : metric_critical_values(y)) {
      const TruncatedSSet z = singular_at(y, s, 2);
      for (int n = 0; n <= 2; ++n) CHECK(oracle::all_simplices(z, n) == oracle::morphisms_from_standard(y, n, s));
    }
  }
  const EpMetricSpace y = euclidean_space({{0}, {1}, {2.5}}, {"a", "b", "c"});
  for (ExtDist s : {D(0), D(1), D(1.5), D(2.5), ExtDist::inf()}) {
    const TruncatedSSet z = singular_at(y, s, 2);
    for (int n = 0; n <= 2; ++n) CHECK(oracle::all_simplices(z, n) == oracle::morphisms_from_standard(y, n, s));
  }
}

TEST_CASE("the comparison map from V_t to S_t") {
  CHECK(distinct_list({2, 2, 0, 1, 0}) == std::vector<int>{0, 1, 2});
  CHECK(distinct_list({}).empty());

  for (const auto& x : euclidean_corpus(34, 8)) {
    for (ExtDist t : metric_critical_values(x)) {
      const SSetMap eta = counit_vr(x, t, 2);
      CHECK(validate_map(eta));
      for (const auto& lvl : eta.images) {
        for (const auto& img : lvl) CHECK(img.is_nondegenerate());
      }
      const EtaPoset ep = eta_poset(x, t, 2);
      REQUIRE(ep.eta.size() == ep.source.poset.size());
      for (std::size_t i = 0; i < ep.eta.size(); ++i) CHECK(ep.ell[ep.eta[i]] == i);
    }
  }
}
