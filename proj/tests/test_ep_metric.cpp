#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "epx/errors.hpp"
#include "epx/oracles.hpp"
#include "epx/verify.hpp"
#include "support.hpp"

using namespace epx;
using testing::D;
using testing::kInf;
using testing::space;

TEST_CASE("ExtDist arithmetic saturates and orders INF last") {
  const ExtDist inf = ExtDist::inf();
  CHECK((inf + ExtDist(3)).is_inf());
  CHECK(min(inf, ExtDist(2)) == ExtDist(2));
  CHECK(ExtDist(1e300) < inf);
  CHECK((ExtDist(1.5) + ExtDist(2)) == ExtDist(3.5));
  CHECK((inf * 0) == ExtDist{});
  CHECK((ExtDist(0.25) * 3) == ExtDist(0.75));
  CHECK_THROWS_AS(ExtDist(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExtDist(std::nan("")), std::invalid_argument);
  CHECK(inf.to_string() == "inf");
  CHECK(ExtDist(1.0 / 3).to_string() == "0.333333333333");
}

TEST_CASE("validate_ep_metric accepts valid spaces and names failing axioms") {
  CHECK(space({"a"}, {{0}}).size() == 1);
  const EpMetricSpace x = space({"a", "b"}, {{0, kInf}, {kInf, 0}});
  CHECK(x.d(0, 1).is_inf());

  try {
    space({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL("expected a triangle violation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "triangle");
    CHECK(e.witness() == "(a,b,c)");
  }
  CHECK_THROWS_AS(space({"a", "b"}, {{0, 1}, {2, 0}}), AxiomViolation);
  CHECK_THROWS_AS(space({"a", "b"}, {{0.5, 1}, {1, 0}}), AxiomViolation);
  CHECK_THROWS_AS(space({"a", "a"}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("non-expanding maps") {
  const EpMetricSpace u1 = standard_space(1, D(1));
  const EpMetricSpace u2 = standard_space(1, D(2));
  CHECK(is_nonexpanding(PointMap{0, 1}, u2, u2));
  CHECK(is_nonexpanding(PointMap{1, 1}, u2, u1));
  // 0 -> 0, 1 -> 1 stretches the single distance from 1 to 2
  CHECK_FALSE(is_nonexpanding(PointMap{0, 1}, u1, u2));
  CHECK_THROWS_AS(is_nonexpanding(PointMap{0, 2}, u1, u2), UnknownPoint);
  CHECK_THROWS_AS(is_nonexpanding(std::map<std::string, std::string>{{"0", "0"}, {"1", "z"}}, u1, u2),
                  UnknownPoint);
  CHECK(is_nonexpanding(std::map<std::string, std::string>{{"0", "1"}, {"1", "0"}}, u1, u1));
}

TEST_CASE("standard spaces") {
  const EpMetricSpace u = standard_space(2, D(3));
  CHECK(u.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(u.d(i, j) == (i == j ? ExtDist{} : D(3)));
  }
  CHECK(standard_space(0, D(5)).size() == 1);
  CHECK(standard_space(1, ExtDist::inf()).d(0, 1).is_inf());
}

TEST_CASE("coproducts") {
  const EpMetricSpace pt = standard_space(0, D(0));
  const EpMetricSpace two[] = {pt, pt};
  const Cocone c = coproduct(two);
  CHECK(c.apex.size() == 2);
  CHECK(c.apex.d(0, 1).is_inf());

  const EpMetricSpace pair[] = {standard_space(1, D(1)), standard_space(1, D(2))};
  const Cocone d = coproduct(pair);
  REQUIRE(d.apex.size() == 4);
  CHECK(d.apex.d(0, 1) == D(1));
  CHECK(d.apex.d(2, 3) == D(2));
  CHECK(d.apex.d(0, 3).is_inf());
  CHECK(d.apex.label(2) == "1/0");

  const EpMetricSpace one[] = {pair[0]};
  CHECK(coproduct(one).apex.matrix() == pair[0].matrix());
  CHECK(coproduct(std::span<const EpMetricSpace>{}).apex.empty());
}

TEST_CASE("quotient metrics") {
  const EpMetricSpace x = space({"u", "v"}, {{0, 5}, {5, 0}});
  CHECK(quotient_metric(x, PointMap{0, 1}, {"u", "v"}).matrix() == x.matrix());
  const EpMetricSpace one = quotient_metric(x, PointMap{0, 0}, {"w"});
  CHECK(one.size() == 1);
  CHECK(one.d(0, 0) == ExtDist{});
  CHECK_THROWS_AS(quotient_metric(x, PointMap{0, 0}, {"w", "z"}), NotSurjective);

  // a-b and a'-b' unit pairs, INF across; gluing b to a' gives d(a, b') = 2.
  const EpMetricSpace y = space({"a", "b", "a'", "b'"},
                                {{0, 1, kInf, kInf}, {1, 0, kInf, kInf}, {kInf, kInf, 0, 1}, {kInf, kInf, 1, 0}});
  const PointMap p{0, 1, 1, 2};
  const EpMetricSpace q = quotient_metric(y, p, {"a", "b", "b'"});
  CHECK(q.d(0, 2) == D(2));
  CHECK(q.matrix() == oracle::polygonal_paths(y, p, 3));
}

TEST_CASE("quotient metric matches exhaustive polygonal paths on random spaces") {
  std::mt19937_64 gen(3);
  for (const auto& x : integer_corpus(5, 15)) {
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t m = 1 + gen() % x.size();
      PointMap p(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) p[i] = i < m ? i : gen() % m;
      std::vector<std::string> names;
      for (std::size_t c = 0; c < m; ++c) names.push_back("c" + std::to_string(c));
      const EpMetricSpace q = quotient_metric(x, p, names);
      CHECK(q.matrix() == oracle::polygonal_paths(x, p, m));
      // the projection never stretches
      CHECK(is_nonexpanding(p, x, q));
      CHECK_NOTHROW(check_ep_metric(q));
    }
  }
}

TEST_CASE("coequalizers") {
  const EpMetricSpace x = standard_space(1, D(5));
  const EpMetricSpace a = standard_space(0, D(0));
  const Quotient same = coequalizer(make_morphism(a, x, {0}), make_morphism(a, x, {0}));
  CHECK(same.space.matrix() == x.matrix());
  const Quotient glued = coequalizer(make_morphism(a, x, {0}), make_morphism(a, x, {1}));
  CHECK(glued.space.size() == 1);
  CHECK(glued.space.label(0) == "{0,1}");
  CHECK_THROWS_AS(make_morphism(standard_space(1, D(1)), x, {0, 1}), std::invalid_argument);
}

TEST_CASE("pushouts") {
  const EpMetricSpace x = standard_space(2, D(1));
  const EpMorphism id = make_morphism(x, x, {0, 1, 2});
  const Cocone c = pushout(id, id);
  CHECK(c.apex.size() == 3);
  CHECK(c.apex.d(0, 1) == D(1));

  const EpMetricSpace tri = euclidean_space({{0, 0}, {0.5, 1}, {1, 0}}, {"a", "b", "c"});
  const std::size_t xs[] = {0, 1};
  const std::size_t ys[] = {1, 2};
  const EpMetricSpace m = subspace_pushout(tri, xs, ys);
  CHECK(std::fabs(m.d(0, 2).value() - 2 * std::sqrt(1.25)) < 1e-12);
  CHECK(tri.d(0, 2) == D(1));
  CHECK(m.d(0, 1) == tri.d(0, 1));
  CHECK(m.d(1, 2) == tri.d(1, 2));
  const auto oracle = oracle::alternating_paths(tri, xs, ys);
  for (std::size_t i = 0; i < 9; ++i) CHECK(approx_equal(m.matrix()[i], oracle[i], 1e-12));
}

TEST_CASE("metric identification") {
  const EpMetricSpace x = space({"a", "b", "c"}, {{0, 0, 2}, {0, 0, 2}, {2, 2, 0}});
  const Quotient q = metric_identification(x);
  REQUIRE(q.space.size() == 2);
  CHECK(q.space.d(0, 1) == D(2));
  CHECK(q.space.label(0) == "{a,b}");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(q.space.d(q.projection[i], q.projection[j]) == x.d(i, j));
  }
  CHECK(metric_identification(q.space).space.matrix() == q.space.matrix());
  const EpMetricSpace pos = standard_space(3, D(1));
  CHECK(metric_identification(pos).space.matrix() == pos.matrix());
}

TEST_CASE("induced subspaces") {
  const EpMetricSpace x = euclidean_space({{0}, {1}, {3}}, {"p", "q", "r"});
  CHECK(same_space(induced_subspace(x, std::vector<std::string>{"p", "q", "r"}), x));
  const EpMetricSpace single = induced_subspace(x, std::vector<std::string>{"q"});
  CHECK(single.size() == 1);
  const std::size_t pr[] = {0, 2};
  CHECK(induced_subspace(x, pr).d(0, 1) == D(3));
  CHECK_THROWS_AS(induced_subspace(x, std::vector<std::string>{"zz"}), UnknownPoint);
}

TEST_CASE("colimit over the finite subsets of a four-point space recovers it") {
  const EpMetricSpace x = space({"a", "b", "c", "d"},
                                {{0, 1, 2, kInf}, {1, 0, 1, kInf}, {2, 1, 0, kInf}, {kInf, kInf, kInf, 0}});
  std::vector<EpMetricSpace> objects;
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t b = 0; b < 4; ++b) {
      if (mask >> b & 1u) sub.push_back(b);
    }
    objects.push_back(induced_subspace(x, sub));
    masks.push_back(mask);
  }
  std::vector<DiagramArrow> arrows;
  for (std::size_t a = 0; a < masks.size(); ++a) {
    for (std::size_t b = 0; b < masks.size(); ++b) {
      if (a == b || (masks[a] & masks[b]) != masks[a]) continue;
      PointMap map;
      for (unsigned bit = 0; bit < 4; ++bit) {
        if (masks[a] >> bit & 1u) map.push_back(static_cast<std::size_t>(__builtin_popcount(masks[b] & ((1u << bit) - 1u))));
      }
      arrows.push_back({a, b, map});
    }
  }
  const Cocone c = colimit(objects, arrows);
  REQUIRE(c.apex.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t pi = c.legs[static_cast<std::size_t>((1u << i) - 1)][0];
      const std::size_t pj = c.legs[static_cast<std::size_t>((1u << j) - 1)][0];
      CHECK(c.apex.d(pi, pj) == x.d(i, j));
    }
  }
}

TEST_CASE("constructor outputs satisfy the axioms") {
  for (const auto& x : euclidean_corpus(2, 10)) {
    const EpMetricSpace pair[] = {x, x};
    CHECK_NOTHROW(check_ep_metric(coproduct(pair).apex, 1e-9));
    CHECK_NOTHROW(check_ep_metric(metric_identification(x).space, 1e-9));
    std::vector<std::pair<std::size_t, std::size_t>> rel{{0, x.size() - 1}};
    CHECK_NOTHROW(check_ep_metric(quotient_by_relation(x, rel).space, 1e-9));
  }
}
