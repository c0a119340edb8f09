#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "epx/adjunction.hpp"
#include "epx/errors.hpp"
#include "epx/subdivision.hpp"
#include "epx/systems.hpp"
#include "epx/verify.hpp"
#include "support.hpp"

using namespace epx;
using testing::D;
using testing::kInf;
using testing::space;

namespace {

// Every subset of diameter <= t with 2..cap+1 points, by brute force over bitmasks.
std::vector<std::size_t> vr_counts_bruteforce(const EpMetricSpace& x, ExtDist t, int cap) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(cap + 1), 0);
  const std::size_t n = x.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size > cap + 1) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> i & 1u) && (mask >> j & 1u) && x.d(i, j) > t) ok = false;
      }
    }
    if (ok) ++counts[static_cast<std::size_t>(size - 1)];
  }
  return counts;
}

}  // namespace

TEST_CASE("representable diagrams") {
  const FilteredSSet c = represent(D(0), standard_simplex(0, 0));
  CHECK(evaluate_at(c, D(0)).count(0) == 1);
  CHECK(evaluate_at(c, D(7)).count(0) == 1);

  const FilteredSSet f = represent(D(2), standard_simplex(1, 1));
  CHECK(evaluate_at(f, D(1)).empty());
  CHECK(evaluate_at(f, D(2)).counts() == std::vector<std::size_t>{2, 1});
  CHECK(evaluate_at(f, ExtDist::inf()).counts() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("Vietoris-Rips systems") {
  const FilteredSSet one = vr_system(standard_space(0, D(0)), 2);
  CHECK(one.critical_values() == std::vector<ExtDist>{D(0)});
  CHECK(evaluate_at(one, ExtDist::inf()).counts() == std::vector<std::size_t>{1, 0, 0});

  const FilteredSSet two = vr_system(standard_space(1, D(1)), 2);
  CHECK(evaluate_at(two, D(0.5)).counts() == std::vector<std::size_t>{2, 0, 0});
  CHECK(evaluate_at(two, D(1)).counts() == std::vector<std::size_t>{2, 1, 0});

  const EpMetricSpace gap = space({"a", "b", "c"}, {{0, 1, kInf}, {1, 0, kInf}, {kInf, kInf, 0}});
  const FilteredSSet g = vr_system(gap, 2);
  CHECK(g.critical_values().back().is_inf());
  CHECK(evaluate_at(g, D(1e12)).count(1) == 1);
  CHECK(evaluate_at(g, ExtDist::inf()).count(1) == 3);
  CHECK(evaluate_at(g, ExtDist::inf()).count(2) == 1);

  // repeated points give edges at 0
  const EpMetricSpace rep = space({"a", "b"}, {{0, 0}, {0, 0}});
  CHECK(evaluate_at(vr_system(rep, 1), D(0)).count(1) == 1);
}

TEST_CASE("VR stages match brute-force enumeration and include monotonically") {
  for (const auto& x : euclidean_corpus(21, 12)) {
    const FilteredSSet f = vr_system(x, 3);
    CHECK(check_filtered(f).empty());
    for (ExtDist t : f.critical_values()) CHECK(evaluate_at(f, t).counts() == vr_counts_bruteforce(x, t, 3));
    const std::size_t n = x.size();
    const std::vector<std::size_t> full{n, n * (n - 1) / 2, n * (n - 1) * (n - 2) / 6,
                                        n * (n - 1) * (n - 2) * (n - 3) / 24};
    CHECK(evaluate_at(f, ExtDist::inf()).counts() == full);
  }
  for (const auto& x : integer_corpus(21, 12)) {
    const FilteredSSet f = vr_system(x, 2);
    CHECK(check_filtered(f).empty());
    CHECK(check_filtered(singular_system(x, 2)).empty());
  }
}

TEST_CASE("subset posets") {
  const EpMetricSpace x = standard_space(2, D(1));
  const SubsetPosetSystem small = subset_poset_system(x, D(0.5), 2);
  CHECK(small.poset.size() == 3);
  CHECK(small.nerve.counts() == std::vector<std::size_t>{3, 0, 0});

  const SubsetPosetSystem pair = subset_poset_system(standard_space(1, D(1)), D(1), 1);
  CHECK(pair.poset.size() == 3);
  CHECK(pair.nerve.counts() == subdivide(standard_simplex(1, 1)).complex->counts());

  for (const auto& y : euclidean_corpus(5, 10)) {
    for (ExtDist t : metric_critical_values(y)) {
      const int full = static_cast<int>(y.size()) - 1;
      const Subdivision sd = subdivide(vr_complex(y, t, std::max(full, 2)), 2);
      CHECK(subset_poset_system(y, t, 2).nerve.counts() == sd.complex->counts());
    }
  }
}

TEST_CASE("degree-Rips systems") {
  const EpMetricSpace line = euclidean_space({{0}, {1}, {10}}, {"p0", "p1", "p10"});
  const TruncatedSSet s = degree_rips_complex(line, 2, D(1), 2);
  REQUIRE(s.count(0) == 2);
  CHECK(s.vertex_name(0) == "p0");
  CHECK(s.vertex_name(1) == "p1");
  CHECK(s.count(1) == 1);
  CHECK_THROWS_AS(degree_rips_system(line, 4, 2), BadDegree);
  CHECK_THROWS_AS(degree_rips_system(line, 0, 2), BadDegree);

  for (const auto& x : euclidean_corpus(6, 10)) {
    const FilteredSSet vr = vr_system(x, 2);
    const FilteredSSet k1 = degree_rips_system(x, 1, 2);
    for (ExtDist t : vr.critical_values()) {
      CHECK(evaluate_at(k1, t).counts() == evaluate_at(vr, t).counts());
      const TruncatedSSet k2 = degree_rips_complex(x, 2, t, 2);
      const TruncatedSSet v = evaluate_at(vr, t);
      for (int n = 0; n <= 2; ++n) CHECK(k2.count(n) <= v.count(n));
    }
    const ExtDist top = vr.critical_values().back();
    CHECK(degree_rips_complex(x, x.size(), top, 2).counts() == evaluate_at(vr, top).counts());
    CHECK(check_filtered(degree_rips_system(x, 2, 2)).empty());
  }
}

TEST_CASE("one-skeleta") {
  const FilteredSSet graph = represent(D(1), from_ordered_complex({"a", "b", "c"}, std::vector<std::vector<int>>{{0, 1}, {1, 2}}, 1));
  CHECK(one_skeleton(graph).stage(0).counts() == graph.stage(0).counts());

  const FilteredSSet tri = vr_system(standard_space(2, D(1)), 2);
  CHECK(evaluate_at(tri, D(1)).count(2) == 1);
  const FilteredSSet sk = one_skeleton(tri);
  CHECK(sk.cap() == 1);
  CHECK(evaluate_at(sk, D(1)).counts() == std::vector<std::size_t>{3, 3});
}

TEST_CASE("path-component barcodes") {
  const Barcode one = pi0_barcode(vr_system(standard_space(0, D(0)), 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].birth == D(0));
  CHECK(one[0].death.is_inf());
  CHECK(one[0].essential);

  // components joined only at t = inf die there
  const Barcode apart = pi0_barcode(vr_system(space({"a", "b"}, {{0, kInf}, {kInf, 0}}), 1));
  REQUIRE(apart.size() == 2);
  CHECK(apart[0] == Bar{D(0), ExtDist::inf(), "a", true});
  CHECK(apart[1] == Bar{D(0), ExtDist::inf(), "b", false});
  CHECK(bars_alive_at(apart, D(5)) == 2);
  CHECK(bars_alive_at(apart, ExtDist::inf()) == 1);

  const EpMetricSpace ba = space({"b", "a"}, {{0, 1}, {1, 0}});
  const Barcode two = pi0_barcode(vr_system(ba, 1));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Bar{D(0), ExtDist::inf(), "a", true});
  CHECK(two[1] == Bar{D(0), D(1), "b"});

  // a vertex born later dies first when it merges into an older component
  const EpMetricSpace line = euclidean_space({{0}, {1}, {3}}, {"a", "b", "c"});
  const Barcode late = pi0_barcode(degree_rips_system(line, 2, 1));
  std::set<std::string> reps;
  for (const auto& bar : late) {
    CHECK(bar.birth < bar.death);
    reps.insert(bar.representative);
  }
  CHECK(bars_alive_at(late, D(0.5)) == 0);
  CHECK(bars_alive_at(late, D(1)) == 1);

  for (const auto& x : integer_corpus(8, 15)) {
    for (const FilteredSSet& f : {vr_system(x, 1), degree_rips_system(x, std::min<std::size_t>(2, x.size()), 1)}) {
      const Barcode b = pi0_barcode(f);
      for (ExtDist t : f.critical_values()) {
        CHECK(bars_alive_at(b, t) == path_components(evaluate_at(f, t)).size());
      }
    }
  }
}
