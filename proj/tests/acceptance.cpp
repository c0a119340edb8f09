// Acceptance driver: runs the verification suites with default options and
// prints one PASS/FAIL line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <iostream>
#include <map>
#include <set>

#include <fmt/format.h>

#include "epx/report.hpp"
#include "epx/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::string suite;
  std::vector<std::string> prefixes;  // empty: every check of the suite
  std::size_t min_instances;          // distinct second id segments required
  std::string tolerance;
};

bool selected(const epx::Check& c, const Criterion& k) {
  if (c.id.rfind("error/", 0) == 0) return true;
  if (k.prefixes.empty()) return true;
  for (const auto& p : k.prefixes) {
    if (c.id.rfind(p, 0) == 0) return true;
  }
  return false;
}

std::string instance_of(const std::string& id) {
  const auto a = id.find('/');
  if (a == std::string::npos) return id;
  const auto b = id.find('/', a + 1);
  return id.substr(a + 1, b == std::string::npos ? std::string::npos : b - a - 1);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "V_t and S_t agree on Betti numbers, torsion (k=0..2, D=3) and path components", "theorem16",
       {"pi0/", "homology/"}, 20, "exact"},
      {2, "realize(vr_system(X)) and realize(degree_rips_system(X, k=1,2)) recover X", "realization",
       {"vr-realization/", "degree-rips-realization/"}, 20, "exact on matrices, 1e-9 on Euclidean"},
      {3, "realization equals realization of the one-skeleton", "realization", {"one-skeleton/"}, 20, "exact"},
      {4, "realizing a graph at scale s gives s times graph distance", "realization", {"representable/"}, 10,
       "exact"},
      {5, "20-stage sequential colimit: d = 2^-20 <= 1e-6, monotone, identification collapses", "bad-colimit",
       {}, 1, "exact, bound 1e-6"},
      {6, "generated subcomplexes of S_t(X) are acyclic through degree 2", "contractibility", {"generated/"}, 20,
       "exact"},
      {7, "L eta_* = id, both poset maps monotone, nerves have equal Betti numbers", "theorem16",
       {"poset-maps/", "poset-nerves/"}, 20, "exact"},
      {8, "pi is bijective on VR stages; Betti of sd(Z), BNZ and Z agree", "subdivision", {}, 20, "exact"},
      {9, "exhaustive uniqueness of EZ decompositions through dimension 3", "ez-uniqueness", {}, 5, "exact"},
      {10, "excision: pi0 of V_s(X) u V_s(Y) maps bijectively to pi0 of V_s(X u_m Y)", "excision", {"excision/"},
       10, "exact"},
      {11, "shortest-path quotient metric equals exhaustive polygonal minimum", "colimits", {"quotient-oracle/"},
       20, "exact on integers, 1e-9 on Euclidean"},
      {12, "S_inf(Y) has the homology of a point through degree 2", "contractibility", {"infinite-scale/"}, 20,
       "exact"},
  };

  const auto start = std::chrono::steady_clock::now();
  std::map<std::string, epx::SuiteReport> reports;
  for (const auto& k : criteria) {
    if (!reports.contains(k.suite)) reports.emplace(k.suite, epx::run_suite(k.suite, epx::SuiteOptions{}));
  }

  int failed = 0;
  for (const auto& k : criteria) {
    const epx::SuiteReport& r = reports.at(k.suite);
    std::size_t total = 0;
    std::size_t bad = 0;
    std::set<std::string> instances;
    std::string first_failure;
    for (const auto& c : r.checks) {
      if (!selected(c, k)) continue;
      ++total;
      instances.insert(instance_of(c.id));
      if (!c.passed) {
        ++bad;
        if (first_failure.empty()) first_failure = c.id + (c.witness.empty() ? "" : ": " + c.witness);
      }
    }
    if (k.number == 1) {
      for (const auto& row : r.rows) {
        if (!row.match) {
          ++bad;
          if (first_failure.empty()) first_failure = fmt::format("row t={} degree={}", row.t.to_string(), row.degree);
        }
      }
    }
    const bool coverage = total > 0 && instances.size() >= k.min_instances;
    const bool ok = coverage && bad == 0;
    if (!ok) ++failed;
    std::cout << fmt::format("{} C{:<2} {} [{}] checks={} instances={} failed={}", ok ? "PASS" : "FAIL", k.number,
                             k.title, k.tolerance, total, instances.size(), bad);
    if (!coverage) std::cout << " (insufficient coverage)";
    if (!first_failure.empty()) std::cout << " first=" << first_failure;
    std::cout << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << fmt::format("{}/{} criteria passed in {:.1f}s\n", criteria.size() - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
