#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epx/ext_dist.hpp"

namespace epx {

struct Check {
  std::string id;
  /// The statement the check exercises, in words.
  std::string property;
  bool passed = false;
  /// Seed and parameters reproducing a failure; empty on success.
  std::string witness;
};

/// One (t, degree) row of a V_t / S_t comparison.
struct CompareRow {
  ExtDist t;
  int degree = 0;
  std::int64_t vr_betti = 0;
  std::int64_t singular_betti = 0;
  std::vector<std::int64_t> vr_torsion;
  std::vector<std::int64_t> singular_torsion;
  bool match = false;
};

struct SuiteReport {
  std::string name;
  std::vector<Check> checks;
  std::vector<CompareRow> rows;
  double duration_seconds = 0.0;

  /// Appends a check. Throws std::logic_error on a repeated id.
  void add(std::string id, std::string property, bool passed, std::string witness = {});
  bool passed() const;
  std::size_t failures() const;
};

}  // namespace epx
