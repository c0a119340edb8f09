#include "epx/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace epx {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in SNF");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in SNF");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in SNF");
  return r;
}

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

class Reducer {
 public:
  Reducer(const IntMatrix& m, bool track) : d_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows);
      v_ = IntMatrix::identity(m.cols);
    }
  }

  void run() {
    const std::size_t r = d_.rows;
    const std::size_t c = d_.cols;
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      if (!move_smallest_to(t, t, r, t, c)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (d_(i, t) == 0) continue;
          add_row(i, t, -(d_(i, t) / d_(t, t)));
          if (d_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (d_(t, j) == 0) continue;
          add_col(j, t, -(d_(t, j) / d_(t, t)));
          if (d_(t, j) != 0) clean = false;
        }
        if (!clean) {
          // a smaller remainder now sits in row t or column t
          move_smallest_in_cross(t);
          continue;
        }
        bool divisible = true;
        for (std::size_t i = t + 1; i < r && divisible; ++i) {
          for (std::size_t j = t + 1; j < c; ++j) {
            if (d_(i, j) % d_(t, t) != 0) {
              add_row(t, i, 1);
              divisible = false;
              break;
            }
          }
        }
        if (divisible) break;
      }
      if (d_(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix& d() { return d_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  bool move_smallest_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0,
                        std::size_t c1) {
    std::size_t bi = r1, bj = c1;
    std::int64_t best = 0;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        const std::int64_t a = iabs(d_(i, j));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    std::int64_t best = iabs(d_(t, t));
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < d_.rows; ++i) {
      const std::int64_t a = iabs(d_(i, t));
      if (a != 0 && a < best) {
        best = a;
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < d_.cols; ++j) {
      const std::int64_t a = iabs(d_(t, j));
      if (a != 0 && a < best) {
        best = a;
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols; ++j) std::swap(d_(a, j), d_(b, j));
    if (track_) {
      for (std::size_t j = 0; j < u_.cols; ++j) std::swap(u_(a, j), u_(b, j));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows; ++i) std::swap(d_(i, a), d_(i, b));
    if (track_) {
      for (std::size_t i = 0; i < v_.rows; ++i) std::swap(v_(i, a), v_(i, b));
    }
  }

  // row[target] += k * row[source]
  void add_row(std::size_t target, std::size_t source, std::int64_t k) {
    for (std::size_t j = 0; j < d_.cols; ++j) {
      d_(target, j) = checked_add(d_(target, j), checked_mul(k, d_(source, j)));
    }
    if (track_) {
      for (std::size_t j = 0; j < u_.cols; ++j) {
        u_(target, j) = checked_add(u_(target, j), checked_mul(k, u_(source, j)));
      }
    }
  }

  // col[target] += k * col[source]
  void add_col(std::size_t target, std::size_t source, std::int64_t k) {
    for (std::size_t i = 0; i < d_.rows; ++i) {
      d_(i, target) = checked_add(d_(i, target), checked_mul(k, d_(i, source)));
    }
    if (track_) {
      for (std::size_t i = 0; i < v_.rows; ++i) {
        v_(i, target) = checked_add(v_(i, target), checked_mul(k, v_(i, source)));
      }
    }
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < d_.cols; ++j) d_(t, j) = -d_(t, j);
    if (track_) {
      for (std::size_t j = 0; j < u_.cols; ++j) u_(t, j) = -u_(t, j);
    }
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

std::vector<std::int64_t> SmithForm::invariant_factors() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i) {
    if (d(i, i) != 0) out.push_back(d(i, i));
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r(m, true);
  r.run();
  return SmithForm{std::move(r.u()), std::move(r.d()), std::move(r.v())};
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const std::int64_t num =
            checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string check_smith_form(const IntMatrix& m, const SmithForm& f) {
  if (f.u.rows != m.rows || f.u.cols != m.rows || f.v.rows != m.cols || f.v.cols != m.cols) {
    return "transform shapes do not match";
  }
  if (multiply(multiply(f.u, m), f.v) != f.d) return "U*M*V differs from D";
  std::int64_t previous = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < f.d.rows; ++i) {
    for (std::size_t j = 0; j < f.d.cols; ++j) {
      if (i != j && f.d(i, j) != 0) return fmt::format("off-diagonal entry at ({},{})", i, j);
    }
    if (i >= f.d.cols) continue;
    const std::int64_t x = f.d(i, i);
    if (x < 0) return fmt::format("negative diagonal entry at {}", i);
    if (x == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return "non-zero diagonal entry after a zero";
    if (x % previous != 0) return fmt::format("divisibility chain broken at {}", i);
    previous = x;
  }
  if (iabs(determinant(f.u)) != 1) return "U is not unimodular";
  if (iabs(determinant(f.v)) != 1) return "V is not unimodular";
  return {};
}

IntMatrix to_dense(const SparseColumnMatrix& m) {
  IntMatrix out(m.rows, m.columns.size());
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    for (auto [i, v] : m.columns[j]) out(i, j) = v;
  }
  return out;
}

std::vector<std::int64_t> sparse_invariant_factors(const SparseColumnMatrix& m) {
  using Column = std::vector<std::pair<std::size_t, std::int64_t>>;
  std::vector<Column> cols = m.columns;
  const std::size_t ncols = cols.size();
  std::vector<std::vector<std::size_t>> row_cols(m.rows);
  for (std::size_t j = 0; j < ncols; ++j) {
    for (auto [i, v] : cols[j]) row_cols[i].push_back(j);
  }
  std::vector<char> col_alive(ncols, 1);
  std::vector<char> row_alive(m.rows, 1);
  std::size_t unit_pivots = 0;

  auto entry = [&](const Column& c, std::size_t row) -> std::int64_t {
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    return (it != c.end() && it->first == row) ? it->second : 0;
  };

  auto pivot = [&](std::size_t r, std::size_t c) {
    const std::int64_t a = entry(cols[c], r);  // +-1, its own inverse
    std::vector<std::size_t> targets = row_cols[r];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t t : targets) {
      if (t == c || !col_alive[t]) continue;
      const std::int64_t b = entry(cols[t], r);
      if (b == 0) continue;
      const std::int64_t factor = checked_mul(b, a);
      Column merged;
      merged.reserve(cols[t].size() + cols[c].size());
      auto it = cols[t].begin();
      auto jt = cols[c].begin();
      while (it != cols[t].end() || jt != cols[c].end()) {
        if (jt == cols[c].end() || (it != cols[t].end() && it->first < jt->first)) {
          merged.push_back(*it++);
        } else if (it == cols[t].end() || jt->first < it->first) {
          merged.emplace_back(jt->first, checked_mul(-factor, jt->second));
          row_cols[jt->first].push_back(t);
          ++jt;
        } else {
          const std::int64_t v = checked_sub(it->second, checked_mul(factor, jt->second));
          if (v != 0) merged.emplace_back(it->first, v);
          ++it;
          ++jt;
        }
      }
      cols[t] = std::move(merged);
    }
    col_alive[c] = 0;
    row_alive[r] = 0;
    cols[c].clear();
    row_cols[r].clear();
    ++unit_pivots;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (col_alive[j] && !cols[j].empty()) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cols[a].size() < cols[b].size();
    });
    for (std::size_t c : order) {
      if (!col_alive[c] || cols[c].empty()) continue;
      std::size_t best_row = m.rows;
      std::size_t best_count = 0;
      for (auto [i, v] : cols[c]) {
        if (iabs(v) != 1) continue;
        if (best_row == m.rows || row_cols[i].size() < best_count) {
          best_row = i;
          best_count = row_cols[i].size();
        }
      }
      if (best_row == m.rows) continue;
      pivot(best_row, c);
      progress = true;
    }
  }

  // Whatever is left has no unit entries; reduce it densely.
  std::vector<std::size_t> rest_cols;
  for (std::size_t j = 0; j < ncols; ++j) {
    if (col_alive[j] && !cols[j].empty()) rest_cols.push_back(j);
  }
  std::vector<std::int64_t> factors(unit_pivots, 1);
  if (!rest_cols.empty()) {
    std::vector<std::size_t> row_slot(m.rows, m.rows);
    std::size_t nrows = 0;
    for (std::size_t j : rest_cols) {
      for (auto [i, v] : cols[j]) {
        if (row_slot[i] == m.rows) row_slot[i] = nrows++;
      }
    }
    IntMatrix dense(nrows, rest_cols.size());
    for (std::size_t k = 0; k < rest_cols.size(); ++k) {
      for (auto [i, v] : cols[rest_cols[k]]) dense(row_slot[i], k) = v;
    }
    Reducer red(dense, false);
    red.run();
    for (std::size_t i = 0; i < std::min(dense.rows, dense.cols); ++i) {
      if (red.d()(i, i) != 0) factors.push_back(red.d()(i, i));
    }
    std::sort(factors.begin(), factors.end());
  }
  return factors;
}

}  // namespace epx
