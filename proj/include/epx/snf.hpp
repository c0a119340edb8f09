#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace epx {

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static IntMatrix identity(std::size_t n);

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Throws std::overflow_error if an entry leaves the 64-bit range.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// U * M * V = D with D diagonal, d_1 | d_2 | ..., all d_i >= 0, U and V unimodular.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// Non-zero diagonal entries of D in order.
  std::vector<std::int64_t> invariant_factors() const;
};

/// Pivots on the smallest non-zero absolute value, ties broken in row-major order.
SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant via fraction-free elimination (Bareiss); square input only.
std::int64_t determinant(const IntMatrix& m);

/// Empty string if U*M*V == D, D is diagonal with the divisibility chain, and
/// U, V have determinant +-1; otherwise a description of the failure.
std::string check_smith_form(const IntMatrix& m, const SmithForm& f);

/// Sparse integer matrix stored by columns; each column is sorted by row.
struct SparseColumnMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
};

IntMatrix to_dense(const SparseColumnMatrix& m);

/// Non-zero invariant factors of a sparse matrix. Unit pivots are eliminated
/// sparsely (fewest-entries row first); any remainder goes through the dense SNF.
std::vector<std::int64_t> sparse_invariant_factors(const SparseColumnMatrix& m);

}  // namespace epx
