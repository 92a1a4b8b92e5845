#pragma once

#include <cstddef>
#include <vector>

#include "dk/numeric.hpp"

namespace dk {

/// Dense integer matrix, row-major. All linear algebra here is exact.
class MatZ {
public:
  MatZ() = default;
  MatZ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const MatZ&) const = default;

  static MatZ identity(std::size_t n);

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

MatZ multiply(const MatZ& a, const MatZ& b);

/// Rank over Q by fraction-free (Bareiss) elimination with
/// smallest-pivot selection.
std::size_t rank(const MatZ& m);

/// Indices of a maximal set of linearly independent columns.
std::vector<std::size_t> pivot_columns(const MatZ& m);

/// Columns of m selected by index.
MatZ select_columns(const MatZ& m, const std::vector<std::size_t>& idx);

}  // namespace dk
