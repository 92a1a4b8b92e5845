#include "dk/matrix.hpp"

#include <cstdlib>
#include <utility>

namespace dk {

MatZ MatZ::identity(std::size_t n) {
  MatZ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatZ multiply(const MatZ& a, const MatZ& b) {
  MatZ c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Int& w = b.at(k, j);
        if (w != 0) c.at(i, j) += v * w;
      }
    }
  return c;
}

namespace {

// One-step Bareiss elimination, columns processed left to right, pivot
// row chosen with smallest nonzero magnitude. Returns pivot columns.
std::vector<std::size_t> eliminate(MatZ a) {
  std::vector<std::size_t> pivots;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      if (best == a.rows() ||
          abs(a.at(i, c)) < abs(a.at(best, c)))
        best = i;
    }
    if (best == a.rows()) continue;
    if (best != r)
      for (std::size_t j = c; j < a.cols(); ++j)
        std::swap(a.at(best, j), a.at(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j)
        a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const MatZ& m) { return eliminate(m).size(); }

std::vector<std::size_t> pivot_columns(const MatZ& m) { return eliminate(m); }

MatZ select_columns(const MatZ& m, const std::vector<std::size_t>& idx) {
  MatZ out(m.rows(), idx.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out.at(i, j) = m.at(i, idx[j]);
  return out;
}

}  // namespace dk
