#pragma once

#include <cstddef>
#include <vector>

#include "pcalc/rational_function.hpp"

namespace pcalc {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Rank over the rationals by exact Gaussian elimination.
inline std::size_t rank(Matrix<Rational> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Determinant over the field of rational functions of one chart.
inline RationalFunction determinant(Matrix<RationalFunction> m, const ChartPtr& chart) {
  const std::size_t n = m.size();
  RationalFunction det(chart, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return RationalFunction(chart);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const RationalFunction factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return det;
}

}  // namespace pcalc
