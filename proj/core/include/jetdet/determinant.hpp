#pragma once

#include <cstddef>
#include <vector>

#include "jetdet/error.hpp"
#include "jetdet/polynomial.hpp"

namespace jetdet {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
Matrix<T> drop_row0_col(const Matrix<T>& m, std::size_t col) {
  Matrix<T> minor;
  minor.reserve(m.size() - 1);
  for (std::size_t i = 1; i < m.size(); ++i) {
    std::vector<T> row;
    row.reserve(m.size() - 1);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != col) row.push_back(m[i][j]);
    }
    minor.push_back(std::move(row));
  }
  return minor;
}

}  // namespace detail

/// Laplace expansion along the first row. Works for any commutative ring
/// element type providing +, - and *. Matrices here are at most 4 x 4.
template <class T>
T cofactor_determinant(const Matrix<T>& m) {
  if (m.empty()) throw UsageError("determinant of an empty matrix needs an explicit unit");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw UsageError("determinant requires a square matrix");
  }
  if (m.size() == 1) return m[0][0];
  if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  T acc = m[0][0] * cofactor_determinant(detail::drop_row0_col(m, 0));
  for (std::size_t j = 1; j < m.size(); ++j) {
    T cofactor = m[0][j] * cofactor_determinant(detail::drop_row0_col(m, j));
    if (j % 2 == 0) {
      acc = acc + cofactor;
    } else {
      acc = acc - cofactor;
    }
  }
  return acc;
}

using PolyMatrix = Matrix<Polynomial>;

inline Polynomial determinant(const PolyMatrix& m) { return cofactor_determinant(m); }

}  // namespace jetdet
