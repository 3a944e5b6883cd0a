#pragma once

#include <initializer_list>

#include "ybmap/linalg.hpp"

namespace ybmap::testing {

inline Matrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  Matrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Matrix column(std::initializer_list<Complex> values) {
  Matrix m(static_cast<Index>(values.size()), 1);
  Index i = 0;
  for (const Complex& v : values) m(i++, 0) = v;
  return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace ybmap::testing
