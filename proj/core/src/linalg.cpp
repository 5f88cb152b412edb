#include "sn/linalg.hpp"

#include <utility>

namespace sn {

DenseMatrix identity_matrix(std::size_t size) {
  DenseMatrix m(size, std::vector<Scalar>(size, Scalar(0)));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = 1;
  return m;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
  const std::size_t n = m.size();
  DenseMatrix a = m;
  DenseMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const Scalar s = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Scalar f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Scalar determinant(const DenseMatrix& m) {
  const std::size_t n = m.size();
  DenseMatrix a = m;
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Scalar f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace sn
