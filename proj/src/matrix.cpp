#include "dp6/matrix.hpp"

namespace dp6 {

Echelon row_echelon(CycMatrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
    CycElem inv = m(row, col).inverse();
    for (std::size_t k = col; k < m.cols(); ++k)
      if (!m(row, k).is_zero()) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      CycElem f = m(r, col);
      for (std::size_t k = col; k < m.cols(); ++k)
        if (!m(row, k).is_zero()) m(r, k) -= f * m(row, k);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const CycMatrix& m) { return row_echelon(m).rank(); }

CycMatrix nullspace(const CycMatrix& m) {
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  CycMatrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], k) = -e.rref(r, free[k]);
  }
  return basis;
}

CycMatrix inverse(const CycMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw FieldError("inverse of non-square matrix");
  CycMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_echelon(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw FieldError("singular matrix");
  CycMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

CycElem determinant(CycMatrix m) {
  const std::size_t n = m.rows();
  CycElem det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return CycElem(0);
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(col, k));
      det = -det;
    }
    det *= m(col, col);
    CycElem inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      CycElem f = m(r, col) * inv;
      for (std::size_t k = col; k < n; ++k) m(r, k) -= f * m(col, k);
    }
  }
  return det;
}

bool is_scalar(const CycMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
      if (i == j && m(i, j) != m(0, 0)) return false;
    }
  return !m(0, 0).is_zero();
}

CycMatrix matpow(const CycMatrix& m, long e) {
  if (e < 0) return matpow(inverse(m), -e);
  CycMatrix r = CycMatrix::identity(m.rows()), b = m;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Matrix<Complex> embed(const CycMatrix& m) {
  Matrix<Complex> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).embed();
  return r;
}

}  // namespace dp6
