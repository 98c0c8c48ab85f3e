#include "ngla/matrix.hpp"

#include <stdexcept>

namespace ngla {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QVec Matrix::row(std::size_t i) const {
  QVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) p.at(i, j) += x * o.at(k, j);
    }
  return p;
}

QVec Matrix::apply(const QVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  QVec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Matrix rref(const Matrix& m) {
  Matrix r = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
    Rat inv = Rat(1) / r.at(pivot_row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r.at(i, col) == 0) continue;
      Rat f = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        if (r.at(pivot_row, j) != 0) r.at(i, j) -= f * r.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return r;
}

std::size_t rank(const Matrix& m) {
  Matrix r = rref(m);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) { nonzero = true; break; }
    if (nonzero) ++rk;
  }
  return rk;
}

namespace {

Rat minor_det(const Matrix& m, const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) {
  // Laplace expansion on index subsets; fine for the tiny test sizes.
  std::size_t n = ri.size();
  if (n == 1) return m.at(ri[0], ci[0]);
  Rat det = 0;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(ri[0], ci[k]) != 0) {
      std::vector<std::size_t> r2(ri.begin() + 1, ri.end());
      std::vector<std::size_t> c2;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) c2.push_back(ci[j]);
      det += Rat(sign) * m.at(ri[0], ci[k]) * minor_det(m, r2, c2);
    }
    sign = -sign;
  }
  return det;
}

bool subsets_have_nonzero_minor(const Matrix& m, std::size_t k) {
  std::vector<std::size_t> ri(k), ci(k);
  // iterate over all k-subsets of rows and columns
  std::vector<std::size_t> rsel(k);
  for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
  auto advance = [](std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k2 = s.size();
    for (std::size_t i = k2; i-- > 0;) {
      if (s[i] + (k2 - i) < n) {
        ++s[i];
        for (std::size_t j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<std::size_t> csel(k);
    for (std::size_t i = 0; i < k; ++i) csel[i] = i;
    do {
      if (minor_det(m, rsel, csel) != 0) return true;
    } while (advance(csel, m.cols()));
  } while (advance(rsel, m.rows()));
  return false;
}

}  // namespace

std::size_t rank_by_minors(const Matrix& m) {
  std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = kmax; k >= 1; --k)
    if (subsets_have_nonzero_minor(m, k)) return k;
  return 0;
}

Rat determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) idx[i] = i;
  return minor_det(m, idx, idx);
}

}  // namespace ngla
