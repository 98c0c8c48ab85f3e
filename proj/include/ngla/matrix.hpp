#pragma once

#include <cstddef>
#include <vector>

#include "ngla/rational.hpp"

namespace ngla {

/// Dense matrix over Q, row major. Desk scale: dims stay well below ~2000,
/// so no sparse machinery.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<QVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QVec row(std::size_t i) const;
  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  QVec apply(const QVec& v) const;  // this * v

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Unique reduced row echelon form; row space preserved.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rank via exhaustive search for a maximal nonvanishing minor. Exponential;
/// test oracle only.
std::size_t rank_by_minors(const Matrix& m);

Rat determinant(const Matrix& m);

}  // namespace ngla
