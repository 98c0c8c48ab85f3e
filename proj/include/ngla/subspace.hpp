#pragma once

#include <vector>

#include "ngla/matrix.hpp"
#include "ngla/rational.hpp"

namespace ngla {

/// Subspace of Q^n held in reduced row echelon form, so equality of
/// subspaces is structural equality of the basis rows. Rows are kept sorted
/// by pivot column; every pivot is 1 and is the only nonzero entry in its
/// column.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<QVec>& gens);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<QVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis and adjoins the residue if nonzero,
  /// restoring rref. Returns true when the dimension grew.
  bool insert(QVec v);

  /// Residue of v after reduction modulo the subspace; zero iff contained.
  QVec reduce(QVec v) const;
  bool contains(const QVec& v) const;
  bool contains_subspace(const Subspace& other) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  std::size_t ambient_;
  std::vector<QVec> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// dim(a / b); requires b to be a subspace of a.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Null space {v : m v = 0}, canonicalized.
Subspace kernel(const Matrix& m);

}  // namespace ngla
