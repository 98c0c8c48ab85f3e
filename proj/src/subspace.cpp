#include "ngla/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngla {

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    QVec e(ambient, Rat(0));
    e[i] = 1;
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVec>& gens) {
  Subspace s(ambient);
  for (const auto& g : gens) s.insert(g);
  return s;
}

QVec Subspace::reduce(QVec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (c != 0) {
      Rat f = -c;
      vec_add_scaled(v, rows_[r], f);
    }
  }
  return v;
}

bool Subspace::insert(QVec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && v[p] == 0) ++p;
  if (p == ambient_) return false;
  Rat inv = Rat(1) / v[p];
  for (auto& x : v) x *= inv;
  // clear the new pivot column in existing rows, keep rref
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat c = rows_[r][p];
    if (c != 0) vec_add_scaled(rows_[r], v, -c);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool Subspace::contains(const QVec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains_subspace(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  Subspace s = a;
  for (const auto& r : b.basis()) s.insert(r);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim(), p = a.dim(), q = b.dim();
  if (p == 0 || q == 0) return Subspace(n);
  // v in both spans: v = x A = y B; solve A^T x - B^T y = 0.
  Matrix m(n, p + q);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, p + j) = -b.basis()[j][i];
  Subspace ker = kernel(m);
  std::vector<QVec> gens;
  for (const auto& k : ker.basis()) {
    QVec v(n, Rat(0));
    for (std::size_t j = 0; j < p; ++j)
      if (k[j] != 0) vec_add_scaled(v, a.basis()[j], k[j]);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (!a.contains_subspace(b))
    throw std::invalid_argument("quotient_dim: denominator is not a subspace of numerator");
  return a.dim() - b.dim();
}

Subspace kernel(const Matrix& m) {
  Matrix r = rref(m);
  const std::size_t n = m.cols();
  std::vector<long> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < r.rows(); ++col) {
    if (r.at(row, col) != 0) {
      pivot_of_col[col] = static_cast<long>(row);
      ++row;
    }
  }
  std::vector<QVec> gens;
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] != -1) continue;
    QVec v(n, Rat(0));
    v[col] = 1;
    for (std::size_t c = 0; c < col; ++c)
      if (pivot_of_col[c] != -1) v[c] = -r.at(static_cast<std::size_t>(pivot_of_col[c]), col);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

}  // namespace ngla
