#include "ngla/cohomology.hpp"

#include <stdexcept>

namespace ngla {

std::size_t wedge_dim(std::size_t n) { return n * (n - 1) / 2; }

std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= j || j >= n) throw std::invalid_argument("wedge_index: need i < j < n");
  // lex order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> wedge_pair(std::size_t idx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t row = n - i - 1;
    if (idx < row) return {i, i + 1 + idx};
    idx -= row;
  }
  throw std::invalid_argument("wedge_pair: index out of range");
}

TwoCochain TwoCochain::unit(std::size_t n, std::size_t i, std::size_t j) {
  TwoCochain c(n);
  c.set(i, j, Rat(1));
  return c;
}

Rat TwoCochain::eval(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  bool neg = i > j;
  if (neg) std::swap(i, j);
  auto it = coeffs.find({i, j});
  if (it == coeffs.end()) return 0;
  return neg ? -it->second : it->second;
}

Rat TwoCochain::eval(const QVec& x, const QVec& y) const {
  if (x.size() != dim || y.size() != dim)
    throw std::invalid_argument("cochain eval: coordinate length mismatch");
  Rat r = 0;
  for (const auto& [ij, a] : coeffs)
    r += a * (x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first]);
  return r;
}

void TwoCochain::set(std::size_t i, std::size_t j, Rat a) {
  if (i == j) throw std::invalid_argument("cochain set: i == j");
  if (i > j) {
    std::swap(i, j);
    a = -a;
  }
  if (a == 0)
    coeffs.erase({i, j});
  else
    coeffs[{i, j}] = std::move(a);
}

bool TwoCochain::is_zero() const { return coeffs.empty(); }

QVec TwoCochain::as_vector() const {
  QVec v(wedge_dim(dim), Rat(0));
  for (const auto& [ij, a] : coeffs) v[wedge_index(ij.first, ij.second, dim)] = a;
  return v;
}

TwoCochain TwoCochain::from_vector(std::size_t n, const QVec& v) {
  if (v.size() != wedge_dim(n)) throw std::invalid_argument("cochain from_vector: bad length");
  TwoCochain c(n);
  for (std::size_t idx = 0; idx < v.size(); ++idx)
    if (v[idx] != 0) {
      auto [i, j] = wedge_pair(idx, n);
      c.coeffs[{i, j}] = v[idx];
    }
  return c;
}

Matrix lambda_map(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix m(n, wedge_dim(n));
  for (const auto& [ij, terms] : g.constants()) {
    std::size_t col = wedge_index(ij.first, ij.second, n);
    for (const auto& [k, c] : terms) m.at(k, col) = c;
  }
  return m;
}

namespace {

/// bivector [x_i, x_j] ^ X_k in Lambda^2 coordinates, accumulated into v
void wedge_accumulate(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k, QVec& v) {
  bool neg;
  const SparseVec& br = g.bracket_basis(i, j, neg);
  const std::size_t n = g.dim();
  for (const auto& [l, c] : br) {
    Rat coeff = neg ? -c : c;
    if (l == k) continue;  // X_k ^ X_k = 0
    if (l < k)
      v[wedge_index(l, k, n)] += coeff;
    else
      v[wedge_index(k, l, n)] -= coeff;
  }
}

}  // namespace

Subspace omega_subspace(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Subspace om(wedge_dim(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        QVec v(wedge_dim(n), Rat(0));
        wedge_accumulate(g, i, j, k, v);  // [x_i, x_j] ^ x_k
        wedge_accumulate(g, j, k, i, v);  // [x_j, x_k] ^ x_i
        wedge_accumulate(g, k, i, j, v);  // [x_k, x_i] ^ x_j
        if (!is_zero(v)) om.insert(std::move(v));
      }
  return om;
}

CohomologySpace h2(const LieAlgebra& g) {
  CohomologySpace out;
  out.ker_lambda = kernel(lambda_map(g));
  out.omega = omega_subspace(g);
  out.h2_dim = static_cast<int>(out.ker_lambda.dim() - out.omega.dim());

  // pivot positions added to Omega by Ker lambda rows index the dual
  // representatives phi_ij
  Subspace acc = out.omega;
  const std::size_t n = g.dim();
  for (const auto& row : out.ker_lambda.basis()) {
    QVec residue = acc.reduce(row);
    std::size_t p = 0;
    while (p < residue.size() && residue[p] == 0) ++p;
    if (p == residue.size()) continue;
    acc.insert(std::move(residue));
    auto [i, j] = wedge_pair(p, n);
    out.representatives.push_back(TwoCochain::unit(n, i, j));
  }
  return out;
}

bool cocycle_zero_test(const LieAlgebra& g, const TwoCochain& c) {
  if (c.dim != g.dim()) throw std::invalid_argument("cochain dimension mismatch");
  return omega_subspace(g).contains(c.as_vector());
}

bool is_cocycle(const LieAlgebra& g, const TwoCochain& c) {
  if (c.dim != g.dim()) throw std::invalid_argument("cochain dimension mismatch");
  Subspace om = omega_subspace(g);
  QVec a = c.as_vector();
  for (const auto& w : om.basis()) {
    Rat s = 0;
    for (std::size_t idx = 0; idx < a.size(); ++idx)
      if (w[idx] != 0 && a[idx] != 0) s += w[idx] * a[idx];
    if (s != 0) return false;
  }
  return true;
}

TwoCochain coboundary_of_dual(const LieAlgebra& g, std::size_t dual) {
  TwoCochain c(g.dim());
  for (const auto& [ij, terms] : g.constants())
    for (const auto& [k, coeff] : terms)
      if (k == dual) c.set(ij.first, ij.second, coeff);
  return c;
}

std::vector<std::pair<int, int>> graded_cocycle_indices(int n, int k, int t, bool half) {
  if (t < 1 || t > (n - 3) / 2) throw std::invalid_argument("graded_cocycle_indices: t out of range");
  if (half && t % 2 == 0)
    throw std::invalid_argument("graded_cocycle_indices: fractional family needs odd t");
  if (k < 2) throw std::invalid_argument("graded_cocycle_indices: k >= 2");
  int s = half ? t + 1 + k : 2 * t + 1 + k;
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i) {
    int j = s - i;
    if (j > i && j <= n) out.push_back({i, j});
  }
  return out;
}

}  // namespace ngla
