#include "ngla/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngla {

const SparseVec LieAlgebra::empty_{};

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim) {
  labels_.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) labels_[i] = static_cast<int>(i) + 1;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<int> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (labels_.size() != dim_) throw std::invalid_argument("label count mismatch");
}

std::size_t LieAlgebra::pos_of_label(int label) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  return static_cast<std::size_t>(-1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVec value) {
  if (i >= j || j >= dim_) throw std::invalid_argument("set_bracket: need i < j < dim");
  std::sort(value.begin(), value.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  value.erase(std::remove_if(value.begin(), value.end(),
                             [](const auto& t) { return t.second == 0; }),
              value.end());
  if (value.empty())
    c_.erase({i, j});
  else
    c_[{i, j}] = std::move(value);
}

void LieAlgebra::add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
  if (c == 0) return;
  if (i == j) throw std::invalid_argument("add_bracket_term: i == j");
  Rat v = c;
  std::size_t a = i, b = j;
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  auto& vec = c_[{a, b}];
  for (auto& t : vec)
    if (t.first == k) {
      t.second += v;
      if (t.second == 0) {
        vec.erase(std::remove_if(vec.begin(), vec.end(),
                                 [k](const auto& u) { return u.first == k && u.second == 0; }),
                  vec.end());
        if (vec.empty()) c_.erase({a, b});
      }
      return;
    }
  vec.push_back({k, v});
  std::sort(vec.begin(), vec.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
}

const SparseVec& LieAlgebra::bracket_basis(std::size_t i, std::size_t j, bool& negate) const {
  negate = false;
  if (i == j) return empty_;
  std::size_t a = i, b = j;
  if (a > b) {
    std::swap(a, b);
    negate = true;
  }
  auto it = c_.find({a, b});
  return it == c_.end() ? empty_ : it->second;
}

QVec LieAlgebra::bracket_basis_dense(std::size_t i, std::size_t j) const {
  bool neg;
  const SparseVec& s = bracket_basis(i, j, neg);
  QVec v(dim_, Rat(0));
  for (const auto& [k, c] : s) v[k] = neg ? -c : c;
  return v;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: coordinate length mismatch");
  QVec r(dim_, Rat(0));
  for (const auto& [ij, terms] : c_) {
    // [x, y] picks up C^k_{ij} (x_i y_j - x_j y_i)
    Rat coeff = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
    if (coeff == 0) continue;
    for (const auto& [k, c] : terms) r[k] += coeff * c;
  }
  return r;
}

Matrix LieAlgebra::ad(const QVec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    QVec ej(dim_, Rat(0));
    ej[j] = 1;
    QVec col = bracket(x, ej);
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<JacobiViolation> jacobi_violations(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        QVec d(n, Rat(0));
        auto acc = [&](std::size_t a, std::size_t b, std::size_t c) {
          // [X_a, [X_b, X_c]]
          bool neg;
          const SparseVec& inner = g.bracket_basis(b, c, neg);
          for (const auto& [l, coeff] : inner) {
            bool neg2;
            const SparseVec& outer = g.bracket_basis(a, l, neg2);
            Rat f = (neg ? -coeff : coeff) * (neg2 ? Rat(-1) : Rat(1));
            for (const auto& [m, c2] : outer) d[m] += f * c2;
          }
        };
        acc(i, j, k);
        acc(k, i, j);
        acc(j, k, i);
        if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

LieAlgebra direct_sum_trivial(const LieAlgebra& g, std::size_t k) {
  std::vector<int> labels = g.labels();
  int mx = 0;
  for (int l : labels) mx = std::max(mx, l);
  for (std::size_t t = 0; t < k; ++t) labels.push_back(++mx);
  LieAlgebra s(g.dim() + k, labels);
  for (const auto& [ij, terms] : g.constants()) {
    SparseVec v = terms;
    s.set_bracket(ij.first, ij.second, v);
  }
  return s;
}

LieAlgebra quotient_by_central_basis_vector(const LieAlgebra& g, std::size_t pos) {
  const std::size_t n = g.dim();
  if (pos >= n) throw std::invalid_argument("quotient: bad position");
  std::vector<int> labels;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pos) labels.push_back(g.label(i));
  LieAlgebra q(n - 1, labels);
  auto shift = [pos](std::size_t i) { return i < pos ? i : i - 1; };
  for (const auto& [ij, terms] : g.constants()) {
    if (ij.first == pos || ij.second == pos)
      throw std::invalid_argument("quotient: basis vector is not central");
    SparseVec v;
    for (const auto& [k, c] : terms)
      if (k != pos) v.push_back({shift(k), c});
    if (!v.empty()) q.set_bracket(shift(ij.first), shift(ij.second), std::move(v));
  }
  if (!g.declared_degrees().empty()) {
    std::vector<int> degs;
    for (std::size_t i = 0; i < n; ++i)
      if (i != pos) degs.push_back(g.declared_degrees()[i]);
    q.declare_degrees(std::move(degs));
  }
  return q;
}

LieAlgebra change_of_basis(const LieAlgebra& g, const Matrix& p) {
  const std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("change_of_basis: shape");
  // invert via rref on [P | I]
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = p.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Matrix red = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (red.at(i, i) != 1) throw std::invalid_argument("change_of_basis: singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);

  LieAlgebra h(n);
  for (std::size_t a = 0; a < n; ++a) {
    QVec ya(n);
    for (std::size_t i = 0; i < n; ++i) ya[i] = p.at(i, a);
    for (std::size_t b = a + 1; b < n; ++b) {
      QVec yb(n);
      for (std::size_t i = 0; i < n; ++i) yb[i] = p.at(i, b);
      QVec br = g.bracket(ya, yb);
      if (is_zero(br)) continue;
      QVec coords = inv.apply(br);
      SparseVec v;
      for (std::size_t k = 0; k < n; ++k)
        if (coords[k] != 0) v.push_back({k, coords[k]});
      h.set_bracket(a, b, std::move(v));
    }
  }
  return h;
}

LieAlgebra induced_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const std::size_t d = s.dim();
  LieAlgebra h(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      QVec br = g.bracket(s.basis()[a], s.basis()[b]);
      // coordinates against the rref basis: peel pivots, demand zero residue
      QVec coords(d, Rat(0));
      QVec r = std::move(br);
      for (std::size_t t = 0; t < d; ++t) {
        coords[t] = r[s.pivots()[t]];
        if (coords[t] != 0) vec_add_scaled(r, s.basis()[t], -coords[t]);
      }
      if (!is_zero(r))
        throw std::invalid_argument("induced_subalgebra: subspace is not bracket-closed");
      SparseVec v;
      for (std::size_t k = 0; k < d; ++k)
        if (coords[k] != 0) v.push_back({k, coords[k]});
      if (!v.empty()) h.set_bracket(a, b, std::move(v));
    }
  return h;
}

void MaurerCartanForm::add(int k, int i, int j, Rat a) {
  if (a == 0) return;
  if (i == j) throw std::invalid_argument("MC term with i == j");
  if (i > j) {
    std::swap(i, j);
    a = -a;
  }
  for (auto& t : d[k])
    if (t.i == i && t.j == j) {
      t.a += a;
      return;
    }
  d[k].push_back({i, j, std::move(a)});
}

LieAlgebra mc_to_algebra(const MaurerCartanForm& f) {
  LieAlgebra g(f.labels.size(), f.labels);
  for (const auto& [k, terms] : f.d) {
    std::size_t kp = g.pos_of_label(k);
    if (kp == static_cast<std::size_t>(-1))
      throw std::invalid_argument("MC form targets unknown label " + std::to_string(k));
    for (const auto& t : terms) {
      std::size_t ip = g.pos_of_label(t.i), jp = g.pos_of_label(t.j);
      if (ip == static_cast<std::size_t>(-1) || jp == static_cast<std::size_t>(-1))
        throw std::invalid_argument("MC term uses unknown label");
      g.add_bracket_term(ip, jp, kp, t.a);
    }
  }
  return g;
}

MaurerCartanForm algebra_to_mc(const LieAlgebra& g) {
  MaurerCartanForm f;
  f.labels = g.labels();
  for (const auto& [ij, terms] : g.constants())
    for (const auto& [k, c] : terms)
      f.add(g.label(k), g.label(ij.first), g.label(ij.second), c);
  return f;
}

}  // namespace ngla
