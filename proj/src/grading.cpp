#include "ngla/grading.hpp"

#include <algorithm>
#include <stdexcept>

#include "ngla/fingerprint.hpp"

namespace ngla {

int Grading::max_degree() const {
  int m = 0;
  for (int d : degrees) m = std::max(m, d);
  return m;
}

Subspace Grading::block(int k) const {
  Subspace s(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == k) {
      QVec e(degrees.size(), Rat(0));
      e[i] = 1;
      s.insert(std::move(e));
    }
  return s;
}

Subspace Grading::tail(int k) const {
  Subspace s(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] > k) {
      QVec e(degrees.size(), Rat(0));
      e[i] = 1;
      s.insert(std::move(e));
    }
  return s;
}

std::vector<int> Grading::block_dims() const {
  std::vector<int> dims(static_cast<std::size_t>(std::max(max_degree(), 0)), 0);
  for (int d : degrees) ++dims[static_cast<std::size_t>(d - 1)];
  return dims;
}

bool is_graded_law(const LieAlgebra& g, const Grading& gr) {
  if (gr.degrees.size() != g.dim()) throw std::invalid_argument("grading size mismatch");
  for (const auto& [ij, terms] : g.constants()) {
    int s = gr.degrees[ij.first] + gr.degrees[ij.second];
    for (const auto& [k, c] : terms) {
      (void)c;
      if (gr.degrees[k] != s) return false;
    }
  }
  return true;
}

bool is_natural_grading(const LieAlgebra& g, const Grading& gr) {
  if (gr.degrees.size() != g.dim()) throw std::invalid_argument("grading size mismatch");
  if (!is_graded_law(g, gr)) return false;
  SeriesProfile p = lower_central_series(g);
  if (!p.nilpotent) return false;
  for (int k = 0; k < p.nilindex; ++k) {
    Subspace t = gr.tail(k);
    if (!(p.terms[static_cast<std::size_t>(k)] == t)) return false;
  }
  return gr.tail(p.nilindex).dim() == 0;
}

AssociatedGraded associated_graded(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SeriesProfile p = lower_central_series(g);
  if (!p.nilpotent) throw std::invalid_argument("associated_graded: non-nilpotent input");

  // adapted basis: per layer k, the rows of rref(C^{k-1}) whose pivots are
  // not pivots of C^k (earliest pivots first)
  std::vector<QVec> adapted;
  std::vector<int> degrees;
  for (int k = 1; k <= p.nilindex; ++k) {
    const Subspace& up = p.terms[static_cast<std::size_t>(k - 1)];
    const Subspace& dn = p.terms[static_cast<std::size_t>(k)];
    for (std::size_t r = 0; r < up.dim(); ++r) {
      bool pivot_in_dn =
          std::find(dn.pivots().begin(), dn.pivots().end(), up.pivots()[r]) != dn.pivots().end();
      if (!pivot_in_dn) {
        adapted.push_back(up.basis()[r]);
        degrees.push_back(k);
      }
    }
  }
  if (adapted.size() != n) throw std::logic_error("adapted basis has wrong size");

  // coordinates of a vector in the adapted basis: solve B^T c = v
  Matrix bt(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) bt.at(i, j) = adapted[j][i];
  // invert by rref on [B^T | I]
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = bt.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Matrix red = rref(aug);
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);

  LieAlgebra gr_alg(n);
  bool trivial = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      QVec br = g.bracket(adapted[a], adapted[b]);
      if (is_zero(br)) continue;
      QVec coords = inv.apply(br);
      int target = degrees[a] + degrees[b];
      SparseVec v;
      for (std::size_t k = 0; k < n; ++k) {
        if (coords[k] == 0) continue;
        if (degrees[k] == target)
          v.push_back({k, coords[k]});
        else
          // deeper terms are dropped by the graded projection; shallower ones
          // cannot occur since [C^{i-1}, C^{j-1}] lies in C^{i+j-1}
          trivial = false;
      }
      if (!v.empty()) gr_alg.set_bracket(a, b, std::move(v));
    }
  Grading gr{degrees};
  gr_alg.declare_degrees(degrees);
  return {std::move(gr_alg), std::move(gr), trivial};
}

NaturalGradedReport natural_graded_verdict(const LieAlgebra& g) {
  NaturalGradedReport rep;
  SeriesProfile p = lower_central_series(g);
  if (!p.nilpotent) {
    rep.verdict = NaturalVerdict::NotGraded;
    rep.graded_in_given_basis = false;
    rep.invariants_match = false;
    return rep;
  }
  const std::size_t n = g.dim();

  // natural degrees on the given basis: layer of each basis vector
  std::vector<int> nat(n, 0);
  bool adapted = true;
  for (std::size_t i = 0; i < n; ++i) {
    QVec e(n, Rat(0));
    e[i] = 1;
    int k = 0;
    while (k + 1 < static_cast<int>(p.terms.size()) &&
           p.terms[static_cast<std::size_t>(k + 1)].contains(e))
      ++k;
    nat[i] = k + 1;
  }
  rep.natural_degrees = Grading{nat};
  // adapted iff the degree tails reproduce the filtration exactly
  for (int k = 0; k <= p.nilindex && adapted; ++k) {
    Subspace t = rep.natural_degrees.tail(k);
    std::size_t expect = k < static_cast<int>(p.terms.size())
                             ? p.terms[static_cast<std::size_t>(k)].dim()
                             : 0;
    if (t.dim() != expect || (k < static_cast<int>(p.terms.size()) &&
                              !(t == p.terms[static_cast<std::size_t>(k)])))
      adapted = false;
  }
  rep.basis_was_adapted = adapted;

  AssociatedGraded ag = associated_graded(g);
  if (adapted) {
    rep.graded_in_given_basis = is_graded_law(g, rep.natural_degrees);
  } else {
    // re-adapt: g counts as graded when nothing was dropped in gr(g), i.e.
    // the law is graded on the canonical adapted basis
    rep.graded_in_given_basis = ag.projection_trivial;
  }

  if (rep.graded_in_given_basis) {
    rep.verdict = NaturalVerdict::Graded;
    rep.invariants_match = true;  // g equals gr(g) on an adapted basis
    return rep;
  }

  // certificate for NOT naturally graded: invariant mismatch against gr(g)
  // (type and characteristic sequences, h2 dimension, centralizer and
  // derived dimensions of the series ideals)
  (void)n;
  rep.invariants_match = (fingerprint(g) == fingerprint(ag.algebra));
  rep.verdict = *rep.invariants_match ? NaturalVerdict::Inconclusive : NaturalVerdict::NotGraded;
  return rep;
}

Rat depth(const Grading& gr, std::size_t pos) {
  if (pos >= gr.degrees.size()) throw std::invalid_argument("depth: bad position");
  return Rat(gr.degrees[pos] - 1) / Rat(2);
}

}  // namespace ngla
