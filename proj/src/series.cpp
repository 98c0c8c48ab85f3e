#include "ngla/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngla {

SeriesProfile lower_central_series(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SeriesProfile p;
  p.terms.push_back(Subspace::full(n));
  while (true) {
    const Subspace& prev = p.terms.back();
    if (prev.dim() == 0) break;
    Subspace next(n);
    // [C^{k-1}, g] is spanned by brackets of a basis of C^{k-1} with the basis of g
    for (const auto& v : prev.basis()) {
      for (std::size_t j = 0; j < n; ++j) {
        QVec ej(n, Rat(0));
        ej[j] = 1;
        QVec b = g.bracket(v, ej);
        if (!is_zero(b)) next.insert(std::move(b));
      }
    }
    if (next == prev) {  // stabilized nonzero: not nilpotent
      p.nilpotent = false;
      return p;
    }
    p.terms.push_back(std::move(next));
  }
  p.nilpotent = true;
  p.nilindex = static_cast<int>(p.terms.size()) - 1;
  for (std::size_t i = 1; i < p.terms.size(); ++i)
    p.type_sequence.push_back(static_cast<int>(p.terms[i - 1].dim() - p.terms[i].dim()));
  return p;
}

bool is_filiform(const LieAlgebra& g) {
  SeriesProfile p = lower_central_series(g);
  if (!p.nilpotent) throw std::invalid_argument("is_filiform: non-nilpotent input");
  const long n = static_cast<long>(g.dim());
  for (long k = 1; k <= n - 1; ++k) {
    long dk = (k < static_cast<long>(p.terms.size())) ? static_cast<long>(p.terms[k].dim()) : 0;
    if (dk != n - k - 1) return false;
  }
  return true;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  const std::size_t n = g.dim();
  if (s.ambient_dim() != n) throw std::invalid_argument("centralizer: ambient mismatch");
  if (s.dim() == 0) return Subspace::full(n);
  // x centralizes s iff for every basis vector v of s, ad(v) x = 0 up to sign;
  // stack the maps x -> [x, v].
  Matrix m(n * s.dim(), n);
  std::size_t r0 = 0;
  for (const auto& v : s.basis()) {
    for (std::size_t j = 0; j < n; ++j) {
      QVec ej(n, Rat(0));
      ej[j] = 1;
      QVec col = g.bracket(ej, v);  // x = e_j -> [e_j, v]
      for (std::size_t i = 0; i < n; ++i) m.at(r0 + i, j) = col[i];
    }
    r0 += n;
  }
  return kernel(m);
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

std::vector<int> jordan_block_sequence(const LieAlgebra& g, const QVec& x) {
  const std::size_t n = g.dim();
  Matrix a = g.ad(x);
  // ranks of powers; a nilpotent operator dies by power n
  std::vector<std::size_t> ranks;  // ranks[s] = rank(a^s), s >= 1
  Matrix pw = a;
  while (true) {
    std::size_t r = rank(pw);
    ranks.push_back(r);
    if (r == 0) break;
    if (ranks.size() > n) throw std::invalid_argument("jordan_block_sequence: ad(x) not nilpotent");
    pw = pw * a;
  }
  // #blocks of size >= s equals rank(a^{s-1}) - rank(a^s)
  auto rk = [&](std::size_t s) -> std::size_t {
    if (s == 0) return n;
    return s <= ranks.size() ? ranks[s - 1] : 0;
  };
  std::vector<int> blocks;
  for (std::size_t s = 1; s <= ranks.size(); ++s) {
    std::size_t count_ge_s = rk(s - 1) - rk(s);
    std::size_t count_ge_s1 = rk(s) - rk(s + 1);
    (void)count_ge_s1;
    // number of blocks of size exactly s:
    std::size_t exact = (rk(s - 1) - rk(s)) - (rk(s) - rk(s + 1));
    for (std::size_t t = 0; t < exact; ++t) blocks.push_back(static_cast<int>(s));
    (void)count_ge_s;
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

namespace {

/// c(x) for all candidates, lexicographic maximum wins.
struct Candidate {
  QVec x;
  std::vector<int> blocks;
};

}  // namespace

CharacteristicSequence characteristic_sequence(const LieAlgebra& g, std::uint64_t seed) {
  const std::size_t n = g.dim();
  SeriesProfile p = lower_central_series(g);
  if (!p.nilpotent) throw std::invalid_argument("characteristic_sequence: non-nilpotent input");
  const Subspace& c1 = p.terms.size() > 1 ? p.terms[1] : Subspace(n);

  CharacteristicSequence out;
  if (c1.dim() == 0) {  // abelian
    out.blocks.assign(n, 1);
    out.witness = QVec(n, Rat(0));
    if (n > 0) out.witness[0] = 1;
    return out;
  }

  std::vector<QVec> candidates;
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < n; ++i) {
    QVec e(n, Rat(0));
    e[i] = 1;
    if (!c1.contains(e)) {
      candidates.push_back(e);
      outside.push_back(i);
    }
  }
  for (std::size_t a = 0; a < outside.size(); ++a)
    for (std::size_t b = a + 1; b < outside.size(); ++b) {
      QVec v(n, Rat(0));
      v[outside[a]] = 1;
      v[outside[b]] = 1;
      candidates.push_back(std::move(v));
    }
  Rng rng(seed);
  std::size_t random_from = candidates.size();
  for (int t = 0; t < 8; ++t) {
    // all coordinates nonzero: zero coordinates are the typical source of
    // non-generic samples
    QVec v(n);
    do {
      for (std::size_t i = 0; i < n; ++i) v[i] = rng.nonzero_rational(4);
    } while (c1.contains(v));
    candidates.push_back(std::move(v));
  }

  std::vector<int> best;
  QVec best_x;
  bool all_random_agree = true;
  std::vector<int> first_random;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    std::vector<int> b = jordan_block_sequence(g, candidates[idx]);
    if (idx >= random_from) {
      if (first_random.empty())
        first_random = b;
      else if (b != first_random)
        all_random_agree = false;
    }
    if (best.empty() || std::lexicographical_compare(best.begin(), best.end(), b.begin(), b.end())) {
      best = b;
      best_x = candidates[idx];
    }
  }
  out.blocks = best;
  out.witness = best_x;
  out.generic_agreement = all_random_agree && (first_random == best);
  return out;
}

namespace {

/// span of [A, B] for subspaces A, B
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  Subspace s(g.dim());
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) {
      QVec w = g.bracket(u, v);
      if (!is_zero(w)) s.insert(std::move(w));
    }
  return s;
}

}  // namespace

CentralizerReport centralizer_property(const LieAlgebra& g) {
  SeriesProfile p = lower_central_series(g);
  if (!p.nilpotent) throw std::invalid_argument("centralizer_property: non-nilpotent input");
  CentralizerReport rep;
  const int n = p.nilindex;
  rep.frontier = n / 2;
  rep.frontier_variants_agree = (n % 2 == 1);
  if (rep.frontier < 1) return rep;  // abelian or nilindex 1: degenerate, fails

  auto term = [&](int k) -> const Subspace& {
    static const Subspace zero(0);
    if (k < static_cast<int>(p.terms.size())) return p.terms[k];
    // beyond nilindex everything is zero; p.terms always reaches 0 for nilpotent g
    return p.terms.back();
  };
  const Subspace& w = term(rep.frontier - 1);
  const Subspace& v = term(rep.frontier);

  Subspace ww = bracket_span(g, w, w);
  Subspace vv = bracket_span(g, v, v);
  rep.holds = (ww.dim() > 0) && (vv.dim() == 0);
  if (!rep.holds) return rep;

  Subspace wv = bracket_span(g, w, v);
  bool p1 = !wv.contains_subspace(ww);
  rep.variant = p1 ? PVariant::P1 : PVariant::P2;

  // witness: a basis pair of W with nonzero bracket; for P1 prefer a pair
  // whose bracket escapes [W,V], for P2 one whose member lies in V
  const auto& wb = w.basis();
  for (std::size_t a = 0; a < wb.size() && !rep.witness; ++a)
    for (std::size_t b = a + 1; b < wb.size() && !rep.witness; ++b) {
      QVec br = g.bracket(wb[a], wb[b]);
      if (is_zero(br)) continue;
      bool escapes = !wv.contains(br);
      bool member_in_v = v.contains(wb[a]) || v.contains(wb[b]);
      if ((p1 && escapes) || (!p1 && member_in_v)) {
        // report pivot positions as a readable stand-in for the pair
        rep.witness = std::make_pair(w.pivots()[a], w.pivots()[b]);
      }
    }
  return rep;
}

const char* variant_name(PVariant v) {
  switch (v) {
    case PVariant::P1: return "P1";
    case PVariant::P2: return "P2";
    default: return "neither";
  }
}

std::vector<std::size_t> upper_central_dims(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> dims;
  Subspace zk(n);
  while (true) {
    // x lies in Z_{k+1} iff [x, e_j] falls into Z_k for every j
    std::vector<QVec> rows;
    for (std::size_t j = 0; j < n; ++j) {
      QVec ej(n, Rat(0));
      ej[j] = 1;
      std::vector<QVec> residues(n);
      for (std::size_t i = 0; i < n; ++i) {
        QVec ei(n, Rat(0));
        ei[i] = 1;
        residues[i] = zk.reduce(g.bracket(ei, ej));
      }
      for (std::size_t comp = 0; comp < n; ++comp) {
        QVec row(n, Rat(0));
        bool nz = false;
        for (std::size_t i = 0; i < n; ++i) {
          row[i] = residues[i][comp];
          nz = nz || row[i] != 0;
        }
        if (nz) rows.push_back(std::move(row));
      }
    }
    Subspace next = rows.empty() ? Subspace::full(n) : kernel(Matrix::from_rows(rows, n));
    if (next.dim() == zk.dim()) break;
    zk = next;
    dims.push_back(zk.dim());
    if (zk.dim() == n) break;
  }
  return dims;
}

}  // namespace ngla
