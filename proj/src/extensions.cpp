#include "ngla/extensions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ngla/models.hpp"

namespace ngla {

int ExtensionSpec::degree() const {
  if (family) {
    int d = family->target_degree();
    if (target_degree && *target_degree != d)
      throw std::invalid_argument("extension spec: target_degree inconsistent with family");
    return d;
  }
  if (!target_degree)
    throw std::invalid_argument("extension spec: need target_degree or family");
  return *target_degree;
}

LieAlgebra central_extend(const LieAlgebra& g, const TwoCochain& c, int new_label) {
  const std::size_t n = g.dim();
  if (c.dim != n) throw std::invalid_argument("central_extend: cochain dimension mismatch");
  std::vector<int> labels = g.labels();
  if (new_label == 0) {
    int mx = 0;
    for (int l : labels) mx = std::max(mx, l);
    new_label = mx + 1;
  }
  labels.push_back(new_label);
  LieAlgebra e(n + 1, labels);
  for (const auto& [ij, terms] : g.constants()) e.set_bracket(ij.first, ij.second, terms);
  for (const auto& [ij, a] : c.coeffs) e.add_bracket_term(ij.first, ij.second, n, a);
  if (!is_cocycle(g, c)) {
    auto viols = jacobi_violations(e);
    std::ostringstream os;
    os << "central_extend: cochain is not a cocycle";
    if (!viols.empty())
      os << "; Jacobi defect on basis triple (" << viols[0].i + 1 << "," << viols[0].j + 1 << ","
         << viols[0].k + 1 << ")";
    throw std::invalid_argument(os.str());
  }
  if (!g.declared_degrees().empty()) {
    // the adjoined vector is central; callers overwrite when they know its block
    std::vector<int> degs = g.declared_degrees();
    degs.push_back(0);
    e.declare_degrees(std::move(degs));
  }
  return e;
}

namespace {

struct SupportSystem {
  std::vector<std::pair<std::size_t, std::size_t>> support;  // degree-compatible pairs
  Subspace solutions;      // cocycle solutions over support coords
  Subspace coboundaries;   // graded coboundaries over support coords
  Subspace trivial;        // solutions `cap` coboundaries
  SupportSystem() : solutions(0), coboundaries(0), trivial(0) {}
};

SupportSystem build_system(const LieAlgebra& g, const Grading& gr, const ExtensionSpec& spec) {
  const std::size_t n = g.dim();
  const int d = spec.degree();
  if (gr.degrees.size() != n) throw std::invalid_argument("grading size mismatch");

  SupportSystem sys;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gr.degrees[i] + gr.degrees[j] == d) sys.support.push_back({i, j});
  const std::size_t s = sys.support.size();
  sys.solutions = Subspace(s);
  sys.coboundaries = Subspace(s);
  sys.trivial = Subspace(s);
  if (s == 0) return sys;

  std::vector<QVec> rows;
  Subspace om = omega_subspace(g);
  for (const auto& w : om.basis()) {
    QVec r(s, Rat(0));
    bool nz = false;
    for (std::size_t t = 0; t < s; ++t) {
      const Rat& x = w[wedge_index(sys.support[t].first, sys.support[t].second, n)];
      if (x != 0) {
        r[t] = x;
        nz = true;
      }
    }
    if (nz) rows.push_back(std::move(r));
  }
  if (spec.family) {
    // support pairs outside the family's label grid are constrained to zero
    std::vector<int> sums;
    for (int k : spec.family->ks)
      sums.push_back(spec.family->half ? spec.family->t + 1 + k : 2 * spec.family->t + 1 + k);
    for (std::size_t t = 0; t < s; ++t) {
      int ls = g.label(sys.support[t].first) + g.label(sys.support[t].second);
      if (std::find(sums.begin(), sums.end(), ls) == sums.end()) {
        QVec r(s, Rat(0));
        r[t] = 1;
        rows.push_back(std::move(r));
      }
    }
  }
  sys.solutions = rows.empty() ? Subspace::full(s) : kernel(Matrix::from_rows(rows, s));

  for (std::size_t b = 0; b < n; ++b) {
    if (gr.degrees[b] != d) continue;
    TwoCochain cb = coboundary_of_dual(g, b);
    QVec v(s, Rat(0));
    for (std::size_t t = 0; t < s; ++t)
      v[t] = cb.eval(sys.support[t].first, sys.support[t].second);
    if (!is_zero(v)) sys.coboundaries.insert(std::move(v));
  }
  sys.trivial = intersect(sys.solutions, sys.coboundaries);
  return sys;
}

TwoCochain cochain_from_coords(const LieAlgebra& g, const SupportSystem& sys, const QVec& a) {
  TwoCochain c(g.dim());
  for (std::size_t t = 0; t < sys.support.size(); ++t)
    if (a[t] != 0) c.set(sys.support[t].first, sys.support[t].second, a[t]);
  return c;
}

QVec coords_from_cochain(const SupportSystem& sys, const TwoCochain& c) {
  QVec a(sys.support.size(), Rat(0));
  std::size_t seen = 0;
  for (std::size_t t = 0; t < sys.support.size(); ++t) {
    a[t] = c.eval(sys.support[t].first, sys.support[t].second);
    if (a[t] != 0) ++seen;
  }
  std::size_t nonzero = 0;
  for (const auto& [ij, v] : c.coeffs)
    if (v != 0) ++nonzero;
  if (seen != nonzero)
    throw std::invalid_argument("reduce_by_equivalence: candidate not supported on the spec grid");
  return a;
}

/// leading coefficient for the normalization: prefer an (X_1, X_j) pair of
/// maximal degree (the catalog writes those with coefficient one), otherwise
/// the lexicographically least nonzero pair
std::size_t leading_index(const SupportSystem& sys, const Grading& gr, const QVec& a) {
  std::size_t best = a.size();
  int best_deg = -1;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] == 0) continue;
    if (sys.support[t].first == 0 && gr.degrees[sys.support[t].second] > best_deg) {
      best = t;
      best_deg = gr.degrees[sys.support[t].second];
    }
  }
  if (best != a.size()) return best;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] != 0) return t;
  return a.size();
}

struct BuiltCandidate {
  QVec coords;
  TwoCochain cochain;
  LieAlgebra extended;
  Fingerprint fp;
};

/// filters: position certificate (natural grading with the adjoined vector
/// in block d), nilindex, characteristic sequence, P2
bool passes_filters(const LieAlgebra& ext, const Grading& gr, int d, const ExtensionSpec& spec) {
  Grading ge;
  ge.degrees = gr.degrees;
  ge.degrees.push_back(d);
  if (!is_natural_grading(ext, ge)) return false;
  if (spec.target_nilindex) {
    SeriesProfile p = lower_central_series(ext);
    if (!p.nilpotent || p.nilindex != *spec.target_nilindex) return false;
  }
  if (spec.required_charseq) {
    if (characteristic_sequence(ext).blocks != *spec.required_charseq) return false;
  }
  if (spec.require_p2) {
    CentralizerReport rep = centralizer_property(ext);
    if (!rep.holds || rep.variant != PVariant::P2) return false;
  }
  return true;
}

}  // namespace

std::vector<ExtensionClass> enumerate_graded_extensions(const LieAlgebra& g, const Grading& gr,
                                                        const ExtensionSpec& spec) {
  const int d = spec.degree();
  SupportSystem sys = build_system(g, gr, spec);
  if (sys.support.empty() || sys.solutions.dim() == 0) return {};

  // parameter directions: a basis of solutions modulo trivial (coboundary) ones
  std::vector<QVec> dirs;
  Subspace acc = sys.trivial;
  for (const auto& row : sys.solutions.basis()) {
    QVec res = acc.reduce(row);
    if (!is_zero(res)) {
      acc.insert(res);
      dirs.push_back(std::move(res));
    }
  }
  const std::size_t w = dirs.size();
  if (w == 0) return {};
  if (w > 6)
    throw std::runtime_error("enumerate_graded_extensions: parameter space too large (" +
                             std::to_string(w) + " directions)");

  std::vector<QVec> samples;
  for (std::size_t mask = 1; mask < (1u << w); ++mask) {
    QVec a(sys.support.size(), Rat(0));
    for (std::size_t b = 0; b < w; ++b)
      if (mask & (1u << b)) vec_add_scaled(a, dirs[b], Rat(1));
    samples.push_back(std::move(a));
  }
  Rng rng(0xace5);
  for (int r = 0; r < 4; ++r) {
    QVec a(sys.support.size(), Rat(0));
    for (std::size_t b = 0; b < w; ++b) {
      Rat ci = rng.small_rational(3);
      if (ci == 0) ci = 1;
      vec_add_scaled(a, dirs[b], ci);
    }
    if (!is_zero(a)) samples.push_back(std::move(a));
  }

  std::vector<ExtensionClass> survivors;
  for (const auto& a : samples) {
    TwoCochain c = cochain_from_coords(g, sys, a);
    LieAlgebra ext = central_extend(g, c, spec.new_label);
    if (!passes_filters(ext, gr, d, spec)) continue;
    std::vector<int> degs = gr.degrees;
    degs.push_back(d);
    ext.declare_degrees(std::move(degs));
    ExtensionClass cls{c, ext, fingerprint(ext), ""};
    survivors.push_back(std::move(cls));
  }
  return reduce_by_equivalence(g, gr, spec, std::move(survivors));
}

std::vector<ExtensionClass> reduce_by_equivalence(const LieAlgebra& base, const Grading& gr,
                                                  const ExtensionSpec& spec,
                                                  std::vector<ExtensionClass> candidates) {
  if (candidates.empty()) return {};
  const int d = spec.degree();
  SupportSystem sys = build_system(base, gr, spec);

  struct Rep {
    QVec coords;
    ExtensionClass cls;
    std::size_t merged = 0;
  };
  std::map<std::string, Rep> by_coords;
  for (auto& cand : candidates) {
    QVec a = coords_from_cochain(sys, cand.cochain);
    a = sys.trivial.reduce(std::move(a));  // quotient by coboundaries
    std::size_t lead = leading_index(sys, gr, a);
    if (lead == a.size()) continue;  // trivial class (split); not a nonsplit extension
    Rat inv = Rat(1) / a[lead];
    for (auto& x : a) x *= inv;  // rescaling of the adjoined vector
    by_coords.try_emplace(vec_str(a), Rep{a, std::move(cand), 0});
  }

  // rebuild canonical representatives and merge by fingerprint; among merged
  // representatives prefer one led by an (X1, -) pair, the catalog convention
  std::map<std::string, Rep> by_fp;
  for (auto& [key, rep] : by_coords) {
    (void)key;
    TwoCochain c = cochain_from_coords(base, sys, rep.coords);
    LieAlgebra ext = central_extend(base, c, spec.new_label);
    std::vector<int> degs = gr.degrees;
    degs.push_back(d);
    ext.declare_degrees(std::move(degs));
    Fingerprint fp = fingerprint(ext);
    std::ostringstream cert;
    cert << "support=" << sys.support.size() << " solutions=" << sys.solutions.dim()
         << " coboundary=" << sys.trivial.dim() << " rep=";
    for (const auto& [ij, v] : c.coeffs)
      cert << " a(" << base.label(ij.first) << "," << base.label(ij.second) << ")=" << rat_str(v);
    auto x1_led = [&](const QVec& coords) {
      std::size_t lead = leading_index(sys, gr, coords);
      return lead < coords.size() && sys.support[lead].first == 0;
    };
    auto [it, fresh] =
        by_fp.try_emplace(fp.str(), Rep{rep.coords, ExtensionClass{c, ext, fp, cert.str()}, 0});
    if (!fresh) {
      ++it->second.merged;
      if (x1_led(rep.coords) && !x1_led(it->second.coords)) {
        std::size_t merged = it->second.merged;
        it->second = Rep{rep.coords, ExtensionClass{c, ext, fp, cert.str()}, merged};
      }
    }
  }

  std::vector<ExtensionClass> out;
  for (auto& [key, rep] : by_fp) {
    (void)key;
    if (rep.merged)
      rep.cls.certificate += "; merged " + std::to_string(rep.merged) +
                             " fingerprint-equal representative(s)";
    out.push_back(std::move(rep.cls));
  }
  return out;
}

std::vector<LieAlgebra> extension_tower(const std::string& family, int m, int t, int q_max) {
  if (q_max < 0) throw std::invalid_argument("extension_tower: q_max must be >= 0");
  std::vector<LieAlgebra> tower;
  for (int q = 0; q <= q_max; ++q) tower.push_back(models::make_tower_stage(family, m, t, q));
  // verify the tower property: each stage is the central extension of the
  // previous one by the cochain read off its last differential form
  for (int q = 1; q <= q_max; ++q) {
    const LieAlgebra& prev = tower[static_cast<std::size_t>(q - 1)];
    const LieAlgebra& cur = tower[static_cast<std::size_t>(q)];
    const std::size_t last = cur.dim() - 1;
    TwoCochain c(prev.dim());
    for (const auto& [ij, terms] : cur.constants())
      for (const auto& [k, coeff] : terms)
        if (k == last) c.set(ij.first, ij.second, coeff);
    LieAlgebra rebuilt = central_extend(prev, c, cur.label(last));
    if (!(rebuilt == cur))
      throw std::logic_error("extension_tower: stage q=" + std::to_string(q) +
                             " is not the central extension of stage q-1");
    LieAlgebra back = quotient_by_central_basis_vector(cur, last);
    if (!(back == prev))
      throw std::logic_error("extension_tower: quotient of stage q=" + std::to_string(q) +
                             " does not recover stage q-1");
  }
  return tower;
}

}  // namespace ngla
