#pragma once

#include <optional>
#include <vector>

#include "ngla/lie_algebra.hpp"
#include "ngla/series.hpp"

namespace ngla {

/// Assignment of basis positions to positive degrees. Blocks g_k are the
/// spans of the positions of equal degree.
struct Grading {
  std::vector<int> degrees;  // one per basis position, >= 1

  int max_degree() const;
  Subspace block(int k) const;           // g_k
  Subspace tail(int k) const;            // span of blocks with degree > k
  std::vector<int> block_dims() const;   // dim g_1, dim g_2, ...
};

/// true iff every structure constant C^k_{ij} vanishes unless
/// degree(k) = degree(i) + degree(j). Blocks must span (they always do for a
/// degree assignment on the basis).
bool is_graded_law(const LieAlgebra& g, const Grading& gr);

/// Exact certificate that `gr` is THE natural grading realized on the given
/// basis: C^k g equals the span of the positions of degree > k, for all k.
/// Implies the basis is filtration-adapted with blocks realizing gr(g).
bool is_natural_grading(const LieAlgebra& g, const Grading& gr);

/// gr(g) on a filtration-adapted basis: complements chosen as the earliest
/// rref pivot rows of C^{k-1} not in C^k; brackets of degrees (i, j)
/// projected into degree i + j, deeper terms dropped.
struct AssociatedGraded {
  LieAlgebra algebra;
  Grading grading;
  /// no degree-mismatched terms were dropped, i.e. g was already graded in
  /// the adapted basis and equals gr(g) there
  bool projection_trivial = true;
};

AssociatedGraded associated_graded(const LieAlgebra& g);

enum class NaturalVerdict { Graded, NotGraded, Inconclusive };

/// Certificate-based natural-gradedness test (no general isomorphism
/// search). graded_in_given_basis = true certifies naturally graded;
/// false together with an invariant mismatch against gr(g) certifies not
/// naturally graded; false with matching invariants is reported honestly as
/// inconclusive.
struct NaturalGradedReport {
  bool graded_in_given_basis = false;
  Grading natural_degrees;     // degrees from the filtration layers
  bool basis_was_adapted = true;
  std::optional<bool> invariants_match;  // computed only when needed
  NaturalVerdict verdict = NaturalVerdict::Inconclusive;
};

NaturalGradedReport natural_graded_verdict(const LieAlgebra& g);

/// Depth of a homogeneous vector of degree d: (d - 1)/2, exact.
Rat depth(const Grading& gr, std::size_t pos);

}  // namespace ngla
