#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngla/cohomology.hpp"
#include "ngla/fingerprint.hpp"
#include "ngla/grading.hpp"
#include "ngla/lie_algebra.hpp"

namespace ngla {

/// Cohomological family selector E^{t,k_1..k_r}_{c,1}: integer families put
/// the adjoined vector in degree 2t+1 and restrict support to label pairs
/// with i + j = 2t + 1 + k; fractional families (half = true, t odd) use
/// degree t + 1 and label sums t + 1 + k.
struct ExtensionFamily {
  bool half = false;
  int t = 1;
  std::vector<int> ks;

  int target_degree() const { return half ? t + 1 : 2 * t + 1; }
};

struct ExtensionSpec {
  std::optional<int> target_degree;    // graduation block of the new vector
  std::optional<int> target_nilindex;  // p in {n(g), n(g)+1}
  std::optional<std::vector<int>> required_charseq;
  bool require_p2 = false;
  std::optional<ExtensionFamily> family;
  int new_label = 0;  // 0: use max(labels) + 1

  int degree() const;  // resolves target_degree / family; throws if inconsistent
};

/// One equivalence class of naturally graded central extensions.
struct ExtensionClass {
  TwoCochain cochain;    // normalized representative over the base
  LieAlgebra extended;
  Fingerprint fp;
  std::string certificate;  // solution parameters, normalization, merges
};

/// mu = mu_0 + alpha: dim n+1 algebra with the new central vector picking up
/// c(X_i, X_j). Throws (with the offending Jacobi triple) if c is not a
/// cocycle.
LieAlgebra central_extend(const LieAlgebra& g, const TwoCochain& c, int new_label = 0);

/// Enumerates naturally graded degree-one central extensions: support from
/// the grading (and family grid), cocycle condition as a linear system,
/// structural filters (position certificate, nilindex, characteristic
/// sequence, P2), then reduction to equivalence classes.
std::vector<ExtensionClass> enumerate_graded_extensions(const LieAlgebra& g, const Grading& gr,
                                                        const ExtensionSpec& spec);

/// Quotients candidates by coboundary addition and cochain rescaling
/// (graded scalings act by a uniform factor on a fixed-degree support, so
/// they are absorbed by the rescaling of the adjoined vector), then merges
/// representatives with equal invariant fingerprints. Candidates must share
/// the base and spec.
std::vector<ExtensionClass> reduce_by_equivalence(const LieAlgebra& base, const Grading& gr,
                                                  const ExtensionSpec& spec,
                                                  std::vector<ExtensionClass> candidates);

/// Catalog towers g_0, g_1, ..., g_qmax of the q-families; every step is
/// verified to be a central extension of the previous stage by its printed
/// cochain.
std::vector<LieAlgebra> extension_tower(const std::string& family, int m, int t, int q_max);

}  // namespace ngla
