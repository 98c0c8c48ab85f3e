#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngla/lie_algebra.hpp"
#include "ngla/series.hpp"

namespace ngla::roots {

/// Positive root as integer coordinates over the simple roots.
using Root = std::vector<int>;

int height(const Root& r);
Root add(const Root& a, const Root& b);

/// Positive roots of a simple type, generated from the Cartan matrix by
/// root strings. Types: A_l (l>=1), B_l (l>=2), C_l (l>=3), D_l (l>=4),
/// E_6/7/8, F_4, G_2.
struct RootSystem {
  char type_letter;
  int rank;
  std::vector<Root> positive_roots;  // sorted by (height, lex)

  bool is_root(const Root& r) const;
  Root maximal_root() const;
  std::vector<Root> stratum(int k) const;  // Delta(k)
};

RootSystem build(char type_letter, int rank);
RootSystem build(const std::string& name);  // "E8", "B5"

std::string root_str(const RootSystem& rs, const Root& r);

/// The Proposition-1 search: a pair in Delta(floor(ht(delta)/2))^2 whose sum
/// is a positive root; lexicographically least pair, or nullopt (G_2).
std::optional<std::pair<Root, Root>> proposition1_pair(const RootSystem& rs);

/// All valid pairs, for verifying the printed sum identities.
std::vector<std::pair<Root, Root>> proposition1_pairs(const RootSystem& rs);

/// Combinatorial centralizer-property check on the height-graded shadow of
/// the Borel nilradical: C^p corresponds to the span of roots of height > p,
/// nonvanishing brackets to root sums, nilindex to ht(delta). The returned
/// report's variant is the verifiable content of Theorem 1: P1 for every
/// simple type distinct from G_2 (whose shadow satisfies the property only
/// through condition 2).
CentralizerReport borel_nilradical_P_check(const RootSystem& rs);

/// The height shadow as a structure-constant algebra with unit coefficients
/// [e_a, e_b] = e_{a+b} whenever a + b is a root. Faithful for the
/// combinatorics of vanishing brackets; Chevalley signs are out of scope, so
/// Jacobi may fail for some types (the constructor does not validate).
LieAlgebra shadow_algebra(const RootSystem& rs);

}  // namespace ngla::roots
