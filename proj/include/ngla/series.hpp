#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ngla/lie_algebra.hpp"

namespace ngla {

/// Descending central sequence C^0 g = g, C^k g = [C^{k-1} g, g], together
/// with the derived numerology. For non-nilpotent input the sequence
/// stabilizes at a nonzero term and `nilpotent` is false.
struct SeriesProfile {
  std::vector<Subspace> terms;  // C^0, C^1, ... until 0 or stabilization
  bool nilpotent = false;
  int nilindex = 0;                // first k with C^k = 0 (nilpotent only)
  std::vector<int> type_sequence;  // p_i = dim(C^{i-1}/C^i)
};

SeriesProfile lower_central_series(const LieAlgebra& g);

/// dim C^k g = n - k - 1 for 1 <= k <= n - 1. Throws on non-nilpotent input.
bool is_filiform(const LieAlgebra& g);

/// {x : [x, v] = 0 for all v in s}
Subspace centralizer(const LieAlgebra& g, const Subspace& s);

Subspace center(const LieAlgebra& g);

/// Jordan block sizes of the nilpotent operator ad(x), non-increasing.
/// Throws if ad(x) is not nilpotent.
std::vector<int> jordan_block_sequence(const LieAlgebra& g, const QVec& x);

struct CharacteristicSequence {
  std::vector<int> blocks;  // c(g), non-increasing, sums to dim g
  QVec witness;             // attains the maximum; not in C^1 g
  /// true when all seeded random candidates agreed with the maximum, i.e.
  /// the reported value matched the generic sample. The result is always a
  /// certified lower bound for c(g).
  bool generic_agreement = true;
};

/// Lexicographic maximum of c(X) over the candidate set: basis vectors
/// outside C^1 g, pairwise sums of those, and eight seeded random rational
/// combinations. Abelian input yields (1,...,1).
CharacteristicSequence characteristic_sequence(const LieAlgebra& g, std::uint64_t seed = 0x5eed);

enum class PVariant { P1, P2, Neither };

/// Centralizer-property report. Writing n = nilindex and f = floor(n/2),
/// W = C^{f-1} g and V = C^f g, the property holds iff C^p g is abelian
/// exactly for p >= f (equivalently: [V,V] = 0 and [W,W] != 0). The variant
/// splits on whether the pairing survives modulo V:
///   P1  iff [W,W] is not contained in [W,V],
///   P2  iff 0 != [W,W] subseteq [W,V].
struct CentralizerReport {
  bool holds = false;
  PVariant variant = PVariant::Neither;
  int frontier = 0;  // floor(nilindex / 2)
  /// both frontier conventions floor(n/2) and floor((n-1)/2) agree iff the
  /// nilindex is odd; flagged for even nilindex
  bool frontier_variants_agree = true;
  /// basis-pair witness (positions) with nonzero bracket inside W; for P1 a
  /// pair surviving modulo V, for P2 a pair with its second member in V
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

CentralizerReport centralizer_property(const LieAlgebra& g);

const char* variant_name(PVariant v);

/// Dimensions of the ascending central series Z_1 = Z(g) subset Z_2 subset
/// ... until stabilization.
std::vector<std::size_t> upper_central_dims(const LieAlgebra& g);

}  // namespace ngla
