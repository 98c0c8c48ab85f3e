#pragma once

#include <string>
#include <vector>

#include "ngla/series.hpp"

namespace ngla {

/// Invariant fingerprint used to separate isomorphism classes where the
/// catalog asserts "pairwise non isomorphic". Equality of fingerprints is a
/// merge heuristic, inequality a non-isomorphism certificate.
struct Fingerprint {
  std::size_t dim = 0;
  bool nilpotent = false;
  int nilindex = 0;
  std::vector<int> type_sequence;
  std::vector<int> char_seq;
  std::size_t center_dim = 0;
  std::vector<std::size_t> centralizer_dims;  // dim C_g(C^p g), p = 1..nilindex-1
  std::vector<std::size_t> derived_dims;      // dim [C^p, C^p], p = 0..nilindex-1
  std::vector<std::size_t> upper_central;     // ascending central series dims
  // the commutator subalgebra C^1 g carries its own invariants; these
  // separate classes the ambient numerology cannot (the two s_4 extensions
  // differ exactly here)
  std::vector<int> derived_type;
  std::vector<int> derived_charseq;
  int h2_dim = -1;  // -1 when skipped (large dim)
  bool holds_p = false;
  PVariant variant = PVariant::Neither;

  bool operator==(const Fingerprint& o) const = default;
  std::string str() const;
};

Fingerprint fingerprint(const LieAlgebra& g);

}  // namespace ngla
