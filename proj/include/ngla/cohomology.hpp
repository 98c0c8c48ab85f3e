#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ngla/lie_algebra.hpp"

namespace ngla {

/// Basis of Lambda^2 Q^n: pairs (i, j), i < j, ordered lexicographically.
std::size_t wedge_dim(std::size_t n);
std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t n);
std::pair<std::size_t, std::size_t> wedge_pair(std::size_t idx, std::size_t n);

/// Alternating rational coefficient table a^{ij} = phi(X_i, X_j) on basis
/// bivectors; the carrier of cocycles, coboundaries and extension data.
struct TwoCochain {
  std::size_t dim = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rat> coeffs;  // positions, i < j

  TwoCochain() = default;
  explicit TwoCochain(std::size_t n) : dim(n) {}
  static TwoCochain unit(std::size_t n, std::size_t i, std::size_t j);  // phi_ij

  Rat eval(std::size_t i, std::size_t j) const;  // signed, eval(j, i) = -eval(i, j)
  Rat eval(const QVec& x, const QVec& y) const;  // bilinear extension
  void set(std::size_t i, std::size_t j, Rat a);
  bool is_zero() const;

  QVec as_vector() const;  // coordinates over the Lambda^2 basis
  static TwoCochain from_vector(std::size_t n, const QVec& v);
};

/// Matrix of lambda : Lambda^2 g -> g, X_i ^ X_j -> [X_i, X_j].
Matrix lambda_map(const LieAlgebra& g);

/// Span of mu(x,y)^z + mu(y,z)^x + mu(z,x)^y over all basis triples; always
/// inside Ker lambda (this is Jacobi).
Subspace omega_subspace(const LieAlgebra& g);

struct CohomologySpace {
  Subspace ker_lambda;
  Subspace omega;
  int h2_dim = 0;
  /// unit cochains phi_ij dual to a pivot basis of Ker lambda / Omega
  std::vector<TwoCochain> representatives;

  CohomologySpace() : ker_lambda(0), omega(0) {}
};

CohomologySpace h2(const LieAlgebra& g);

/// true iff the bivector with coefficients a^{ij} lies in Omega, i.e. the
/// cochain represents the zero functional class on Ker lambda / Omega.
bool cocycle_zero_test(const LieAlgebra& g, const TwoCochain& c);

/// Cocycle condition: the functional vanishes on Omega.
bool is_cocycle(const LieAlgebra& g, const TwoCochain& c);

/// Coboundary f . mu_0 of the linear form dual to basis position `dual`.
TwoCochain coboundary_of_dual(const LieAlgebra& g, std::size_t dual);

/// Index grid of H_k^{2,t}: label pairs 1 <= i < j <= n with
/// i + j = 2t + 1 + k, or i + j = t + 1 + k for the fractional family
/// (half = true, t odd). Labels, not positions. t ranges over
/// 1..floor((n-3)/2).
std::vector<std::pair<int, int>> graded_cocycle_indices(int n, int k, int t, bool half);

}  // namespace ngla
