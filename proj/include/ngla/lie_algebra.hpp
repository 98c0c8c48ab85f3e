#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ngla/rational.hpp"
#include "ngla/subspace.hpp"

namespace ngla {

/// Sparse bracket value: list of (basis position, coefficient).
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

/// Finite-dimensional algebra over Q given by structure constants on an
/// ordered basis. Positions are 0-based; `labels` carry the catalog's
/// 1-based basis indices (they may skip values, e.g. the s_m basis
/// omega_1..omega_{2m-1}, omega_{2m+1}). Antisymmetry is implicit: only
/// brackets with i < j are stored. The constructor does not enforce Jacobi;
/// jacobi_violations is the oracle.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim);
  LieAlgebra(std::size_t dim, std::vector<int> labels);

  std::size_t dim() const { return dim_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t pos) const { return labels_[pos]; }
  std::string label_name(std::size_t pos) const { return "X" + std::to_string(labels_[pos]); }
  /// position of a label, or npos
  std::size_t pos_of_label(int label) const;

  /// Sets [X_i, X_j] for positions i < j. Replaces any previous value.
  void set_bracket(std::size_t i, std::size_t j, SparseVec value);
  void add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Rat& c);

  /// [X_i, X_j] for arbitrary positions (handles i > j by antisymmetry).
  const SparseVec& bracket_basis(std::size_t i, std::size_t j, bool& negate) const;
  QVec bracket_basis_dense(std::size_t i, std::size_t j) const;

  /// Bilinear, alternating evaluation on coordinates.
  QVec bracket(const QVec& x, const QVec& y) const;

  /// Matrix of ad(x): y -> [x, y].
  Matrix ad(const QVec& x) const;

  const std::map<std::pair<std::size_t, std::size_t>, SparseVec>& constants() const {
    return c_;
  }

  /// Grading degrees emitted by the catalog constructors (empty if none).
  const std::vector<int>& declared_degrees() const { return declared_degrees_; }
  void declare_degrees(std::vector<int> degs) { declared_degrees_ = std::move(degs); }

  std::optional<std::string> provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  std::size_t dim_;
  std::vector<int> labels_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> c_;
  std::vector<int> declared_degrees_;
  std::optional<std::string> provenance_;
  static const SparseVec empty_;
};

struct JacobiViolation {
  std::size_t i, j, k;  // positions
  QVec defect;          // [X_i,[X_j,X_k]] + [X_k,[X_i,X_j]] + [X_j,[X_k,X_i]]
};

/// Empty iff the constants define a Lie algebra.
std::vector<JacobiViolation> jacobi_violations(const LieAlgebra& g);

/// Abelian direct sum g (+) Q^k.
LieAlgebra direct_sum_trivial(const LieAlgebra& g, std::size_t k);

/// Quotient by the span of the basis vector at `pos`; requires that vector
/// to be central and no bracket to map onto it from outside... i.e. simply
/// deletes the coordinate. Caller must pass a central position.
LieAlgebra quotient_by_central_basis_vector(const LieAlgebra& g, std::size_t pos);

/// Structure constants in the basis Y_a = sum_i P(i,a) X_i; P must be
/// invertible.
LieAlgebra change_of_basis(const LieAlgebra& g, const Matrix& p);

/// The bracket-closed subspace s as an algebra on its rref basis. Throws if
/// s is not closed under the bracket.
LieAlgebra induced_subalgebra(const LieAlgebra& g, const Subspace& s);

/// Maurer-Cartan presentation keyed by catalog labels: d omega_k =
/// sum a. omega_i ^ omega_j with i < j. The repo-wide sign convention maps a
/// term (i, j, a) of d omega_k to the structure constant C^k_{ij} = a.
struct MCTerm {
  int i, j;
  Rat a;
};

struct MaurerCartanForm {
  std::vector<int> labels;               // ordered basis labels
  std::map<int, std::vector<MCTerm>> d;  // target label -> terms

  void add(int k, int i, int j, Rat a);
};

LieAlgebra mc_to_algebra(const MaurerCartanForm& f);
MaurerCartanForm algebra_to_mc(const LieAlgebra& g);

}  // namespace ngla
