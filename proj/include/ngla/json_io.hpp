#pragma once

#include <string>

#include "ngla/lie_algebra.hpp"

namespace ngla {

/// Versioned JSON document for a structure-constant algebra:
/// {
///   "schema_version": "1",
///   "dim": 8,
///   "labels": ["X1", ..., "X8"],
///   "brackets": [{"i": 1, "j": 2, "k": 3, "coeff": "1"}, ...],
///   "grading": [1, 1, 2, ...],        // optional
///   "provenance": "Q:m=4"             // optional
/// }
/// i < j are 1-based basis positions; coefficients are exact "p" or "p/q"
/// strings. Serialization is deterministic: brackets sorted by (i, j, k).
std::string algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const std::string& text);

void save_algebra(const LieAlgebra& g, const std::string& path);
LieAlgebra load_algebra(const std::string& path);

}  // namespace ngla
