#pragma once

// Small exact linear algebra over Q and Z.

#include "fewroots/arith.hpp"

#include <optional>
#include <vector>

namespace fewroots {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major
using IntegerVector = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerVector>;

Rational dot(const RationalVector& a, const RationalVector& b);
Integer dot(const IntegerVector& a, const IntegerVector& b);

std::size_t rank(RationalMatrix m);
/// Basis of { x : m x = 0 } for a matrix with `cols` columns.
std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols);
/// Unique solution of a x = b for square nonsingular a, nullopt if singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);
Rational determinant(RationalMatrix m);
/// Fraction-free (Bareiss) determinant.
Integer determinant(IntegerMatrix m);

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace fewroots
