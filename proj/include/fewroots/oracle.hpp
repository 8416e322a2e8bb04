#pragma once

// Exact brute-force root counters for desk-scale instances.

#include "fewroots/linalg.hpp"
#include "fewroots/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fewroots {

inline constexpr long kDefaultPrecisionCap = 60;
inline constexpr std::size_t kSearchMaxVars = 3;
inline constexpr long kSearchMaxHeight = 100;
inline constexpr long kProductMaxTerms = 8;
inline constexpr std::size_t kProductMaxVars = 3;

enum class CountMethod { kUnivariatePadic, kSnfBinomial, kRationalSearch, kProductSystem };
std::string to_string(CountMethod method);

struct RootCount {
  Integer count;
  CountMethod method;
  std::string region;
  bool with_multiplicity = false;
  /// (multiplicity, number of distinct roots of that multiplicity); univariate only.
  std::vector<std::pair<long, long>> factor_counts;
};

/// Distinct roots of f in Q_p^*. Multiplicities are reported in factor_counts.
/// Throws CapExceeded if residue refinement needs more than precision_cap levels.
RootCount count_univariate_padic(const SparsePolynomial& f, Prime p, long precision_cap = kDefaultPrecisionCap);

struct SmithForm {
  IntegerMatrix U, D, V;  // U * A * V = D, U and V unimodular
};

SmithForm smith_normal_form(const IntegerMatrix& a);

struct BinomialCount {
  RootCount roots;
  std::optional<RationalVector> valuation;
};

/// Roots in (C_p^*)^n of x^{A_i} = c_i, i = 1..n.
BinomialCount count_binomial_system(const IntegerMatrix& a, const std::vector<Rational>& c, Prime p);

/// Roots in (Q^*)^n whose coordinates have numerator and denominator of magnitude <= height.
RootCount rational_root_search(const SparseSystem& system, long height);

/// f_i = prod_{j=1}^{m-1} (x_i - j), i = 1..n.
SparseSystem product_system(long m, long n);

/// n random integer combinations of the k > n equations; returns the system itself when k = n.
/// The drawn coefficient matrix is written to `coefficients` when given.
SparseSystem reduce_to_square(const SparseSystem& system, std::uint64_t seed,
                              IntegerMatrix* coefficients = nullptr);

}  // namespace fewroots
