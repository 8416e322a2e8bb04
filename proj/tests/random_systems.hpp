#pragma once

#include "fewroots/polynomial.hpp"

#include <random>
#include <set>

namespace testing_util {

using fewroots::Exponent;
using fewroots::Rational;
using fewroots::SparsePolynomial;
using fewroots::SparseSystem;

/// Polynomial in n variables with exactly `terms` terms, exponents summing to <= max_degree,
/// coefficients +-[1, 9] times a random power p^[0, 3].
inline SparsePolynomial random_polynomial(std::mt19937_64& rng, std::size_t n, std::size_t terms, long max_degree,
                                          long p) {
  std::uniform_int_distribution<long> e(0, max_degree), c(1, 9), s(0, 1), v(0, 3);
  std::set<Exponent> used;
  SparsePolynomial f(n);
  while (used.size() < terms) {
    Exponent a(n);
    long total = 0;
    for (auto& x : a) {
      x = e(rng);
      total += x;
    }
    if (total > max_degree || !used.insert(a).second) continue;
    Rational coeff = c(rng) * (s(rng) ? 1 : -1);
    for (long k = v(rng); k > 0; --k) coeff *= p;
    f.add_term(a, coeff);
  }
  return f;
}

inline SparseSystem random_square_system(std::mt19937_64& rng, std::size_t n, std::size_t min_terms,
                                         std::size_t max_terms, long max_degree, long p) {
  std::uniform_int_distribution<std::size_t> t(min_terms, max_terms);
  std::vector<SparsePolynomial> polys;
  for (std::size_t i = 0; i < n; ++i) polys.push_back(random_polynomial(rng, n, t(rng), max_degree, p));
  return SparseSystem(n, std::move(polys));
}

}  // namespace testing_util
