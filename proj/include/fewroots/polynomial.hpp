#pragma once

#include "fewroots/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace fewroots {

using Exponent = std::vector<long>;

/// Laurent polynomial in n variables with exact rational coefficients.
/// Zero coefficients are never stored.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(std::size_t nvars) : nvars_(nvars) {}
  SparsePolynomial(std::size_t nvars, const std::map<Exponent, Rational>& terms);

  static SparsePolynomial constant(std::size_t nvars, const Rational& c);
  static SparsePolynomial variable(std::size_t nvars, std::size_t index);
  static SparsePolynomial monomial(const Exponent& exp, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& exp) const;

  void add_term(const Exponent& exp, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const Rational& s, const SparsePolynomial& a);
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) = default;
  SparsePolynomial pow(unsigned exponent) const;

  /// Exact evaluation; a coordinate raised to a negative power must be nonzero.
  Rational evaluate(const std::vector<Rational>& x) const;
  /// Fixes variable `var` to `value`; the variable count is unchanged.
  SparsePolynomial substitute(std::size_t var, const Rational& value) const;

  /// Componentwise minimum exponent over the support.
  Exponent min_exponents() const;
  /// Multiplies by the monomial that makes every exponent >= 0 with zero minima.
  SparsePolynomial normalized() const;
  long total_degree() const;
  long degree_in(std::size_t var) const;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

/// k Laurent polynomials in n variables.
class SparseSystem {
 public:
  SparseSystem(std::size_t nvars, std::vector<SparsePolynomial> polynomials);

  std::size_t n() const { return nvars_; }
  std::size_t k() const { return polys_.size(); }
  const std::vector<SparsePolynomial>& polynomials() const { return polys_; }
  const SparsePolynomial& operator[](std::size_t i) const { return polys_[i]; }

  /// Number of distinct exponent vectors across all polynomials.
  std::size_t m() const;
  /// Per-polynomial term counts m_i.
  std::vector<std::size_t> term_counts() const;
  bool is_square() const { return k() == n(); }

  SparseSystem normalized() const;

 private:
  std::size_t nvars_;
  std::vector<SparsePolynomial> polys_;
};

}  // namespace fewroots
