#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fewroots {

using Integer = mpz_class;
/// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
/// "num/den", with "/den" omitted when den = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// A rational prime. Construction validates primality.
class Prime {
 public:
  explicit Prime(long value);
  long value() const { return value_; }
  unsigned long uvalue() const { return static_cast<unsigned long>(value_); }
  friend bool operator==(Prime, Prime) = default;

 private:
  long value_;
};

bool is_prime(long n);

/// Element of Q ∪ {+inf}; +inf absorbs addition.
class ExtendedValuation {
 public:
  ExtendedValuation() : infinite_(true) {}
  ExtendedValuation(Rational v) : infinite_(false), value_(std::move(v)) {}  // NOLINT
  static ExtendedValuation infinity() { return {}; }

  bool is_infinite() const { return infinite_; }
  /// Precondition: finite.
  const Rational& value() const;

  friend ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b);
  friend bool operator==(const ExtendedValuation& a, const ExtendedValuation& b);
  friend std::strong_ordering operator<=>(const ExtendedValuation& a, const ExtendedValuation& b);

  std::string to_string() const;

 private:
  bool infinite_;
  Rational value_;
};

const ExtendedValuation& min(const ExtendedValuation& a, const ExtendedValuation& b);

/// Exponent of p in a nonzero integer.
long ord_p(const Integer& x, Prime p);
/// Exponent of p in x, negative for denominators; +inf at 0.
ExtendedValuation ord_p(const Rational& x, Prime p);
/// Finite valuation of a nonzero rational as a plain integer.
long ord_p_finite(const Rational& x, Prime p);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace fewroots
