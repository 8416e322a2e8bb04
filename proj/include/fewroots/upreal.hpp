#pragma once

// Rigorous evaluation of the closed-form bound expressions.
//
// Every value is carried as an MPFR interval [lo, hi] whose endpoints are
// rounded outward at each step, so hi is always >= the exact real value.

#include "fewroots/arith.hpp"

#include <mpfr.h>

#include <memory>
#include <string>
#include <vector>

namespace fewroots {

inline constexpr int kDefaultDigits = 40;
inline constexpr int kMinDigits = 30;

/// Owning wrapper around mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

/// Closed interval with outward-rounded MPFR endpoints.
class Interval {
 public:
  Interval(const Rational& q, mpfr_prec_t bits);
  Interval(BigFloat lo, BigFloat hi);

  static Interval euler_e(mpfr_prec_t bits);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  /// Natural log; throws InvalidParameter unless lo > 0.
  Interval ln() const;
  Interval pow(unsigned exponent) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

/// A real number known through a guaranteed upper approximation.
class UpperReal {
 public:
  explicit UpperReal(Interval enclosure) : enclosure_(std::move(enclosure)) {}
  static UpperReal exact(const Rational& q, int digits = kDefaultDigits);

  const Interval& enclosure() const { return enclosure_; }
  bool guaranteed_upper() const { return guaranteed_upper_; }

  /// Upper end, `digits` significant digits, rounded toward +inf.
  std::string to_decimal(int digits = 30) const;
  /// floor(hi); an integer upper bound for any integer-valued quantity below the real.
  Integer floor() const;
  double approx() const { return enclosure_.hi().to_double(); }
  /// True when q <= hi (q could lie below the real value).
  bool dominates(const Rational& q) const;
  /// |hi - q| <= rel * |hi|.
  bool near(const Rational& q, double rel) const;

 private:
  Interval enclosure_;
  bool guaranteed_upper_ = true;
};

/// Immutable expression tree over {+, -, *, /, integer powers, ln, log_p, c = e/(e-1)}.
class Expr {
 public:
  enum class Kind { kConst, kEulerC, kAdd, kSub, kMul, kDiv, kPow, kLn, kLogBase };

  static Expr constant(const Rational& q);
  static Expr constant(long v) { return constant(Rational(v)); }
  /// c := e/(e-1).
  static Expr euler_c();
  static Expr ln(Expr arg);
  /// ln(arg)/ln(base).
  static Expr log_base(Expr arg, long base);
  static Expr pow(Expr base, unsigned exponent);

  friend Expr operator+(Expr a, Expr b);
  friend Expr operator-(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b);
  friend Expr operator/(Expr a, Expr b);

  Kind kind() const;
  const Rational& const_value() const;
  std::string to_string() const;

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
  friend Interval evaluate(const Expr& e, mpfr_prec_t bits);
};

mpfr_prec_t bits_for_digits(int digits);
Interval evaluate(const Expr& e, mpfr_prec_t bits);
/// Evaluates with `digits` significant decimal digits of working precision (>= 30).
UpperReal eval_up(const Expr& e, int digits = kDefaultDigits);

}  // namespace fewroots
