#include "fewroots/arith.hpp"

#include "fewroots/errors.hpp"

#include <cctype>

namespace fewroots {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view part) {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(long value) : value_(value) {
  if (!is_prime(value)) throw InvalidParameter("not a prime: " + std::to_string(value));
}

const Rational& ExtendedValuation::value() const {
  if (infinite_) throw InternalError("value() of infinite valuation");
  return value_;
}

ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.infinite_ || b.infinite_) return ExtendedValuation::infinity();
  return ExtendedValuation(Rational(a.value_ + b.value_));
}

bool operator==(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtendedValuation::to_string() const {
  return infinite_ ? "inf" : fewroots::to_string(value_);
}

const ExtendedValuation& min(const ExtendedValuation& a, const ExtendedValuation& b) {
  return (b < a) ? b : a;
}

long ord_p(const Integer& x, Prime p) {
  if (x == 0) throw InvalidParameter("ord_p of zero integer is infinite");
  Integer y = abs(x);
  long k = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p.uvalue())) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p.uvalue());
    ++k;
  }
  return k;
}

ExtendedValuation ord_p(const Rational& x, Prime p) {
  if (x == 0) return ExtendedValuation::infinity();
  return ExtendedValuation(Rational(ord_p(Integer(x.get_num()), p) - ord_p(Integer(x.get_den()), p)));
}

long ord_p_finite(const Rational& x, Prime p) {
  if (x == 0) throw InvalidParameter("ord_p of zero is infinite");
  return ord_p(Integer(x.get_num()), p) - ord_p(Integer(x.get_den()), p);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw InvalidParameter("factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace fewroots
