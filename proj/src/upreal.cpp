#include "fewroots/upreal.hpp"

#include "fewroots/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace fewroots {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min over rounded-down and max over rounded-up results of all endpoint pairs.
Interval endpoint_hull(const Interval& a, const Interval& b, BinaryOp op) {
  mpfr_prec_t bits = joint(a, b);
  BigFloat lo(bits), hi(bits), tmp(bits);
  const BigFloat* xs[2] = {&a.lo(), &a.hi()};
  const BigFloat* ys[2] = {&b.lo(), &b.hi()};
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      op(tmp.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), lo.get())) mpfr_set(lo.get(), tmp.get(), MPFR_RNDD);
      op(tmp.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), hi.get())) mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace

Interval::Interval(const Rational& q, mpfr_prec_t bits) : lo_(bits), hi_(bits) {
  mpfr_set_q(lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_greater_p(lo_.get(), hi_.get())) throw InternalError("inverted interval");
}

Interval Interval::euler_e(mpfr_prec_t bits) {
  BigFloat lo(bits), hi(bits);
  mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
  mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator+(const Interval& a, const Interval& b) {
  mpfr_prec_t bits = joint(a, b);
  BigFloat lo(bits), hi(bits);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
  mpfr_prec_t bits = joint(a, b);
  BigFloat lo(bits), hi(bits);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) { return endpoint_hull(a, b, mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_.get()) <= 0 && mpfr_sgn(b.hi_.get()) >= 0)
    throw InvalidParameter("division by an interval containing zero");
  return endpoint_hull(a, b, mpfr_div);
}

Interval Interval::operator-() const {
  BigFloat lo(precision()), hi(precision());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::ln() const {
  if (mpfr_sgn(lo_.get()) <= 0) throw InvalidParameter("logarithm of a nonpositive quantity");
  BigFloat lo(precision()), hi(precision());
  mpfr_log(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow(unsigned exponent) const {
  Interval result(Rational(1), precision());
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

UpperReal UpperReal::exact(const Rational& q, int digits) {
  return UpperReal(Interval(q, bits_for_digits(digits)));
}

std::string UpperReal::to_decimal(int digits) const {
  const BigFloat& hi = enclosure_.hi();
  if (mpfr_zero_p(hi.get())) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), hi.get(), MPFR_RNDU);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!s.empty() && s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  // value = 0.s * 10^exp10
  std::ostringstream out;
  out << sign;
  long e = static_cast<long>(exp10);
  long len = static_cast<long>(s.size());
  if (e > 0 && e <= len) {
    out << s.substr(0, static_cast<std::size_t>(e));
    if (e < len) out << '.' << s.substr(static_cast<std::size_t>(e));
  } else if (e <= 0 && e > -10) {
    out << "0." << std::string(static_cast<std::size_t>(-e), '0') << s;
  } else {
    out << s[0];
    if (s.size() > 1) out << '.' << s.substr(1);
    out << 'e' << (e - 1);
  }
  return out.str();
}

Integer UpperReal::floor() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), enclosure_.hi().get(), MPFR_RNDD);
  return z;
}

bool UpperReal::dominates(const Rational& q) const {
  return mpfr_cmp_q(enclosure_.hi().get(), q.get_mpq_t()) >= 0;
}

bool UpperReal::near(const Rational& q, double rel) const {
  BigFloat diff(enclosure_.precision());
  mpfr_sub_q(diff.get(), enclosure_.hi().get(), q.get_mpq_t(), MPFR_RNDN);
  double d = std::fabs(diff.to_double());
  double scale = std::fabs(enclosure_.hi().to_double());
  return d <= rel * scale;
}

struct Expr::Node {
  Kind kind;
  Rational value;  // kConst
  long base = 0;   // kLogBase
  unsigned exponent = 0;  // kPow
  std::vector<Expr> args;
};

Expr Expr::constant(const Rational& q) {
  return Expr(std::make_shared<const Node>(Node{Kind::kConst, q, 0, 0, {}}));
}

Expr Expr::euler_c() { return Expr(std::make_shared<const Node>(Node{Kind::kEulerC, 0, 0, 0, {}})); }

Expr Expr::ln(Expr arg) {
  return Expr(std::make_shared<const Node>(Node{Kind::kLn, 0, 0, 0, {std::move(arg)}}));
}

Expr Expr::log_base(Expr arg, long base) {
  if (base < 2) throw InvalidParameter("logarithm base must be >= 2");
  return Expr(std::make_shared<const Node>(Node{Kind::kLogBase, 0, base, 0, {std::move(arg)}}));
}

Expr Expr::pow(Expr base, unsigned exponent) {
  return Expr(std::make_shared<const Node>(Node{Kind::kPow, 0, 0, exponent, {std::move(base)}}));
}

Expr operator+(Expr a, Expr b) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Kind::kAdd, 0, 0, 0, {std::move(a), std::move(b)}}));
}
Expr operator-(Expr a, Expr b) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Kind::kSub, 0, 0, 0, {std::move(a), std::move(b)}}));
}
Expr operator*(Expr a, Expr b) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Kind::kMul, 0, 0, 0, {std::move(a), std::move(b)}}));
}
Expr operator/(Expr a, Expr b) {
  return Expr(std::make_shared<const Expr::Node>(
      Expr::Node{Expr::Kind::kDiv, 0, 0, 0, {std::move(a), std::move(b)}}));
}

Expr::Kind Expr::kind() const { return node_->kind; }

const Rational& Expr::const_value() const {
  if (node_->kind != Kind::kConst) throw InternalError("const_value() of non-constant expression");
  return node_->value;
}

std::string Expr::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kConst: {
      std::string v = fewroots::to_string(n.value);
      return n.value.get_den() == 1 && n.value >= 0 ? v : "(" + v + ")";
    }
    case Kind::kEulerC: return "c";
    case Kind::kAdd: return "(" + n.args[0].to_string() + " + " + n.args[1].to_string() + ")";
    case Kind::kSub: return "(" + n.args[0].to_string() + " - " + n.args[1].to_string() + ")";
    case Kind::kMul: {
      std::string rhs = n.args[1].to_string();
      if (n.args[1].kind() == Kind::kDiv) rhs = "(" + rhs + ")";
      return n.args[0].to_string() + "*" + rhs;
    }
    case Kind::kDiv: {
      std::string rhs = n.args[1].to_string();
      if (n.args[1].kind() == Kind::kMul || n.args[1].kind() == Kind::kDiv) rhs = "(" + rhs + ")";
      return n.args[0].to_string() + "/" + rhs;
    }
    case Kind::kPow: return "(" + n.args[0].to_string() + ")^" + std::to_string(n.exponent);
    case Kind::kLn: return "ln(" + n.args[0].to_string() + ")";
    case Kind::kLogBase: return "log_" + std::to_string(n.base) + "(" + n.args[0].to_string() + ")";
  }
  return "?";
}

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < kMinDigits) digits = kMinDigits;
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

namespace {

// log_base(q) when q is an exact integer power of base.
std::optional<long> exact_log(const Expr& arg, long base) {
  if (arg.kind() != Expr::Kind::kConst) return std::nullopt;
  const Rational& q = arg.const_value();
  if (q <= 0) return std::nullopt;
  Integer num = q.get_num(), den = q.get_den();
  long sign = 1;
  if (num == 1 && den != 1) {
    std::swap(num, den);
    sign = -1;
  }
  if (den != 1) return std::nullopt;
  long k = 0;
  while (num > 1) {
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(base))) return std::nullopt;
    num /= base;
    ++k;
  }
  return sign * k;
}

}  // namespace

Interval evaluate(const Expr& e, mpfr_prec_t bits) {
  const Expr::Node& n = *e.node_;
  switch (n.kind) {
    case Expr::Kind::kConst: return Interval(n.value, bits);
    case Expr::Kind::kEulerC: {
      Interval eu = Interval::euler_e(bits);
      return eu / (eu - Interval(Rational(1), bits));
    }
    case Expr::Kind::kAdd: return evaluate(n.args[0], bits) + evaluate(n.args[1], bits);
    case Expr::Kind::kSub: return evaluate(n.args[0], bits) - evaluate(n.args[1], bits);
    case Expr::Kind::kMul: return evaluate(n.args[0], bits) * evaluate(n.args[1], bits);
    case Expr::Kind::kDiv: return evaluate(n.args[0], bits) / evaluate(n.args[1], bits);
    case Expr::Kind::kPow: return evaluate(n.args[0], bits).pow(n.exponent);
    case Expr::Kind::kLn: return evaluate(n.args[0], bits).ln();
    case Expr::Kind::kLogBase:
      if (auto k = exact_log(n.args[0], n.base)) return Interval(Rational(*k), bits);
      return evaluate(n.args[0], bits).ln() / Interval(Rational(n.base), bits).ln();
  }
  throw InternalError("unknown expression node");
}

UpperReal eval_up(const Expr& e, int digits) {
  if (digits < kMinDigits)
    throw InvalidParameter("working precision must be at least " + std::to_string(kMinDigits) + " digits");
  return UpperReal(evaluate(e, bits_for_digits(digits)));
}

}  // namespace fewroots
