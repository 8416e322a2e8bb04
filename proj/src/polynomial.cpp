#include "fewroots/polynomial.hpp"

#include "fewroots/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fewroots {

SparsePolynomial::SparsePolynomial(std::size_t nvars, const std::map<Exponent, Rational>& terms)
    : nvars_(nvars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

SparsePolynomial SparsePolynomial::constant(std::size_t nvars, const Rational& c) {
  SparsePolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidParameter("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  SparsePolynomial p(nvars);
  p.add_term(e, 1);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const Exponent& exp, const Rational& c) {
  SparsePolynomial p(exp.size());
  p.add_term(exp, c);
  return p;
}

Rational SparsePolynomial::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& exp, const Rational& c) {
  if (exp.size() != nvars_) throw InvalidParameter("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  if (other.nvars_ != nvars_) throw InvalidParameter("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  if (other.nvars_ != nvars_) throw InvalidParameter("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.nvars_ != b.nvars_) throw InvalidParameter("variable count mismatch");
  SparsePolynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePolynomial operator*(const Rational& s, const SparsePolynomial& a) {
  SparsePolynomial out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
  return out;
}

SparsePolynomial SparsePolynomial::pow(unsigned exponent) const {
  SparsePolynomial result = constant(nvars_, 1);
  SparsePolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

Rational power(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw InvalidParameter("negative power of zero");
    return 1 / power(x, -e);
  }
  Rational r = 1;
  Rational b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

}  // namespace

Rational SparsePolynomial::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != nvars_) throw InvalidParameter("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= power(x[i], e[i]);
    sum += t;
  }
  return sum;
}

SparsePolynomial SparsePolynomial::substitute(std::size_t var, const Rational& value) const {
  SparsePolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out.add_term(f, c * power(value, e[var]));
  }
  return out;
}

Exponent SparsePolynomial::min_exponents() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) lo[i] = std::min(lo[i], e[i]);
  return lo;
}

SparsePolynomial SparsePolynomial::normalized() const {
  Exponent lo = min_exponents();
  SparsePolynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < nvars_; ++i) f[i] -= lo[i];
    out.add_term(f, c);
  }
  return out;
}

long SparsePolynomial::total_degree() const {
  long best = 0;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (auto x : e) s += x;
    best = std::max(best, s);
  }
  return best;
}

long SparsePolynomial::degree_in(std::size_t var) const {
  long best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    bool is_const = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    bool any = false;
    if (mag != 1 || is_const) {
      out << fewroots::to_string(mag);
      any = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) out << "*";
      out << "x" << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
      any = true;
    }
  }
  return out.str();
}

SparseSystem::SparseSystem(std::size_t nvars, std::vector<SparsePolynomial> polynomials)
    : nvars_(nvars), polys_(std::move(polynomials)) {
  if (nvars_ == 0) throw InvalidParameter("a system needs at least one variable");
  if (polys_.empty()) throw InvalidParameter("a system needs at least one polynomial");
  for (const auto& p : polys_) {
    if (p.nvars() != nvars_) throw InvalidParameter("polynomial variable count differs from system");
    if (p.is_zero()) throw InvalidParameter("zero polynomial in system");
  }
}

std::size_t SparseSystem::m() const {
  std::set<Exponent> all;
  for (const auto& p : polys_)
    for (const auto& [e, c] : p.terms()) all.insert(e);
  return all.size();
}

std::vector<std::size_t> SparseSystem::term_counts() const {
  std::vector<std::size_t> out;
  for (const auto& p : polys_) out.push_back(p.term_count());
  return out;
}

SparseSystem SparseSystem::normalized() const {
  std::vector<SparsePolynomial> out;
  for (const auto& p : polys_) out.push_back(p.normalized());
  return SparseSystem(nvars_, std::move(out));
}

}  // namespace fewroots
