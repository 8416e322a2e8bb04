#include "fewroots/oracle.hpp"

#include "fewroots/errors.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace fewroots {

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::kUnivariatePadic: return "univariate_padic";
    case CountMethod::kSnfBinomial: return "snf_binomial";
    case CountMethod::kRationalSearch: return "rational_search";
    case CountMethod::kProductSystem: return "product_system";
  }
  return "unknown";
}

namespace {

// Dense univariate polynomials, index = degree.
using Dense = std::vector<Rational>;
using DenseZ = std::vector<Integer>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const Dense& a) { return static_cast<long>(a.size()) - 1; }

Dense derivative(const Dense& a) {
  Dense out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
  trim(out);
  return out;
}

Dense sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  if (b.empty()) throw InternalError("polynomial division by zero");
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Dense monic(Dense a) {
  if (a.empty()) return a;
  Rational lc = a.back();
  for (auto& x : a) x /= lc;
  return a;
}

Dense gcd(Dense a, Dense b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Dense exact_div(const Dense& a, const Dense& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw InternalError("inexact polynomial division");
  return q;
}

// Yun: f = lc * prod a_i^i with a_i squarefree and pairwise coprime.
std::vector<std::pair<long, Dense>> squarefree_factors(const Dense& f) {
  std::vector<std::pair<long, Dense>> out;
  Dense fp = derivative(f);
  Dense a0 = gcd(f, fp);
  Dense b = exact_div(f, a0);
  Dense c = exact_div(fp, a0);
  Dense d = sub(c, derivative(b));
  for (long i = 1; deg(b) > 0; ++i) {
    Dense a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = sub(c, derivative(b));
    if (deg(a) > 0) out.emplace_back(i, a);
  }
  return out;
}

// Primitive integer multiple.
DenseZ to_integer(const Dense& a) {
  Integer l = 1;
  for (const auto& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  DenseZ out;
  Integer g = 0;
  for (const auto& x : a) {
    Rational y = x * Rational(l);
    out.push_back(y.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

long val(const Integer& x, unsigned long p) {
  if (x == 0) return -1;
  mpz_class tmp = x;
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

Integer pow_ui(unsigned long p, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

bool divisible(const Integer& x, unsigned long p) { return mpz_divisible_ui_p(x.get_mpz_t(), p) != 0; }

Integer eval_at(const DenseZ& h, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = h.size(); i-- > 0;) acc = acc * x + h[i];
  return acc;
}

DenseZ derivative(const DenseZ& h) {
  DenseZ out;
  for (std::size_t i = 1; i < h.size(); ++i) out.push_back(h[i] * static_cast<long>(i));
  return out;
}

class UnitRootCounter {
 public:
  UnitRootCounter(unsigned long p, long cap) : p_(p), cap_(cap) {}

  // Roots of a primitive integer polynomial h in Z_p that are units.
  long count_units(const DenseZ& h) const {
    long total = 0;
    for (unsigned long c = 1; c < p_; ++c) total += roots_near(h, Integer(c), 0);
    return total;
  }

 private:
  // Roots of h in c + pZ_p.
  long roots_near(const DenseZ& h, const Integer& c, long depth) const {
    if (!divisible(eval_at(h, c), p_)) return 0;
    if (!divisible(eval_at(derivative(h), c), p_)) return 1;
    if (depth >= cap_) throw CapExceeded("residue refinement exceeded precision cap " + std::to_string(cap_));
    // g(y) = h(c + p y) / p^v
    std::size_t n = h.size();
    DenseZ g(n, Integer(0));
    for (std::size_t k = 0; k < n; ++k) {
      Integer acc = 0;
      Integer cpow = 1;
      for (std::size_t i = k; i < n; ++i) {
        acc += h[i] * binomial(static_cast<long>(i), static_cast<long>(k)) * cpow;
        cpow *= c;
      }
      g[k] = acc * pow_ui(p_, k);
    }
    long v = -1;
    for (const auto& x : g) {
      long w = val(x, p_);
      if (w >= 0 && (v < 0 || w < v)) v = w;
    }
    if (v < 0) throw InternalError("refined polynomial vanished");
    Integer pv = pow_ui(p_, static_cast<unsigned long>(v));
    for (auto& x : g) x /= pv;
    while (!g.empty() && g.back() == 0) g.pop_back();
    long total = 0;
    for (unsigned long r = 0; r < p_; ++r) total += roots_near(g, Integer(r), depth + 1);
    return total;
  }

  unsigned long p_;
  long cap_;
};

// Roots in Q_p^* of a squarefree integer polynomial with nonzero constant term.
long count_squarefree(const DenseZ& h, Prime prime, long cap) {
  const unsigned long p = prime.uvalue();
  // Lower convex hull of (i, ord_p h_i).
  std::vector<std::pair<long, long>> pts;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != 0) pts.emplace_back(static_cast<long>(i), val(h[i], p));
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      // drop the middle point unless it lies strictly below the chord
      if ((y2 - y1) * (pt.first - x1) >= (pt.second - y1) * (x2 - x1)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  UnitRootCounter counter(p, cap);
  long total = 0;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    long dx = hull[e + 1].first - hull[e].first;
    long dy = hull[e + 1].second - hull[e].second;
    if (dy % dx != 0) continue;
    long s = -dy / dx;  // root valuation
    // h(p^s u) scaled to a primitive integer polynomial
    Dense scaled(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] == 0) continue;
      long e2 = s * static_cast<long>(i);
      Rational f = e2 >= 0 ? Rational(pow_ui(p, static_cast<unsigned long>(e2)))
                           : Rational(Integer(1), pow_ui(p, static_cast<unsigned long>(-e2)));
      scaled[i] = Rational(h[i]) * f;
    }
    total += counter.count_units(to_integer(scaled));
  }
  return total;
}

}  // namespace

RootCount count_univariate_padic(const SparsePolynomial& f, Prime p, long precision_cap) {
  if (f.nvars() != 1) throw InvalidParameter("univariate oracle needs a polynomial in one variable");
  if (f.is_zero()) throw InvalidParameter("zero polynomial has no isolated roots");
  if (precision_cap < 1) throw InvalidParameter("precision cap must be >= 1");
  SparsePolynomial g = f.normalized();
  Dense dense(static_cast<std::size_t>(g.degree_in(0)) + 1);
  for (const auto& [exp, c] : g.terms()) dense[static_cast<std::size_t>(exp[0])] = c;
  RootCount out{0, CountMethod::kUnivariatePadic, "Q_" + std::to_string(p.value()) + "^*", false, {}};
  for (const auto& [mult, factor] : squarefree_factors(dense)) {
    long n = count_squarefree(to_integer(factor), p, precision_cap);
    out.count += n;
    out.factor_counts.emplace_back(mult, n);
  }
  return out;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IntegerMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// row_i -= q * row_j
void add_row(IntegerMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] -= q * m[j][c];
}

void add_col(IntegerMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  for (auto& row : m) row[i] -= q * row[j];
}

IntegerMatrix identity(std::size_t n) {
  IntegerMatrix id(n, IntegerVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw InvalidParameter("ragged integer matrix");
  IntegerMatrix D = a, U = identity(rows), V = identity(cols);
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D[i][j] != 0 && (pi == rows || abs(D[i][j]) < abs(D[pi][pj]))) pi = i, pj = j;
      if (pi == rows) break;
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        add_row(D, i, t, q);
        add_row(U, i, t, q);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        add_col(D, j, t, q);
        add_col(V, j, t, q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(D, t, bad, Integer(-1));
      add_row(U, t, bad, Integer(-1));
    }
    if (t < rows && t < cols && D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : U[t]) x = -x;
    }
  }
  if (multiply(multiply(U, a), V) != D) throw InternalError("Smith form check U*A*V = D failed");
  if (abs(determinant(U)) != 1 || abs(determinant(V)) != 1) throw InternalError("Smith transform not unimodular");
  return {U, D, V};
}

BinomialCount count_binomial_system(const IntegerMatrix& a, const std::vector<Rational>& c, Prime p) {
  const std::size_t n = a.size();
  if (n == 0 || c.size() != n) throw InvalidParameter("binomial system needs n rows and n constants");
  for (const auto& r : a)
    if (r.size() != n) throw InvalidParameter("binomial exponent matrix must be square");
  for (const auto& x : c)
    if (x == 0) throw InvalidParameter("binomial constants must be nonzero");
  SmithForm snf = smith_normal_form(a);
  Integer count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= snf.D[i][i];
  count = abs(count);
  if (count == 0) throw InvalidParameter("singular binomial exponent matrix");
  RationalMatrix ar(n, RationalVector(n));
  RationalVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ar[i][j] = Rational(a[i][j]);
    rhs[i] = ord_p_finite(c[i], p);
  }
  std::string region = "(C_" + std::to_string(p.value()) + "^*)^" + std::to_string(n);
  return {RootCount{count, CountMethod::kSnfBinomial, region, true, {}}, solve(ar, rhs)};
}

namespace {

std::vector<Rational> height_grid(long h) {
  std::vector<Rational> out;
  for (long den = 1; den <= h; ++den)
    for (long num = 1; num <= h; ++num) {
      if (std::gcd(num, den) != 1) continue;
      out.emplace_back(num, den);
      out.emplace_back(-num, den);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool depends_only_on(const SparsePolynomial& f, std::size_t var) {
  for (const auto& [exp, c] : f.terms())
    for (std::size_t j = 0; j < exp.size(); ++j)
      if (j != var && exp[j] != 0) return false;
  return true;
}

// Nonzero rational roots of height <= h of a univariate polynomial in `var`.
std::vector<Rational> univariate_candidates(const SparsePolynomial& f, std::size_t var, long h) {
  Integer lead_den = 1;
  for (const auto& [exp, c] : f.terms()) mpz_lcm(lead_den.get_mpz_t(), lead_den.get_mpz_t(), c.get_den_mpz_t());
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& [exp, c] : f.terms()) {
    if (first || exp[var] < lo) lo = exp[var];
    if (first || exp[var] > hi) hi = exp[var];
    first = false;
  }
  auto coeff_at = [&](long e) {
    Exponent exp(f.nvars(), 0);
    exp[var] = e;
    return Rational(f.coefficient(exp) * Rational(lead_den)).get_num();
  };
  Integer a0 = coeff_at(lo), an = coeff_at(hi);
  std::vector<Rational> out;
  for (long num = 1; num <= h; ++num) {
    if (!mpz_divisible_ui_p(a0.get_mpz_t(), static_cast<unsigned long>(num))) continue;
    for (long den = 1; den <= h; ++den) {
      if (std::gcd(num, den) != 1 || !mpz_divisible_ui_p(an.get_mpz_t(), static_cast<unsigned long>(den))) continue;
      for (long sign : {1L, -1L}) {
        Rational x(sign * num, den);
        std::vector<Rational> pt(f.nvars(), Rational(1));
        pt[var] = x;
        if (f.evaluate(pt) == 0) out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

class RationalSearch {
 public:
  RationalSearch(long h) : h_(h) {}

  Integer run(std::vector<SparsePolynomial> polys, std::vector<bool> fixed) {
    for (const auto& f : polys)
      if (!f.is_zero() && is_constant(f, fixed)) return 0;
    std::size_t next = fixed.size();
    std::vector<Rational> cands;
    bool have = false;
    for (std::size_t v = 0; v < fixed.size() && !have; ++v) {
      if (fixed[v]) continue;
      if (next == fixed.size()) next = v;
      for (const auto& f : polys) {
        if (f.is_zero() || !depends_only_on(f, v)) continue;
        cands = univariate_candidates(f, v, h_);
        next = v;
        have = true;
        break;
      }
    }
    if (next == fixed.size()) return 1;  // every variable fixed and every equation vanished
    if (!have) {
      if (grid_.empty()) grid_ = height_grid(h_);
      cands = grid_;
    }
    Integer total = 0;
    fixed[next] = true;
    for (const auto& x : cands) {
      std::vector<SparsePolynomial> sub;
      sub.reserve(polys.size());
      for (const auto& f : polys) sub.push_back(f.substitute(next, x));
      total += run(std::move(sub), fixed);
    }
    return total;
  }

 private:
  static bool is_constant(const SparsePolynomial& f, const std::vector<bool>& fixed) {
    for (const auto& [exp, c] : f.terms())
      for (std::size_t j = 0; j < exp.size(); ++j)
        if (!fixed[j] && exp[j] != 0) return false;
    return true;
  }

  long h_;
  std::vector<Rational> grid_;
};

}  // namespace

RootCount rational_root_search(const SparseSystem& system, long height) {
  if (system.n() > kSearchMaxVars)
    throw CapExceeded("rational search supports at most " + std::to_string(kSearchMaxVars) + " variables");
  if (height < 1) throw InvalidParameter("height cap must be >= 1");
  if (height > kSearchMaxHeight)
    throw CapExceeded("height cap above " + std::to_string(kSearchMaxHeight));
  RationalSearch search(height);
  Integer count = search.run(system.polynomials(), std::vector<bool>(system.n(), false));
  std::string region = "(Q^*)^" + std::to_string(system.n()) + ", height <= " + std::to_string(height);
  return RootCount{count, CountMethod::kRationalSearch, region, false, {}};
}

SparseSystem product_system(long m, long n) {
  if (m < 2 || n < 1) throw InvalidParameter("product system needs m >= 2 and n >= 1");
  if (m > kProductMaxTerms || n > static_cast<long>(kProductMaxVars))
    throw CapExceeded("product system capped at m <= 8, n <= 3");
  auto nv = static_cast<std::size_t>(n);
  std::vector<SparsePolynomial> polys;
  for (std::size_t i = 0; i < nv; ++i) {
    SparsePolynomial f = SparsePolynomial::constant(nv, 1);
    for (long j = 1; j < m; ++j) f = f * (SparsePolynomial::variable(nv, i) - SparsePolynomial::constant(nv, j));
    polys.push_back(std::move(f));
  }
  return SparseSystem(nv, std::move(polys));
}

SparseSystem reduce_to_square(const SparseSystem& system, std::uint64_t seed, IntegerMatrix* coefficients) {
  const std::size_t n = system.n(), k = system.k();
  if (k < n) throw InvalidParameter("reduction needs k >= n");
  if (k == n) {
    if (coefficients) *coefficients = identity(n);
    return system;
  }
  std::size_t terms = 0;
  for (auto c : system.term_counts()) terms += c;
  const long bound = static_cast<long>(2 * k * terms);
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  };
  constexpr int kMaxRetries = 64;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    IntegerMatrix a(n, IntegerVector(k));
    std::vector<SparsePolynomial> out;
    bool degenerate = false;
    for (std::size_t i = 0; i < n && !degenerate; ++i) {
      SparsePolynomial g(n);
      for (std::size_t j = 0; j < k; ++j) {
        a[i][j] = draw();
        g += Rational(a[i][j]) * system[j];
      }
      degenerate = g.is_zero();
      out.push_back(std::move(g));
    }
    if (degenerate) continue;
    if (coefficients) *coefficients = a;
    return SparseSystem(n, std::move(out));
  }
  throw CapExceeded("no nondegenerate combination found after " + std::to_string(kMaxRetries) + " draws");
}

}  // namespace fewroots
