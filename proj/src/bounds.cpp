#include "fewroots/bounds.hpp"

#include "fewroots/errors.hpp"

#include <algorithm>

namespace fewroots {

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::kThm1Local: return "thm1_local";
    case FormulaId::kThm1Global: return "thm1_global";
    case FormulaId::kThm2General: return "thm2_general";
    case FormulaId::kThm2PerEquation: return "thm2_per_eq";
    case FormulaId::kCor21: return "cor2_1";
    case FormulaId::kCor31: return "cor3_1";
    case FormulaId::kRemark11: return "remark1_1";
  }
  return "unknown";
}

FieldSpec::FieldSpec(Kind kind, Prime p, long d, long e, long f, long delta)
    : kind_(kind), p_(p), d_(d), e_(e), f_(f), delta_(delta) {
  mpz_ui_pow_ui(q_.get_mpz_t(), p.uvalue(), static_cast<unsigned long>(f));
}

FieldSpec FieldSpec::local(Prime p, long e, long f) {
  if (e < 1 || f < 1) throw InvalidParameter("ramification e and residue degree f must be >= 1");
  return FieldSpec(Kind::kLocal, p, e * f, e, f, 1);
}

FieldSpec FieldSpec::local(Prime p, long d, long e, long f) {
  if (d < 1) throw InvalidParameter("degree d must be >= 1");
  if (e < 1 || f < 1 || e * f != d)
    throw InvalidParameter("need e*f = d (got d=" + std::to_string(d) + ", e=" + std::to_string(e) +
                           ", f=" + std::to_string(f) + ")");
  return FieldSpec(Kind::kLocal, p, d, e, f, 1);
}

FieldSpec FieldSpec::global(long d, long delta, Prime p) {
  if (d < 1 || delta < 1) throw InvalidParameter("global degree d and delta must be >= 1");
  return FieldSpec(Kind::kGlobal, p, d, 1, 1, delta);
}

namespace {

std::string rstr(const RationalVector& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + to_string(r[i]);
  return s + ")";
}

std::string lstr(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

BoundReport finish(FormulaId id, const Expr& e, int digits,
                   std::vector<std::pair<std::string, std::string>> inputs,
                   std::vector<std::string> notes = {}) {
  UpperReal raw = eval_up(e, digits);
  Integer floor = raw.floor();
  if (floor < 0) throw InternalError("negative bound value");
  return BoundReport{id, raw, floor, std::move(inputs), std::move(notes), e.to_string()};
}

BoundReport zero(FormulaId id, int digits, std::vector<std::pair<std::string, std::string>> inputs,
                 std::string why) {
  return BoundReport{id, UpperReal::exact(0, digits), 0, std::move(inputs), {std::move(why)}, ""};
}

Expr c_general_expr(long m, const RationalVector& r, Prime p) {
  Rational prod = 1;
  for (const auto& x : r) prod *= x;
  return Expr::pow(simplex_radius(m, r, p), static_cast<unsigned>(r.size())) / Expr::constant(prod);
}

Expr c_per_eq_expr(const std::vector<long>& m_list, const RationalVector& r, Prime p) {
  Expr acc = Expr::constant(1);
  for (std::size_t i = 0; i < m_list.size(); ++i)
    acc = acc * (simplex_radius(m_list[i], r, p) / Expr::constant(r[i]));
  return acc;
}

void check_r(const RationalVector& r) {
  if (r.empty()) throw InvalidParameter("r must have at least one coordinate");
  for (const auto& x : r)
    if (x <= 0) throw InvalidParameter("every r_i must be positive (got " + to_string(x) + ")");
}

void check_mnk(long m, long n, long k) {
  if (m < 1 || n < 1 || k < 1) throw InvalidParameter("m, n, k must all be >= 1");
}

Expr thm1_local_expr(const FieldSpec& fs, long m, long n) {
  long p = fs.p().value();
  long d = fs.d();
  Expr mm1 = Expr::constant(m - 1);
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  Expr logterm = Expr::log_base(Expr::constant(d) * mm1 / Expr::ln(Expr::constant(p)), p);
  Expr inner = Expr::euler_c() * mm1 * Expr::constant(n) * Expr::constant(Rational(pd - 1)) *
               (Expr::constant(1) + Expr::constant(d) * logterm);
  return Expr::constant(Rational(u(m, n))) * Expr::pow(inner, static_cast<unsigned>(n));
}

Expr thm1_global_expr(const FieldSpec& fs, long m, long n) {
  long dd = fs.d() * fs.delta();
  Expr mm1 = Expr::constant(m - 1);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(dd));
  Expr dd2 = Expr::constant(dd * dd);
  Expr logterm = Expr::log_base(dd2 * mm1 / Expr::ln(Expr::constant(2)), 2);
  Expr inner = Expr::euler_c() * mm1 * Expr::constant(n) * Expr::constant(Rational(two_pow)) *
               (Expr::constant(1) + Expr::constant(2) * dd2 * logterm);
  return Expr::constant(Rational(2 * u(m, n))) * Expr::pow(inner, static_cast<unsigned>(n));
}

}  // namespace

Integer u(long m, long n) {
  if (m < 2) throw InvalidParameter("u(m, n) needs m >= 2");
  if (n < 1) throw InvalidParameter("u(m, n) needs n >= 1");
  if (n == 1) return m - 1;
  if (n == 2) return Integer(4) * (m - 1) * (m - 1);
  Integer base = Integer(m) * (m - 1) / 2, out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BoundReport c_p_general(long m, const RationalVector& r, Prime p, int digits) {
  check_r(r);
  auto n = static_cast<long>(r.size());
  std::vector<std::pair<std::string, std::string>> inputs{
      {"m", std::to_string(m)}, {"n", std::to_string(n)}, {"r", rstr(r)}, {"p", std::to_string(p.value())}};
  if (m <= n) return zero(FormulaId::kThm2General, digits, std::move(inputs), "m <= n: no isolated roots");
  return finish(FormulaId::kThm2General, c_general_expr(m, r, p), digits, std::move(inputs));
}

BoundReport c_p_per_equation(const std::vector<long>& m_list, const RationalVector& r, Prime p, int digits) {
  check_r(r);
  if (m_list.size() != r.size()) throw InvalidParameter("need one term count per coordinate of r");
  std::vector<std::pair<std::string, std::string>> inputs{{"m_list", lstr(m_list)},
                                                          {"n", std::to_string(r.size())},
                                                          {"r", rstr(r)},
                                                          {"p", std::to_string(p.value())}};
  for (long mi : m_list)
    if (mi <= 1)
      return zero(FormulaId::kThm2PerEquation, digits, std::move(inputs), "some m_i <= 1: no isolated roots");
  return finish(FormulaId::kThm2PerEquation, c_per_eq_expr(m_list, r, p), digits, std::move(inputs));
}

BoundReport local_bound_thm1(const FieldSpec& fs, long m, long n, long k, int digits) {
  if (fs.kind() != FieldSpec::Kind::kLocal) throw InvalidParameter("local bound needs a local field spec");
  check_mnk(m, n, k);
  std::vector<std::pair<std::string, std::string>> inputs{
      {"p", std::to_string(fs.p().value())}, {"d", std::to_string(fs.d())}, {"m", std::to_string(m)},
      {"n", std::to_string(n)}, {"k", std::to_string(k)}};
  if (m <= n || k < n)
    return zero(FormulaId::kThm1Local, digits, std::move(inputs), "m <= n or k < n: no isolated roots");
  return finish(FormulaId::kThm1Local, thm1_local_expr(fs, m, n), digits, std::move(inputs));
}

BoundReport global_bound_thm1(const FieldSpec& fs, long m, long n, long k, int digits) {
  if (fs.kind() != FieldSpec::Kind::kGlobal) throw InvalidParameter("global bound needs a global field spec");
  check_mnk(m, n, k);
  std::vector<std::pair<std::string, std::string>> inputs{
      {"d", std::to_string(fs.d())}, {"delta", std::to_string(fs.delta())}, {"m", std::to_string(m)},
      {"n", std::to_string(n)}, {"k", std::to_string(k)}};
  std::vector<std::string> notes{
      "global case applied under k >= n, as in the local case"};
  if (m <= n || k < n) {
    auto rep = zero(FormulaId::kThm1Global, digits, std::move(inputs), "m <= n or k < n: no isolated roots");
    rep.notes.insert(rep.notes.end(), notes.begin(), notes.end());
    return rep;
  }
  return finish(FormulaId::kThm1Global, thm1_global_expr(fs, m, n), digits, std::move(inputs), std::move(notes));
}

BoundReport local_bound_cor2_1(std::size_t facets, long m, long n, long k,
                               const std::optional<std::vector<long>>& term_counts, const FieldSpec& fs,
                               CpForm form, int digits) {
  if (fs.kind() != FieldSpec::Kind::kLocal) throw InvalidParameter("local bound needs a local field spec");
  check_mnk(m, n, k);
  std::vector<std::pair<std::string, std::string>> inputs{
      {"facets", std::to_string(facets)}, {"p", std::to_string(fs.p().value())},
      {"e", std::to_string(fs.e())},      {"q", to_string(fs.q())},
      {"m", std::to_string(m)},           {"n", std::to_string(n)},
      {"k", std::to_string(k)}};
  if (term_counts) inputs.emplace_back("m_list", lstr(*term_counts));
  if (m <= n || k < n)
    return zero(FormulaId::kCor21, digits, std::move(inputs), "m <= n or k < n: no isolated roots");
  RationalVector r(static_cast<std::size_t>(n), Rational(1, fs.e()));
  bool per_eq = form == CpForm::kAuto && term_counts && k == n;
  std::vector<std::string> notes;
  Expr cp = Expr::constant(0);
  if (per_eq) {
    if (term_counts->size() != static_cast<std::size_t>(n)) throw InvalidParameter("need n term counts");
    for (long mi : *term_counts)
      if (mi <= 1)
        return zero(FormulaId::kCor21, digits, std::move(inputs), "some m_i <= 1: no isolated roots");
    cp = c_per_eq_expr(*term_counts, r, fs.p());
    notes.push_back("C_p form: per-equation");
  } else {
    cp = c_general_expr(m, r, fs.p());
    notes.push_back("C_p form: general");
  }
  Integer q1;
  mpz_pow_ui(q1.get_mpz_t(), Integer(fs.q() - 1).get_mpz_t(), static_cast<unsigned long>(n));
  Expr e = Expr::constant(static_cast<long>(facets)) * Expr::constant(Rational(q1)) * cp;
  return finish(FormulaId::kCor21, e, digits, std::move(inputs), std::move(notes));
}

BoundReport local_bound_cor2_1(const SparseSystem& system, const FieldSpec& fs, CpForm form, int digits) {
  auto m = static_cast<long>(system.m());
  auto n = static_cast<long>(system.n());
  auto k = static_cast<long>(system.k());
  if (m <= n || k < n) return local_bound_cor2_1(0, m, n, k, std::nullopt, fs, form, digits);
  std::size_t facets = facet_count(system, fs.p());
  std::optional<std::vector<long>> counts;
  if (system.is_square()) {
    counts.emplace();
    for (auto c : system.term_counts()) counts->push_back(static_cast<long>(c));
  }
  return local_bound_cor2_1(facets, m, n, k, counts, fs, form, digits);
}

BoundReport global_bound_cor3_1(std::size_t facets, long m, long n, long k, long d, long delta, int digits) {
  check_mnk(m, n, k);
  if (d < 1 || delta < 1) throw InvalidParameter("d and delta must be >= 1");
  std::vector<std::pair<std::string, std::string>> inputs{
      {"facets", std::to_string(facets)}, {"d", std::to_string(d)}, {"delta", std::to_string(delta)},
      {"m", std::to_string(m)},           {"n", std::to_string(n)}, {"k", std::to_string(k)}};
  std::vector<std::string> notes{"global reduction embeds into Q_2; p = 2 is fixed"};
  if (m <= n || k < n) {
    auto rep = zero(FormulaId::kCor31, digits, std::move(inputs), "m <= n or k < n: no isolated roots");
    rep.notes.insert(rep.notes.end(), notes.begin(), notes.end());
    return rep;
  }
  long dd = d * delta;
  Prime two(2);
  Expr sum = Expr::constant(0);
  for (long j = 1; j <= dd; ++j) {
    long ceil = (dd + j - 1) / j;
    RationalVector r(static_cast<std::size_t>(n), Rational(1, ceil * dd));
    Integer w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(j));
    w -= 1;
    mpz_pow_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(n));
    Expr term = Expr::constant(Rational(w)) * c_general_expr(m, r, two);
    sum = j == 1 ? term : sum + term;
  }
  Expr e = Expr::constant(static_cast<long>(facets)) * sum;
  return finish(FormulaId::kCor31, e, digits, std::move(inputs), std::move(notes));
}

BoundReport global_bound_cor3_1(const SparseSystem& system, long d, long delta, int digits) {
  auto m = static_cast<long>(system.m());
  auto n = static_cast<long>(system.n());
  auto k = static_cast<long>(system.k());
  if (m <= n || k < n) return global_bound_cor3_1(0, m, n, k, d, delta, digits);
  return global_bound_cor3_1(facet_count(system, Prime(2)), m, n, k, d, delta, digits);
}

AffineBound affine_bound(FormulaId base, const FieldSpec& fs, long m, long n, int digits) {
  if (base != FormulaId::kThm1Local && base != FormulaId::kThm1Global)
    throw InvalidParameter("affine bound is defined over thm1_local or thm1_global");
  if (m < 1 || n < 1) throw InvalidParameter("m and n must be >= 1");
  bool local = base == FormulaId::kThm1Local;
  if (local != (fs.kind() == FieldSpec::Kind::kLocal))
    throw InvalidParameter("field spec kind does not match the base bound");
  auto b_expr = [&](long j) -> Expr {
    if (m <= j) return Expr::constant(0);
    return local ? thm1_local_expr(fs, m, j) : thm1_global_expr(fs, m, j);
  };
  Expr exact = Expr::constant(1);
  for (long j = 1; j <= n; ++j) exact = exact + Expr::constant(Rational(binomial(n, j))) * b_expr(j);
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  // B_j vanishes for j >= m, so relax with the largest index that can be nonzero
  long top = std::min(n, m - 1);
  Expr relax = top < 1 ? Expr::constant(1) : Expr::constant(1) + Expr::constant(Rational(two_n)) * b_expr(top);
  std::vector<std::pair<std::string, std::string>> inputs{
      {"base", to_string(base)}, {"m", std::to_string(m)}, {"n", std::to_string(n)},
      {"p", std::to_string(fs.p().value())}, {"d", std::to_string(fs.d())}};
  if (!local) inputs.emplace_back("delta", std::to_string(fs.delta()));
  AffineBound out{finish(FormulaId::kRemark11, exact, digits, inputs, {"exact subset sum"}),
                  finish(FormulaId::kRemark11, relax, digits, inputs, {"2^n relaxation"})};
  if (top < n) out.relaxation.notes.push_back("m <= n: relaxed with B_" + std::to_string(top) + " in place of B_n");
  if (mpfr_greater_p(out.exact_sum.raw.enclosure().lo().get(), out.relaxation.raw.enclosure().hi().get()))
    throw InternalError("affine subset sum exceeds its relaxation");
  out.exact_sum.notes.push_back("exact subset sum <= 2^n relaxation");
  return out;
}

InequalityCheck lemma_ineq_holds(const RationalVector& r, const RationalVector& t, long m, Prime p, int digits) {
  check_r(r);
  if (t.size() != r.size()) throw InvalidParameter("r and t must have equal length");
  for (const auto& x : t)
    if (x <= 0) throw InvalidParameter("every t_i must be positive");
  if (m < 2) throw InvalidParameter("m must be >= 2");
  auto bits = bits_for_digits(digits);
  Expr mm1 = Expr::constant(m - 1);
  Rational rt = 0, rsum = 0;
  Expr logs = Expr::constant(0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    rt += r[i] * t[i];
    rsum += r[i];
    logs = logs + Expr::log_base(Expr::constant(t[i]), p.value());
  }
  // hypothesis: rt - (m-1) sum log_p t_i - (m-1) sum r_i <= 0
  Interval hyp = evaluate(Expr::constant(rt) - mm1 * logs - mm1 * Expr::constant(rsum), bits);
  Interval concl = evaluate(Expr::constant(rt) - simplex_radius(m, r, p), bits);
  return InequalityCheck{mpfr_sgn(hyp.lo().get()) <= 0, mpfr_sgn(concl.hi().get()) <= 0};
}

}  // namespace fewroots
