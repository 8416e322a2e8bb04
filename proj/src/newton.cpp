#include "fewroots/newton.hpp"

#include "fewroots/errors.hpp"

#include <algorithm>
#include <map>

namespace fewroots {

namespace {

Point lift(const Exponent& a, const Rational& c, Prime p) {
  Point pt;
  pt.reserve(a.size() + 1);
  for (auto x : a) pt.emplace_back(x);
  pt.emplace_back(ord_p_finite(c, p));
  return pt;
}

void require_square(const SparseSystem& system) {
  if (!system.is_square()) throw InvalidParameter("operation requires a square system (k = n)");
}

using Constraint = std::pair<RationalVector, Rational>;  // a·s >= b

// Fourier-Motzkin feasibility of { a·s >= b }.
bool feasible(std::vector<Constraint> cons, std::size_t nvars) {
  for (std::size_t var = nvars; var-- > 0;) {
    std::map<RationalVector, Rational> next;
    auto keep = [&next](RationalVector a, Rational b) {
      Rational scale = 0;
      for (const auto& x : a)
        if (x != 0) {
          scale = abs(x);
          break;
        }
      if (scale != 0) {
        for (auto& x : a) x /= scale;
        b /= scale;
      }
      auto [it, inserted] = next.try_emplace(std::move(a), b);
      if (!inserted && b > it->second) it->second = b;
    };
    std::vector<const Constraint*> pos, neg;
    for (const auto& c : cons) {
      int s = sgn(c.first[var]);
      if (s > 0) {
        pos.push_back(&c);
      } else if (s < 0) {
        neg.push_back(&c);
      } else {
        keep(c.first, c.second);
      }
    }
    for (const auto* pc : pos) {
      for (const auto* nc : neg) {
        Rational wp = -nc->first[var];
        Rational wn = pc->first[var];
        RationalVector a(nvars);
        for (std::size_t j = 0; j < nvars; ++j) a[j] = wp * pc->first[j] + wn * nc->first[j];
        a[var] = 0;
        keep(std::move(a), wp * pc->second + wn * nc->second);
      }
    }
    cons.clear();
    for (auto& [a, b] : next) {
      bool zero = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
      if (zero) {
        if (b > 0) return false;
      } else {
        cons.emplace_back(a, b);
      }
    }
  }
  return true;
}

std::string describe(const Exponent& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

Polytope newton_polytope(const SparsePolynomial& f, Prime p) {
  if (f.is_zero()) throw InvalidParameter("Newton polytope of the zero polynomial");
  std::vector<Point> pts;
  for (const auto& [a, c] : f.terms()) pts.push_back(lift(a, c, p));
  return convex_hull(pts);
}

Polytope sigma_hat(const SparseSystem& system, Prime p) {
  if (system.k() < system.n()) throw InvalidParameter("sigma_hat requires k >= n");
  if (system.k() > system.n()) {
    SparsePolynomial sum(system.n());
    for (const auto& f : system.polynomials()) sum += f;
    if (sum.is_zero()) throw InvalidParameter("the polynomials sum to zero; sigma_hat is undefined");
    return newton_polytope(sum, p);
  }
  Polytope acc = newton_polytope(system[0], p);
  for (std::size_t i = 1; i < system.k(); ++i) acc = minkowski_sum(acc, newton_polytope(system[i], p));
  return acc;
}

std::size_t facet_count(const SparseSystem& system, Prime p) {
  return lower_facets(sigma_hat(system, p)).size();
}

Integer smirnov_bound(const SparseSystem& system, Prime p, const RationalVector& r) {
  require_square(system);
  if (r.size() != system.n()) throw InvalidParameter("valuation vector has wrong length");
  Point w(r.begin(), r.end());
  w.emplace_back(1);
  std::vector<Polytope> faces;
  for (const auto& f : system.polynomials()) faces.push_back(project_pi(face(newton_polytope(f, p), w)));
  Rational mv = mixed_volume(faces);
  if (mv.get_den() != 1) throw InternalError("non-integral mixed volume of lattice polytopes");
  return mv.get_num();
}

std::vector<RationalVector> candidate_valuations(const SparseSystem& system, Prime p) {
  require_square(system);
  std::vector<RationalVector> out;
  for (const auto& lf : lower_facets(sigma_hat(system, p))) {
    RationalVector r(lf.normal.normal.begin(), lf.normal.normal.end() - 1);
    if (smirnov_bound(system, p, r) > 0) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SparseSystem shift_system(const SparseSystem& system) {
  if (system.n() > kShiftMaxVars)
    throw CapExceeded("shift_system supports at most " + std::to_string(kShiftMaxVars) + " variables");
  std::vector<SparsePolynomial> out;
  for (const auto& f0 : system.polynomials()) {
    // clear negative exponents only
    Exponent shift = f0.min_exponents();
    for (auto& x : shift) x = std::max(0L, -x);
    SparsePolynomial f = SparsePolynomial::monomial(shift, 1) * f0;
    if (f.total_degree() > kShiftMaxDegree)
      throw CapExceeded("shift_system supports total degree at most " + std::to_string(kShiftMaxDegree));
    std::size_t n = f.nvars();
    Exponent box(n);
    for (std::size_t i = 0; i < n; ++i) box[i] = f.degree_in(i);
    SparsePolynomial g(n);
    Exponent t(n, 0);
    // b_t = sum_a c_a prod_i binom(a_i, t_i) over the box prod [0, D_i].
    while (true) {
      Rational b = 0;
      for (const auto& [a, c] : f.terms()) {
        Integer prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= binomial(a[i], t[i]);
        if (prod != 0) b += c * prod;
      }
      g.add_term(t, b);
      std::size_t i = 0;
      while (i < n && t[i] == box[i]) t[i++] = 0;
      if (i == n) break;
      ++t[i];
    }
    out.push_back(std::move(g));
  }
  return SparseSystem(system.n(), std::move(out));
}

Expr simplex_radius(long m, const RationalVector& r, Prime p) {
  if (m < 2) throw InvalidParameter("simplex radius needs m >= 2");
  if (r.empty()) throw InvalidParameter("empty r");
  Rational sum = 0, prod = 1;
  for (const auto& x : r) {
    if (x <= 0) throw InvalidParameter("every r_i must be positive");
    sum += x;
    prod *= x;
  }
  auto n = static_cast<unsigned>(r.size());
  Expr mm1 = Expr::constant(m - 1);
  Expr lnp = Expr::ln(Expr::constant(p.value()));
  Expr arg = Expr::pow(mm1, n) / (Expr::constant(prod) * Expr::pow(lnp, n));
  return Expr::euler_c() * mm1 * (Expr::constant(sum) + Expr::log_base(arg, p.value()));
}

ScaledSimplex::ScaledSimplex(long m, RationalVector r, Prime p, int digits)
    : m_(m), r_(std::move(r)), p_(p), radius_(eval_up(simplex_radius(m, r_, p), digits)) {}

bool ScaledSimplex::contains(const RationalVector& t) const {
  if (t.size() != r_.size()) throw InvalidParameter("point has wrong dimension");
  for (const auto& x : t)
    if (x < 0) return false;
  return radius_.dominates(dot(r_, t));
}

bool ScaledSimplex::borderline(const RationalVector& t, double rel) const {
  return radius_.near(dot(r_, t), rel);
}

std::vector<Exponent> w_region_support(const SparsePolynomial& g, Prime p, const RationalVector& r) {
  std::size_t n = g.nvars();
  if (r.size() != n) throw InvalidParameter("r has wrong length");
  Polytope newt = newton_polytope(g, p);
  std::vector<Exponent> out;
  for (const auto& [t, b] : g.terms()) {
    Rational vt = ord_p_finite(b, p);
    std::vector<Constraint> cons;
    for (const auto& u : newt.vertices()) {
      RationalVector a(n);
      for (std::size_t j = 0; j < n; ++j) a[j] = u[j] - t[j];
      cons.emplace_back(std::move(a), vt - u[n]);
    }
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector a(n, Rational(0));
      a[j] = 1;
      cons.emplace_back(std::move(a), r[j]);
    }
    if (feasible(std::move(cons), n)) out.push_back(t);
  }
  return out;
}

ContainmentReport containment_check(const SparseSystem& system, Prime p, const RationalVector& r) {
  if (r.size() != system.n()) throw InvalidParameter("r has wrong length");
  for (const auto& x : r)
    if (x <= 0) throw InvalidParameter("containment_check needs r > 0");
  SparseSystem shifted = shift_system(system);
  ContainmentReport report;
  for (std::size_t i = 0; i < system.k(); ++i) {
    auto mi = static_cast<long>(system[i].term_count());
    if (mi <= 1) continue;
    ScaledSimplex simplex(mi, r, p);
    for (const auto& t : w_region_support(shifted[i], p, r)) {
      ++report.points_checked;
      RationalVector tq(t.begin(), t.end());
      std::string where = "g_" + std::to_string(i + 1) + " at " + describe(t);
      if (!simplex.contains(tq)) {
        report.holds = false;
        report.violations.push_back(where);
      } else if (simplex.borderline(tq)) {
        report.borderline.push_back(where);
      }
    }
  }
  return report;
}

}  // namespace fewroots
