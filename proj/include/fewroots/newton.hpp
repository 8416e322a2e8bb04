#pragma once

// p-adic Newton machinery for sparse systems over Q.

#include "fewroots/polyhedra.hpp"
#include "fewroots/polynomial.hpp"
#include "fewroots/upreal.hpp"

#include <string>
#include <vector>

namespace fewroots {

inline constexpr std::size_t kShiftMaxVars = 3;
inline constexpr long kShiftMaxDegree = 30;

/// Conv{(a, ord_p c_a) : a in Supp(f)} in R^{n+1}.
Polytope newton_polytope(const SparsePolynomial& f, Prime p);

/// Newt_p(f_1 + ... + f_k) when k > n, Minkowski sum of the Newt_p(f_i) when k = n.
Polytope sigma_hat(const SparseSystem& system, Prime p);

/// Number of lower facets of sigma_hat.
std::size_t facet_count(const SparseSystem& system, Prime p);

/// All r such that (r, 1) is a lower facet normal of the Minkowski sum and the
/// projected face tuple has positive mixed volume. Requires k = n.
std::vector<RationalVector> candidate_valuations(const SparseSystem& system, Prime p);

/// Mixed volume of the projected faces with inner normal (r, 1). Requires k = n.
Integer smirnov_bound(const SparseSystem& system, Prime p, const RationalVector& r);

/// g_i(x) = f_i(1 + x) after clearing Laurent denominators.
SparseSystem shift_system(const SparseSystem& system);

/// c(m-1)[sum r_j + log_p((m-1)^n / (r_1...r_n log^n p))].
Expr simplex_radius(long m, const RationalVector& r, Prime p);

/// {t >= 0 : sum r_j t_j <= radius} with the radius evaluated upward.
class ScaledSimplex {
 public:
  ScaledSimplex(long m, RationalVector r, Prime p, int digits = kDefaultDigits);

  long m() const { return m_; }
  const RationalVector& r() const { return r_; }
  const UpperReal& radius() const { return radius_; }
  bool contains(const RationalVector& t) const;
  /// True when sum r_j t_j lies within `rel` of the radius.
  bool borderline(const RationalVector& t, double rel = 1e-15) const;

 private:
  long m_;
  RationalVector r_;
  Prime p_;
  UpperReal radius_;
};

/// Support points t of g for which (t, ord_p b_t) lies on a face of Newt_p(g)
/// with inner normal (s, 1) for some s >= r componentwise.
std::vector<Exponent> w_region_support(const SparsePolynomial& g, Prime p, const RationalVector& r);

struct ContainmentReport {
  bool holds = true;
  std::size_t points_checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> borderline;
};

/// Checks w(g_i, r) ∩ Supp(g_i) ⊆ S(m_i, n, r) for every i, with g = shift_system(F).
ContainmentReport containment_check(const SparseSystem& system, Prime p, const RationalVector& r);

}  // namespace fewroots
