#pragma once

// Closed-form root bounds for sparse systems over p-adic fields and number
// fields. Every bound is evaluated with outward rounding; `integer_bound` is
// the floor of the guaranteed upper value and is itself a valid bound on the
// (integer) root count.

#include "fewroots/newton.hpp"
#include "fewroots/upreal.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fewroots {

enum class FormulaId {
  kThm1Local,
  kThm1Global,
  kThm2General,
  kThm2PerEquation,
  kCor21,
  kCor31,
  kRemark11,
};

std::string to_string(FormulaId id);

/// Arithmetic context of a bound query.
class FieldSpec {
 public:
  enum class Kind { kLocal, kGlobal };

  /// Degree e*f extension of Q_p with ramification e and residue field of size p^f.
  static FieldSpec local(Prime p, long e, long f);
  /// Same, with the degree given explicitly; requires e*f = d.
  static FieldSpec local(Prime p, long d, long e, long f);
  /// Degree d number field, roots of degree <= delta.
  static FieldSpec global(long d, long delta, Prime p = Prime(2));

  Kind kind() const { return kind_; }
  Prime p() const { return p_; }
  long d() const { return d_; }
  long e() const { return e_; }
  long f() const { return f_; }
  const Integer& q() const { return q_; }
  long delta() const { return delta_; }

 private:
  FieldSpec(Kind kind, Prime p, long d, long e, long f, long delta);
  Kind kind_;
  Prime p_;
  long d_, e_, f_;
  Integer q_;
  long delta_;
};

struct BoundReport {
  FormulaId formula_id;
  UpperReal raw;
  Integer integer_bound;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> notes;
  std::string expression;  ///< empty for the zero cases
};

/// m-1, 4(m-1)^2, or (m(m-1)/2)^n according as n = 1, n = 2, n >= 3.
Integer u(long m, long n);

/// General bound on roots with ord_p(x_i - 1) >= r_i; n = r.size().
BoundReport c_p_general(long m, const RationalVector& r, Prime p, int digits = kDefaultDigits);
/// Per-equation refinement; m_list[i] is the term count of f_i, size n.
BoundReport c_p_per_equation(const std::vector<long>& m_list, const RationalVector& r, Prime p,
                             int digits = kDefaultDigits);

BoundReport local_bound_thm1(const FieldSpec& fs, long m, long n, long k, int digits = kDefaultDigits);
BoundReport global_bound_thm1(const FieldSpec& fs, long m, long n, long k, int digits = kDefaultDigits);

enum class CpForm { kAuto, kGeneral };

/// Facet-count refinement of the local bound from precomputed data. When
/// `term_counts` is set (k = n) and the form is kAuto, the per-equation C_p is used.
BoundReport local_bound_cor2_1(std::size_t facets, long m, long n, long k,
                               const std::optional<std::vector<long>>& term_counts,
                               const FieldSpec& fs, CpForm form = CpForm::kAuto,
                               int digits = kDefaultDigits);
BoundReport local_bound_cor2_1(const SparseSystem& system, const FieldSpec& fs,
                               CpForm form = CpForm::kAuto, int digits = kDefaultDigits);

/// Facet-count refinement of the global bound; the sum runs over j = 1..d*delta with p = 2.
BoundReport global_bound_cor3_1(std::size_t facets, long m, long n, long k, long d, long delta,
                                int digits = kDefaultDigits);
BoundReport global_bound_cor3_1(const SparseSystem& system, long d, long delta,
                                int digits = kDefaultDigits);

struct AffineBound {
  BoundReport exact_sum;   ///< 1 + sum_j binom(n, j) B_j
  BoundReport relaxation;  ///< 1 + 2^n B_n
};

/// Bound on roots with coordinates allowed to vanish; base is kThm1Local or kThm1Global.
AffineBound affine_bound(FormulaId base, const FieldSpec& fs, long m, long n,
                         int digits = kDefaultDigits);

struct InequalityCheck {
  bool hypothesis;  ///< true unless certainly false
  bool conclusion;  ///< true only if certainly true
  bool violated() const { return hypothesis && !conclusion; }
};

/// Both sides of the bracket inequality used to bound w(g, r); a property-test helper.
InequalityCheck lemma_ineq_holds(const RationalVector& r, const RationalVector& t, long m, Prime p,
                                 int digits = kDefaultDigits);

}  // namespace fewroots
