#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewroots/bounds.hpp"
#include "fewroots/errors.hpp"
#include "fewroots/io.hpp"
#include "fewroots/polyhedra.hpp"
#include "reference_eval.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace fewroots;
using testing_util::upper_in;

namespace {

bool agrees(const BoundReport& rep, const reference::Real& ref) {
  // hi is an upper bound within 1e-25 of the reference value
  reference::Real hi(rep.raw.to_decimal(40));
  reference::Real tol = boost::multiprecision::abs(ref) * reference::Real("1e-25") + reference::Real("1e-40");
  return hi >= ref - tol && hi - ref <= tol;
}

bool hi_le(const BoundReport& a, const BoundReport& b) {
  return mpfr_cmp(a.raw.enclosure().hi().get(), b.raw.enclosure().hi().get()) <= 0;
}

Rational rand_r(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 20), den(1, 10);
  return Rational(num(rng)) / Rational(den(rng));
}

}  // namespace

TEST_CASE("u(m, n)") {
  CHECK(u(5, 2) == 64);
  CHECK(u(2, 1) == 1);
  CHECK(u(4, 3) == 216);
  CHECK(u(7, 1) == 6);
  CHECK_THROWS_AS(u(1, 2), InvalidParameter);
  CHECK_THROWS_AS(u(3, 0), InvalidParameter);
}

TEST_CASE("field specs") {
  auto fs = FieldSpec::local(Prime(3), 2, 3);
  CHECK(fs.d() == 6);
  CHECK(fs.q() == 27);
  CHECK(fs.e() <= fs.d());
  CHECK(fs.q() <= 729);
  CHECK(FieldSpec::local(Prime(2), 4, 2, 2).q() == 4);
  CHECK_THROWS_AS(FieldSpec::local(Prime(2), 4, 3, 1), InvalidParameter);
  CHECK_THROWS_AS(FieldSpec::local(Prime(2), 0, 1), InvalidParameter);
  CHECK_THROWS_AS(FieldSpec::global(0, 1), InvalidParameter);
  CHECK(FieldSpec::global(2, 3).delta() == 3);
  CHECK(FieldSpec::global(2, 3).kind() == FieldSpec::Kind::kGlobal);
}

TEST_CASE("general C_p") {
  Prime two(2);
  auto zero = c_p_general(2, {1, 1}, two);
  CHECK(zero.integer_bound == 0);
  CHECK(zero.formula_id == FormulaId::kThm2General);
  auto rep = c_p_general(3, {1}, two);
  CHECK(rep.integer_bound == 8);
  CHECK(upper_in(rep.raw, Rational(8), Rational(8002, 1000)));
  CHECK_THROWS_AS(c_p_general(3, RationalVector{Rational(0)}, two), InvalidParameter);
  CHECK_THROWS_AS(c_p_general(3, RationalVector{Rational(-1, 2)}, two), InvalidParameter);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    long p = std::vector<long>{2, 3, 5, 7}[static_cast<std::size_t>(trial % 4)];
    std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    long m = static_cast<long>(n) + 1 + trial % 5;
    RationalVector r;
    for (std::size_t i = 0; i < n; ++i) r.push_back(rand_r(rng));
    CHECK(agrees(c_p_general(m, r, Prime(p)), reference::cp_general(m, r, p)));
  }
}

TEST_CASE("per-equation C_p") {
  Prime two(2);
  auto rep = c_p_per_equation({3, 3}, {1, 1}, two);
  CHECK(upper_in(rep.raw, Rational(25605, 100), Rational(25606, 100)));
  CHECK(c_p_per_equation({3, 1}, {1, 1}, two).integer_bound == 0);
  CHECK_THROWS_AS(c_p_per_equation({3}, {1, 1}, two), InvalidParameter);

  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> mm(2, 9);
  for (int trial = 0; trial < 100; ++trial) {
    long p = std::vector<long>{2, 3, 5}[static_cast<std::size_t>(trial % 3)];
    std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    RationalVector r;
    std::vector<long> ms;
    for (std::size_t i = 0; i < n; ++i) {
      r.push_back(rand_r(rng));
      ms.push_back(mm(rng));
    }
    CHECK(agrees(c_p_per_equation(ms, r, Prime(p)), reference::cp_per_equation(ms, r, p)));
    // equal term counts: per-equation and general forms coincide
    long m = static_cast<long>(n) + 1 + trial % 4;
    auto a = c_p_per_equation(std::vector<long>(n, m), r, Prime(p));
    auto b = c_p_general(m, r, Prime(p));
    CHECK(a.raw.near(testing_util::parse_decimal(b.raw.to_decimal(40)), 1e-25));
  }
}

TEST_CASE("local bound from term count") {
  auto q2 = FieldSpec::local(Prime(2), 1, 1);
  CHECK(local_bound_thm1(q2, 3, 3, 3).integer_bound == 0);
  CHECK(local_bound_thm1(q2, 3, 3, 5).integer_bound == 0);
  CHECK(local_bound_thm1(q2, 5, 2, 1).integer_bound == 0);
  auto ex = local_bound_thm1(q2, 5, 2, 2);
  double rel = std::abs(ex.integer_bound.get_d() - 127645.0) / 127645.0;
  CHECK(rel <= 1e-3);
  CHECK(agrees(ex, reference::thm1_local(2, 1, 5, 2)));

  auto q3 = FieldSpec::local(Prime(3), 1, 1);
  auto small = local_bound_thm1(q3, 2, 1, 1);
  CHECK(small.raw.approx() > 0);
  CHECK(agrees(small, reference::thm1_local(3, 1, 2, 1)));

  for (long p : {2L, 3L, 5L})
    for (long d : {1L, 2L, 3L})
      for (long m = 2; m <= 6; ++m)
        for (long n = 1; n < m && n <= 3; ++n) {
          auto fs = FieldSpec::local(Prime(p), d, 1, d);
          CHECK(agrees(local_bound_thm1(fs, m, n, n), reference::thm1_local(p, d, m, n)));
        }
  CHECK_THROWS_AS(local_bound_thm1(FieldSpec::global(1, 1), 3, 1, 1), InvalidParameter);
}

TEST_CASE("trinomial bound over Q_2 is at least six") {
  auto b = local_bound_thm1(FieldSpec::local(Prime(2), 1, 1), 3, 1, 1);
  CHECK(b.integer_bound >= 6);
}

TEST_CASE("refined local bound") {
  auto q2 = FieldSpec::local(Prime(2), 1, 1);
  auto rep = local_bound_cor2_1(9, 5, 2, 2, std::vector<long>{3, 3}, q2);
  CHECK(rep.integer_bound >= 2303);
  CHECK(rep.integer_bound <= 2305);
  CHECK(rep.notes.front() == "C_p form: per-equation");
  for (long mu = 4; mu <= 8; ++mu) {
    auto r = local_bound_cor2_1(static_cast<std::size_t>(6 * mu), mu + 2, 2, 2, std::vector<long>{3, mu}, q2);
    double target = 304.0 * (mu - 1) * mu * (1 + std::log2((mu - 1) / 0.693));
    CHECK(std::abs(r.raw.approx() - target) <= 0.01 * target);
  }
  auto general = local_bound_cor2_1(9, 5, 2, 2, std::vector<long>{3, 3}, q2, CpForm::kGeneral);
  CHECK(general.notes.front() == "C_p form: general");
  CHECK(agrees(general, 9 * reference::cp_general(5, {1, 1}, 2)));
  // ramified and unramified parameters
  auto ram = FieldSpec::local(Prime(3), 2, 1);
  auto r2 = local_bound_cor2_1(4, 4, 2, 3, std::nullopt, ram);
  CHECK(agrees(r2, 16 * reference::cp_general(4, {Rational(1, 2), Rational(1, 2)}, 3)));
  auto unr = FieldSpec::local(Prime(3), 1, 2);
  auto r3 = local_bound_cor2_1(4, 4, 2, 2, std::vector<long>{2, 3}, unr);
  CHECK(agrees(r3, 4 * 64 * reference::cp_per_equation({2, 3}, {1, 1}, 3)));
  // zero cases
  CHECK(local_bound_cor2_1(3, 2, 2, 2, std::nullopt, q2).integer_bound == 0);
  CHECK(local_bound_cor2_1(3, 4, 2, 1, std::nullopt, q2).integer_bound == 0);
  CHECK(local_bound_cor2_1(3, 4, 2, 2, std::vector<long>{1, 4}, q2).integer_bound == 0);
}

TEST_CASE("refined local bound from a system") {
  auto q2 = FieldSpec::local(Prime(2), 1, 1);
  auto bin = parse_system_text("x1^2 - 4; x2^2 - 4");
  auto rep = local_bound_cor2_1(bin, q2);
  CHECK(agrees(rep, reference::cp_per_equation({2, 2}, {1, 1}, 2)));
  CHECK(rep.integer_bound >= 4);
  auto over = parse_system_text("x1 - 1; x1^2 - 1; x1^3 - 1");
  CHECK(local_bound_cor2_1(over, q2).notes.front() == "C_p form: general");
}

TEST_CASE("global bound from term count") {
  auto g = FieldSpec::global(1, 1);
  CHECK(global_bound_thm1(g, 2, 2, 2).integer_bound == 0);
  auto rep = global_bound_thm1(g, 3, 1, 1);
  CHECK(std::abs(rep.raw.approx() - 102.7) < 0.1);
  CHECK(agrees(rep, reference::thm1_global(1, 1, 3, 1)));
  bool noted = false;
  for (const auto& n : rep.notes) noted |= n.find("k >= n") != std::string::npos;
  CHECK(noted);
  for (long d = 1; d <= 2; ++d)
    for (long delta = 1; delta <= 2; ++delta)
      for (long m = 2; m <= 5; ++m)
        for (long n = 1; n < m && n <= 3; ++n)
          CHECK(agrees(global_bound_thm1(FieldSpec::global(d, delta), m, n, n), reference::thm1_global(d, delta, m, n)));
}

TEST_CASE("global refined bound") {
  auto single = global_bound_cor3_1(3, 4, 2, 2, 1, 1);
  CHECK(agrees(single, 3 * reference::cp_general(4, {1, 1}, 2)));
  auto two_terms = global_bound_cor3_1(2, 3, 1, 1, 1, 2);
  auto expected = 2 * (reference::cp_general(3, {Rational(1, 4)}, 2) + 3 * reference::cp_general(3, {Rational(1, 2)}, 2));
  CHECK(agrees(two_terms, expected));
  CHECK(global_bound_cor3_1(2, 2, 2, 2, 1, 1).integer_bound == 0);
  CHECK(global_bound_cor3_1(2, 4, 2, 1, 1, 1).integer_bound == 0);
  auto sys = parse_system_text("3*x1^10 + x1^2 - 4");
  auto from_sys = global_bound_cor3_1(sys, 1, 1);
  CHECK(agrees(from_sys, 2 * reference::cp_general(3, {1}, 2)));
}

TEST_CASE("refined global bound never exceeds the term-count bound") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> dd(1, 3), mm(2, 7), nn(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    long d = dd(rng), delta = dd(rng), n = nn(rng), m = n + mm(rng) - 1;
    auto facets = static_cast<std::size_t>(u(m, n).get_ui());
    auto refined = global_bound_cor3_1(facets, m, n, n, d, delta);
    auto thm = global_bound_thm1(FieldSpec::global(d, delta), m, n, n);
    CHECK_MESSAGE(hi_le(refined, thm), "d=", d, " delta=", delta, " m=", m, " n=", n);
  }
}

TEST_CASE("affine bounds") {
  auto q2 = FieldSpec::local(Prime(2), 1, 1);
  auto one = affine_bound(FormulaId::kThm1Local, q2, 4, 1);
  auto b1 = local_bound_thm1(q2, 4, 1, 1);
  CHECK(agrees(one.exact_sum, reference::thm1_local(2, 1, 4, 1) + 1));
  CHECK(agrees(one.relaxation, 2 * reference::thm1_local(2, 1, 4, 1) + 1));
  CHECK(b1.integer_bound + 1 <= one.exact_sum.integer_bound);
  auto trivial = affine_bound(FormulaId::kThm1Local, q2, 1, 3);
  CHECK(trivial.exact_sum.integer_bound == 1);
  CHECK(trivial.relaxation.integer_bound == 1);
  auto ex = affine_bound(FormulaId::kThm1Local, q2, 5, 2);
  CHECK(mpfr_cmp(ex.exact_sum.raw.enclosure().hi().get(), ex.relaxation.raw.enclosure().lo().get()) < 0);
  auto expected = 1 + 2 * reference::thm1_local(2, 1, 5, 1) + reference::thm1_local(2, 1, 5, 2);
  CHECK(agrees(ex.exact_sum, expected));
  auto glob = affine_bound(FormulaId::kThm1Global, FieldSpec::global(1, 2), 4, 2);
  CHECK(agrees(glob.relaxation, 1 + 4 * reference::thm1_global(1, 2, 4, 2)));
  // fewer terms than variables: torus bounds vanish for j >= m but not below
  auto thin = affine_bound(FormulaId::kThm1Local, q2, 2, 2);
  CHECK(agrees(thin.exact_sum, 1 + 2 * reference::thm1_local(2, 1, 2, 1)));
  CHECK(agrees(thin.relaxation, 1 + 4 * reference::thm1_local(2, 1, 2, 1)));
  for (long m = 1; m <= 5; ++m)
    for (long n = 1; n <= 3; ++n)
      for (auto base : {FormulaId::kThm1Local, FormulaId::kThm1Global}) {
        auto fs = base == FormulaId::kThm1Local ? q2 : FieldSpec::global(1, 1);
        auto ab = affine_bound(base, fs, m, n);
        CHECK(hi_le(ab.exact_sum, ab.relaxation));
        CHECK(ab.exact_sum.integer_bound >= 1);
      }
  CHECK_THROWS_AS(affine_bound(FormulaId::kCor21, q2, 4, 2), InvalidParameter);
  CHECK_THROWS_AS(affine_bound(FormulaId::kThm1Global, q2, 4, 2), InvalidParameter);
}

TEST_CASE("inequality checker") {
  auto ex = lemma_ineq_holds({1}, {1}, 2, Prime(2));
  CHECK(ex.hypothesis);
  CHECK(ex.conclusion);
  CHECK_FALSE(ex.violated());
  // far outside the hypothesis region
  auto vac = lemma_ineq_holds({1}, {1000}, 2, Prime(2));
  CHECK_FALSE(vac.hypothesis);
  CHECK_FALSE(vac.violated());
  CHECK_THROWS_AS(lemma_ineq_holds({1}, RationalVector{Rational(0)}, 2, Prime(2)), InvalidParameter);
  CHECK_THROWS_AS(lemma_ineq_holds({1}, {1}, 1, Prime(2)), InvalidParameter);

  std::mt19937_64 rng(34);
  std::uniform_int_distribution<long> num(1, 5000), mm(2, 10), nn(1, 3), pp(0, 2);
  int hyp = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = static_cast<std::size_t>(nn(rng));
    RationalVector r, t;
    for (std::size_t i = 0; i < n; ++i) {
      r.push_back(Rational(num(rng)) / 100);
      t.push_back(Rational(num(rng)) / 100);
    }
    long p = std::vector<long>{2, 3, 5}[static_cast<std::size_t>(pp(rng))];
    auto res = lemma_ineq_holds(r, t, mm(rng), Prime(p));
    hyp += res.hypothesis;
    CHECK_FALSE(res.violated());
  }
  CHECK(hyp > 0);
}

TEST_CASE("C_p reports do not increase along the r grid") {
  const Rational grid[] = {Rational(1, 16), Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)};
  for (long p : {2L, 3L, 5L}) {
    for (std::size_t n = 1; n <= 2; ++n) {
      long m = static_cast<long>(n) + 2;
      std::vector<long> ms(n, m);
      ms[0] = m + 1;
      RationalVector base(n, Rational(1, 4));
      for (std::size_t coord = 0; coord < n; ++coord) {
        for (int g = 0; g + 1 < 5; ++g) {
          RationalVector lo = base, hi = base;
          lo[coord] = grid[g];
          hi[coord] = grid[g + 1];
          CHECK(hi_le(c_p_general(m, hi, Prime(p)), c_p_general(m, lo, Prime(p))));
          CHECK(hi_le(c_p_per_equation(ms, hi, Prime(p)), c_p_per_equation(ms, lo, Prime(p))));
        }
      }
      // doubling every coordinate from r <= 1/2
      RationalVector r(n, Rational(1, 2)), r2(n, Rational(1));
      CHECK(hi_le(c_p_general(m, r2, Prime(p)), c_p_general(m, r, Prime(p))));
    }
  }
}

TEST_CASE("per-equation C_p agrees with the mixed volume of scaled simplices") {
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<long> num(1, 15);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    RationalVector r, lambda;
    Rational closed = 1;
    for (std::size_t i = 0; i < n; ++i) {
      r.push_back(Rational(num(rng)) / Rational(num(rng)));
      lambda.push_back(Rational(num(rng)) / Rational(num(rng)));
    }
    for (std::size_t i = 0; i < n; ++i) closed *= lambda[i] / r[i];
    std::vector<Polytope> simplices;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Point> v{Point(n, Rational(0))};
      for (std::size_t j = 0; j < n; ++j) {
        Point e(n, Rational(0));
        e[j] = lambda[i] / r[j];
        v.push_back(e);
      }
      simplices.push_back(convex_hull(v));
    }
    CHECK(mixed_volume(simplices) == closed);
  }
}

TEST_CASE("report serialization") {
  auto rep = local_bound_thm1(FieldSpec::local(Prime(2), 1, 1), 5, 2, 2);
  Json j = to_json(rep);
  CHECK(j["formula_id"] == "thm1_local");
  CHECK(j["integer_bound"] == to_string(rep.integer_bound));
  CHECK(j["inputs"]["m"] == "5");
  CHECK(j["raw"].get<std::string>().rfind("127645.", 0) == 0);
  CHECK(j.contains("notes"));
  CHECK(to_string(FormulaId::kRemark11) == "remark1_1");
  CHECK(to_string(FormulaId::kThm2PerEquation) == "thm2_per_eq");
}
