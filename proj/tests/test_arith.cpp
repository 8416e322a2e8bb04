#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fewroots/arith.hpp"
#include "fewroots/errors.hpp"
#include "fewroots/upreal.hpp"
#include "test_helpers.hpp"

using namespace fewroots;
using testing_util::encloses;
using testing_util::parse_decimal;
using testing_util::random_rational;
using testing_util::upper_in;

namespace {

// Exponent of p in a nonzero machine integer, by repeated division.
long naive_ord(long x, long p) {
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("5") == 5);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("rational arithmetic round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    Rational a = random_rational(rng, 1000000, 1000000);
    Rational c = random_rational(rng, 1000000, 1000000);
    CHECK((a + c) - c == a);
    CHECK(parse_rational(to_string(a)) == a);
    CHECK(a.get_den() > 0);
  }
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(Prime(4), InvalidParameter);
  CHECK_THROWS_AS(Prime(1), InvalidParameter);
  CHECK_THROWS_AS(Prime(-3), InvalidParameter);
}

TEST_CASE("valuation examples") {
  CHECK(ord_p(Rational(8), Prime(2)) == ExtendedValuation(Rational(3)));
  CHECK(ord_p(Rational(3, 4), Prime(2)) == ExtendedValuation(Rational(-2)));
  CHECK(ord_p(Rational(0), Prime(5)).is_infinite());
  CHECK(ord_p(Rational(0), Prime(5)).to_string() == "inf");
  CHECK(ord_p_finite(Rational(50, 3), Prime(5)) == 2);
  CHECK_THROWS(ord_p(Integer(0), Prime(2)));
}

TEST_CASE("extended valuations") {
  auto inf = ExtendedValuation::infinity();
  ExtendedValuation two(Rational(2));
  CHECK((inf + two).is_infinite());
  CHECK((two + ExtendedValuation(Rational(1, 2))) == ExtendedValuation(Rational(5, 2)));
  CHECK(min(inf, two) == two);
  CHECK(min(two, inf) == two);
  CHECK(two < inf);
  CHECK(ExtendedValuation(Rational(-1)) < two);
  CHECK(two.to_string() == "2");
}

TEST_CASE("valuation properties on random pairs") {
  std::mt19937_64 rng(7);
  for (long pv : {2L, 3L, 5L, 7L}) {
    Prime p(pv);
    for (int i = 0; i < 2500; ++i) {
      Rational x = random_rational(rng, 5000, 5000);
      Rational y = random_rational(rng, 5000, 5000);
      if (x == 0 || y == 0) continue;
      CHECK(ord_p(x * y, p) == ord_p(x, p) + ord_p(y, p));
      CHECK(ord_p(x + y, p) >= min(ord_p(x, p), ord_p(y, p)));
      long num = x.get_num().get_si(), den = x.get_den().get_si();
      CHECK(ord_p_finite(x, p) == naive_ord(num, pv) - naive_ord(den, pv));
    }
  }
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("logarithms against reference digits") {
  // 25 digits each
  struct Ref {
    long arg;
    const char* value;
  };
  for (auto [arg, value] : {Ref{2, "0.6931471805599453094172321"}, Ref{3, "1.0986122886681096913952452"},
                            Ref{5, "1.6094379124341003746007593"}}) {
    UpperReal v = eval_up(Expr::ln(Expr::constant(arg)));
    Rational ref = parse_decimal(value);
    Rational eps(1, 100000000);
    eps /= Rational(1000000000000L);  // 1e-20
    CHECK(upper_in(v, ref - eps, ref + eps));
    CHECK(v.to_decimal(20).substr(0, 12) == std::string(value).substr(0, 12));
  }
}

TEST_CASE("eval_up examples") {
  UpperReal one = eval_up(Expr::log_base(Expr::constant(2), 2));
  CHECK(one.floor() == 1);
  CHECK(testing_util::upper_in(one, 1, 1));
  CHECK(eval_up(Expr::log_base(Expr::constant(8), 2)).to_decimal(5) == "3");
  UpperReal c = eval_up(Expr::euler_c());
  CHECK(upper_in(c, Rational(158197, 100000), Rational(158198, 100000)));
  // ln(4 / ln 2) / ln 2 = 2.528766...
  UpperReal l = eval_up(Expr::log_base(Expr::constant(4) / Expr::ln(Expr::constant(2)), 2));
  CHECK(upper_in(l, Rational(252862, 100000), Rational(252882, 100000)));
  CHECK(l.guaranteed_upper());
}

TEST_CASE("eval_up precision and rounding direction") {
  Expr e = Expr::pow(Expr::euler_c() * Expr::log_base(Expr::constant(Rational(7, 3)), 3), 4);
  UpperReal v = eval_up(e, 30);
  mpfr_t width;
  mpfr_init2(width, 256);
  mpfr_sub(width, v.enclosure().hi().get(), v.enclosure().lo().get(), MPFR_RNDU);
  mpfr_div(width, width, v.enclosure().hi().get(), MPFR_RNDU);
  CHECK(mpfr_cmp_d(width, 1e-20) < 0);
  mpfr_clear(width);
  CHECK(v.dominates(Rational(0)));
  // exact rationals are exact
  UpperReal q = UpperReal::exact(Rational(1, 3));
  CHECK(encloses(q, Rational(1, 3)));
  CHECK_THROWS_AS(eval_up(Expr::constant(1), 10), InvalidParameter);
}

TEST_CASE("eval_up rejects nonpositive log arguments") {
  CHECK_THROWS_AS(eval_up(Expr::ln(Expr::constant(0))), InvalidParameter);
  CHECK_THROWS_AS(eval_up(Expr::log_base(Expr::constant(-2), 3)), InvalidParameter);
  CHECK_THROWS_AS(eval_up(Expr::constant(1) / Expr::constant(0)), InvalidParameter);
}

TEST_CASE("eval_up is monotone in positive subterms") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(1, 1000);
  for (int i = 0; i < 200; ++i) {
    Rational a(dist(rng), 17), b(dist(rng), 13), bump(dist(rng), 1000);
    auto build = [](const Rational& x, const Rational& y) {
      return Expr::pow(Expr::euler_c() * (Expr::constant(x) + Expr::log_base(Expr::constant(y) + Expr::constant(2), 2)), 2) /
             Expr::constant(y + 1);
    };
    UpperReal base = eval_up(build(a, b));
    UpperReal larger = eval_up(build(a + bump, b));
    CHECK(mpfr_cmp(larger.enclosure().hi().get(), base.enclosure().hi().get()) >= 0);
  }
}

TEST_CASE("decimal rendering") {
  CHECK(UpperReal::exact(Rational(5)).to_decimal(10) == "5");
  CHECK(UpperReal::exact(Rational(1, 4)).to_decimal(10) == "0.25");
  std::string third = UpperReal::exact(Rational(1, 3)).to_decimal(10);
  CHECK(third == "0.3333333334");
}

TEST_CASE("expression rendering keeps grouping") {
  Expr a = Expr::constant(2), b = Expr::constant(3);
  CHECK((a / (b * a)).to_string() == "2/(3*2)");
  CHECK((a / (b / a)).to_string() == "2/(3/2)");
  CHECK((a * (b / a)).to_string() == "2*(3/2)");
  CHECK((a / b * a).to_string() == "2/3*2");
  CHECK((Expr::constant(1) / Expr::constant(Rational(3, 4))).to_string() == "1/(3/4)");
  CHECK(Expr::log_base(a + b, 2).to_string() == "log_2((2 + 3))");
}
