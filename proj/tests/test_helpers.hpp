#pragma once

#include "fewroots/arith.hpp"
#include "fewroots/upreal.hpp"

#include <mpfr.h>

#include <random>
#include <string>

namespace testing_util {

using fewroots::Rational;

inline Rational parse_decimal(const std::string& s) {
  std::string digits;
  long scale = 0;
  bool after = false;
  for (char c : s) {
    if (c == '.') {
      after = true;
    } else {
      digits += c;
      if (after) ++scale;
    }
  }
  fewroots::Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  Rational q(fewroots::Integer(digits, 10), den);
  q.canonicalize();
  return q;
}

/// Upper end of the enclosure lies within [lo, hi].
inline bool upper_in(const fewroots::UpperReal& x, const Rational& lo, const Rational& hi) {
  const auto* h = x.enclosure().hi().get();
  return mpfr_cmp_q(h, lo.get_mpq_t()) >= 0 && mpfr_cmp_q(h, hi.get_mpq_t()) <= 0;
}

/// Enclosure [lo, hi] contains q.
inline bool encloses(const fewroots::UpperReal& x, const Rational& q) {
  return mpfr_cmp_q(x.enclosure().lo().get(), q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(x.enclosure().hi().get(), q.get_mpq_t()) >= 0;
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace testing_util
