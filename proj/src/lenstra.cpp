#include "fewroots/lenstra.hpp"

#include "fewroots/errors.hpp"

#include <algorithm>
#include <functional>

namespace fewroots {

LcmProfile d_m(long m, long t) {
  if (m < 0 || t < 0) throw InvalidParameter("d_m(t) needs m, t >= 0");
  Integer value = 1;
  if (m > 0 && t > 0) {
    for (long p = 2; p <= t; ++p) {
      if (!is_prime(p)) continue;
      std::vector<long> vals;
      for (long k = p; k <= t; k += p) {
        long v = 0;
        for (long x = k; x % p == 0; x /= p) ++v;
        vals.push_back(v);
      }
      std::sort(vals.begin(), vals.end(), std::greater<>());
      long e = 0;
      for (std::size_t i = 0; i < vals.size() && static_cast<long>(i) < m; ++i) e += vals[i];
      Integer pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
      value *= pe;
    }
  }
  return {m, t, value};
}

Rational gen_binomial(long a, long t) {
  if (t < 0) throw InvalidParameter("binomial index t must be >= 0");
  Rational out = 1;
  for (long i = 0; i < t; ++i) out *= Rational(a - i) / Rational(t - i);
  return out;
}

GammaVector gamma(std::vector<long> A, long t) {
  if (A.empty()) throw InvalidParameter("gamma needs a nonempty set A");
  if (t < 0) throw InvalidParameter("gamma needs t >= 0");
  std::sort(A.begin(), A.end());
  if (std::adjacent_find(A.begin(), A.end()) != A.end())
    throw InvalidParameter("elements of A must be distinct");
  const std::size_t m = A.size();
  std::vector<Rational> coeff(m, Rational(0));
  if (t < static_cast<long>(m)) {
    coeff[static_cast<std::size_t>(t)] = 1;
    return {A, t, coeff};
  }

  // Bareiss elimination on the augmented integer matrix [ (a choose j) | (a choose t) ].
  std::vector<std::vector<Integer>> M(m, std::vector<Integer>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) M[i][j] = gen_binomial(A[i], static_cast<long>(j)).get_num();
    M[i][m] = gen_binomial(A[i], t).get_num();
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    while (piv < m && M[piv][k] == 0) ++piv;
    if (piv == m) throw InternalError("singular binomial interpolation matrix");
    std::swap(M[k], M[piv]);
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j <= m; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  for (std::size_t ii = m; ii-- > 0;) {
    Rational s = Rational(M[ii][m]);
    for (std::size_t j = ii + 1; j < m; ++j) s -= Rational(M[ii][j]) * coeff[j];
    coeff[ii] = s / Rational(M[ii][ii]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < m; ++j) lhs += coeff[j] * gen_binomial(A[i], static_cast<long>(j));
    if (lhs != gen_binomial(A[i], t)) throw InternalError("gamma reconstruction failed");
  }
  return {A, t, coeff};
}

}  // namespace fewroots
