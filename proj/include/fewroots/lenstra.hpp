#pragma once

// d_m(t), generalized binomial coefficients and binomial-basis interpolation
// coefficients over a finite set of integers.

#include "fewroots/arith.hpp"

#include <vector>

namespace fewroots {

struct LcmProfile {
  long m;
  long t;
  /// lcm of all products of at most m pairwise distinct integers in [1, t].
  Integer value;
};

LcmProfile d_m(long m, long t);

/// prod_{i<t} (a - i) / (t - i); equals 1 for t = 0.
Rational gen_binomial(long a, long t);

struct GammaVector {
  std::vector<long> A;  // sorted
  long t;
  std::vector<Rational> coefficients;
};

/// Coefficients g_j with (a choose t) = sum_{j<|A|} g_j (a choose j) for all a in A.
GammaVector gamma(std::vector<long> A, long t);

}  // namespace fewroots
