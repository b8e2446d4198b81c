#pragma once

// Random polynomial generator shared by the property tests.

#include <random>

#include "affcat/arith.hpp"

namespace affcat::testutil {

// A random polynomial in y, x1..xr with at most `max_terms` terms of total
// degree at most 3 (in variable count) and small rational coefficients.
inline GradedPoly random_poly(std::mt19937& rng, int r, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), var(0, r), deg(0, 3), num(-4, 4),
      den(1, 2);
  GradedPoly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponent e(static_cast<size_t>(r) + 1, 0);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[static_cast<size_t>(var(rng))];
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    p += GradedPoly::monomial(e, c);
  }
  return p;
}

}  // namespace affcat::testutil
