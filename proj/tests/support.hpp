#pragma once

#include <random>

#include "qcb/poly.hpp"

namespace testsupport {

// Random sparse polynomial with small integer coefficients.
inline qcb::Poly random_poly(std::mt19937_64& rng, int nz, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, maxdeg);
  qcb::Poly p(nz);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> e(nz + 1, 0);
    int d = deg(rng);
    std::uniform_int_distribution<int> var(0, nz);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    p += qcb::Poly::from_terms(nz, 0, {{e, qcb::Rat(coef(rng))}});
  }
  return p;
}

}  // namespace testsupport
