#pragma once

#include <random>

#include "phasespace/symweyl.hpp"

namespace phasespace {

/// Random polynomial of total degree <= max_degree with small rational
/// coefficients num/den, num in [-5,5], den in [1,4].  About half the
/// monomials are dropped so sparse shapes show up too.
inline PolySymbol random_poly(std::mt19937_64& rng, int max_degree, bool real = true) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), coin(0, 1);
  PolySymbol A;
  for (int d = 0; d <= max_degree; ++d)
    for (int m = 0; m <= d; ++m) {
      if (coin(rng)) continue;
      Rational re(num(rng), den(rng));
      re.canonicalize();
      Rational im(0);
      if (!real) {
        im = Rational(num(rng), den(rng));
        im.canonicalize();
      }
      A.add(m, d - m, QComplex(re, im));
    }
  return A;
}

}  // namespace phasespace
