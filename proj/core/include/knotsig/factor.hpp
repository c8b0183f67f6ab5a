#pragma once

#include <utility>
#include <vector>

#include "knotsig/intpoly.hpp"

namespace knotsig {

struct Factorization {
  Int content;  // signed; content * prod(factors[i]^exp[i]) == input exactly
  std::vector<std::pair<IntPoly, int>> factors;  // primitive, irreducible over Q, leading > 0,
                                                 // sorted by degree then ascending coefficients
};

/// Exact irreducible factorization over the rationals (Zassenhaus).
/// Throws search_exhausted above the degree cap.
Factorization factor(const IntPoly& p, int degree_cap = 64);

/// True iff the primitive part of p is irreducible over Q (degree >= 1).
bool is_irreducible(const IntPoly& p, int degree_cap = 64);

/// n-th cyclotomic polynomial, n >= 1.
IntPoly cyclotomic(int n);

}  // namespace knotsig
