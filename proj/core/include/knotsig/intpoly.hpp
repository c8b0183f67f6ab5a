#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "knotsig/error.hpp"

namespace knotsig {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

/// Dense univariate polynomial over Z. Coefficients are stored in ascending
/// degree with no trailing zeros; the zero polynomial is the empty vector.
class IntPoly {
public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, int deg);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const Int& leading() const;
  Int coeff(int i) const;  // 0 outside the stored range
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int operator()(const Int& x) const;
  Rat operator()(const Rat& x) const;
  int sign_at(const Rat& x) const;

  IntPoly derivative() const;
  Int content() const;             // gcd of coefficients, >= 0 (0 only for the zero polynomial)
  IntPoly primitive_part() const;  // content 1, leading coefficient > 0; zero stays zero
  int valuation() const;           // index of the lowest nonzero coefficient (0 for zero poly)
  IntPoly shifted_down(int k) const;  // exact division by t^k
  IntPoly reciprocal() const;         // coefficient sequence reversed (t^deg * p(1/t))

  std::string str(const std::string& var = "t") const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& c, const IntPoly& p);

  bool operator==(const IntPoly&) const = default;

private:
  void strip();
  std::vector<Int> coeffs_;
};

/// Exact division over Z[t]; returns false if `den` does not divide `num`.
bool try_divide(const IntPoly& num, const IntPoly& den, IntPoly& quot);

/// -rem(a, b) over Q, scaled to a primitive integer polynomial by a positive
/// rational; sign-exact (the Sturm chain step).
IntPoly sturm_negated_remainder(const IntPoly& a, const IntPoly& b);

/// Polynomial gcd over Q, returned primitive with positive leading coefficient.
IntPoly gcd_poly(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& p, unsigned e);

/// Taylor shift: p(t + c).
IntPoly shifted_arg(const IntPoly& p, const Int& c);

/// Total order: by degree, then lexicographic on ascending coefficients.
int compare(const IntPoly& a, const IntPoly& b);

/// Canonical representative of the +-t^k equivalence class: strip the t^k
/// factor, divide out the content, and make the leading coefficient positive.
/// Idempotent; requires p != 0.
IntPoly normalize_alexander(const IntPoly& p);

/// True iff the coefficient sequence is palindromic.
bool is_symmetric(const IntPoly& p);

/// True iff normalize_alexander(p) is symmetric with |p(1)| = 1.
bool is_alexander(const IntPoly& p);

/// For symmetric p of even degree 2d with p(+-1) != 0, the q of degree d with
/// p(t) = t^d q(t + 1/t). Roots of p on the unit circle biject with real roots
/// of q in (-2, 2). Throws odd_degree_symmetric for odd-degree input.
IntPoly trace_polynomial(const IntPoly& p);

/// Inverse substitution: t^deg(q) * q(t + 1/t).
IntPoly expand_trace(const IntPoly& q);

}  // namespace knotsig
