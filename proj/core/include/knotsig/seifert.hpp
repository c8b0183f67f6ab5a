#pragma once

#include <cstdint>
#include <vector>

#include "knotsig/circle.hpp"

namespace knotsig {

/// Integer Seifert matrix of a knot: square, with det(V - V^T) = 1 (which
/// forces even size). The 0x0 matrix is the unknot.
class SeifertMatrix {
public:
  SeifertMatrix() = default;

  /// Accepts iff the matrix is square with unimodular skew part.
  static SeifertMatrix validate(const std::vector<std::vector<Int>>& rows);
  static SeifertMatrix unknot() { return {}; }

  /// Library-internal builder for constructions that are valid by shape.
  static SeifertMatrix unchecked(int n, std::vector<Int> entries);

  int size() const { return n_; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  std::vector<std::vector<Int>> rows() const;

  bool operator==(const SeifertMatrix&) const = default;

private:
  int n_ = 0;
  std::vector<Int> e_;
};

/// det(V - tV^T) in normalize_alexander form.
IntPoly alexander(const SeifertMatrix& v);

/// Connected sum (block diagonal) and mirror (-V^T).
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix mirror(const SeifertMatrix& v);

/// V = C + N with C random symmetric (entries in [-bound, bound]) and N the
/// standard symplectic offset; deterministic per seed.
SeifertMatrix random_seifert(int genus, long entry_bound, std::uint64_t seed);

/// Exact real and imaginary parts of W(omega(s)) = (1-omega)V + (1-conj)V^T:
/// A = (1 - Re omega)(V + V^T), B = Im omega (V^T - V).
struct HermitianSample {
  int n = 0;
  std::vector<Rat> a;  // symmetric, row-major
  std::vector<Rat> b;  // skew-symmetric, row-major
  const Rat& A(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  const Rat& B(int i, int j) const { return b[static_cast<size_t>(i) * n + j]; }
};
HermitianSample hermitian_sample(const SeifertMatrix& v, const CircleSample& s);

struct RealizeOptions {
  int max_entry = 3;                // search-entry bound for the ansatz layers
  int genus_slack = 2;              // extra genus allowed beyond deg/2
  long random_iterations = 400000;  // per size, randomized fallback
  double budget_seconds = 60.0;
};

/// A Seifert matrix whose Alexander polynomial equals delta up to +-t^k.
/// Layered: tridiagonal continuant ansatz, bordered-family exact solve, a
/// closed-form even-block solve (complete for genus <= 2), degree-slack
/// tridiagonal, then seeded random search. Throws not_admissible for
/// non-Alexander input and search_exhausted when the search layers fail
/// within budget (possible from genus 3 up; existence is guaranteed
/// mathematically, completeness of the search is not claimed).
SeifertMatrix realize_alexander(const IntPoly& delta, const RealizeOptions& opts = {});

/// Conway coefficients (c_1..c_g): with z^2 = t - 2 + 1/t and the sign fixed
/// so the z^0 term is +1, delta ~ 1 + sum c_k z^{2k}. Empty for delta ~ 1.
std::vector<Int> conway_vector(const IntPoly& delta);

/// Inverse of conway_vector, in normalize_alexander form.
IntPoly alexander_from_conway(const std::vector<Int>& c);

}  // namespace knotsig
