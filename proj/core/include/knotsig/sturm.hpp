#pragma once

#include <vector>

#include "knotsig/intpoly.hpp"

namespace knotsig {

struct Interval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
};

/// Signed-remainder chain of the square-free part of p.
class SturmChain {
public:
  static SturmChain build(const IntPoly& p);

  const std::vector<IntPoly>& sequence() const { return seq_; }
  const IntPoly& square_free() const { return seq_.front(); }

  int variations_at(const Rat& x) const;

  /// Number of distinct real roots in (lo, hi]; exact.
  int count_half_open(const Rat& lo, const Rat& hi) const;

  /// Number of distinct real roots in the open interval; endpoints must not
  /// be roots.
  int count_open(const Interval& iv) const;

private:
  std::vector<IntPoly> seq_;
};

/// Descartes sign-change count, zeros skipped.
int count_sign_changes(const std::vector<Int>& coeffs);

/// Disjoint open isolating intervals, rational non-root endpoints, one per
/// distinct real root of p in (lo, hi), sorted ascending.
std::vector<Interval> isolate_real_roots(const IntPoly& p, const Rat& lo, const Rat& hi);

/// Shrinks an isolating interval below `width`, keeping its unique root and
/// non-root endpoints.
Interval refine_interval(const IntPoly& p, const Interval& iv, const Rat& width);

}  // namespace knotsig
