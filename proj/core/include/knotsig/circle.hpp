#pragma once

#include <optional>
#include <vector>

#include "knotsig/factor.hpp"
#include "knotsig/sturm.hpp"

namespace knotsig {

/// Algebraic point on the open upper unit circle. Represented by its minimal
/// polynomial (primitive, irreducible, symmetric, even degree) and a rational
/// interval inside (-2, 2) isolating one real root x = t + 1/t of the trace
/// polynomial. The conjugate point on the lower arc is implicit.
class CirclePoint {
public:
  const IntPoly& min_poly() const { return min_poly_; }
  const IntPoly& trace_poly() const { return trace_; }
  const Interval& x_interval() const { return x_iv_; }

  /// New point with the isolating interval shrunk below `width`.
  CirclePoint refined(const Rat& width) const;

  double x_approx() const;
  double theta_over_pi_approx() const;

private:
  friend CirclePoint make_point(const IntPoly&, const Interval&);
  friend std::vector<CirclePoint> conjugates_on_upper(const IntPoly&);
  CirclePoint() = default;
  IntPoly min_poly_;
  IntPoly trace_;
  Interval x_iv_;
};

/// Validates and builds a point; the hint interval is intersected with
/// (-2, 2) and must isolate exactly one trace-polynomial root.
CirclePoint make_point(const IntPoly& min_poly, const Interval& hint);
CirclePoint make_point(const IntPoly& min_poly);

bool equals(const CirclePoint& a, const CirclePoint& b);

/// -1, 0, +1 as a's argument is smaller, equal, larger than b's
/// (argument increases as x = 2 cos(theta) decreases).
int cmp_by_argument(const CirclePoint& a, const CirclePoint& b);

/// Exact sign of (a.x - x0).
int cmp_x_to_rational(const CirclePoint& a, const Rat& x0);

/// All roots of an irreducible symmetric polynomial on the open upper
/// circle, sorted by increasing argument. Empty if none.
std::vector<CirclePoint> conjugates_on_upper(const IntPoly& delta);

/// Rational circle point omega(s) = ((1 - s^2) + 2si) / (1 + s^2), s > 0;
/// x(s) = 2(1 - s^2)/(1 + s^2) is strictly decreasing in s.
class CircleSample {
public:
  explicit CircleSample(Rat s);
  const Rat& s() const { return s_; }
  Rat re() const;
  Rat im() const;
  Rat x() const;

private:
  Rat s_;
};

/// Endpoint of an open arc on the upper semicircle: 1 (argument 0),
/// -1 (argument pi), or an interior algebraic point.
class ArcEndpoint {
public:
  static ArcEndpoint one() { return ArcEndpoint(0); }
  static ArcEndpoint minus_one() { return ArcEndpoint(2); }
  static ArcEndpoint at(CirclePoint p) {
    ArcEndpoint e(1);
    e.pt_ = std::move(p);
    return e;
  }
  bool is_one() const { return kind_ == 0; }
  bool is_minus_one() const { return kind_ == 2; }
  bool is_point() const { return kind_ == 1; }
  const CirclePoint& point() const { return *pt_; }

private:
  explicit ArcEndpoint(int kind) : kind_(kind) {}
  int kind_;
  std::optional<CirclePoint> pt_;
};

/// Deterministic rational sample with x(s) strictly between the endpoints'
/// x-values; `right` precedes `left` in argument order.
CircleSample sample_in_arc(const ArcEndpoint& right, const ArcEndpoint& left);

struct DenseQuarticOptions {
  long coefficient_cap = 1000000;
};

/// Irreducible quartic q(t) = a(1-t)^4 + b t(1-t)^2 + t^2 (so q(1) = 1) with
/// exactly one root on the open upper circle, whose x lies in the open arc.
IntPoly dense_quartic(const Interval& arc, const DenseQuarticOptions& opts = {});

}  // namespace knotsig
