#include "knotsig/circle.hpp"

#include <algorithm>
#include <cmath>

namespace knotsig {

CirclePoint CirclePoint::refined(const Rat& width) const {
  CirclePoint p = *this;
  if (x_iv_.width() > width) p.x_iv_ = refine_interval(trace_, x_iv_, width);
  return p;
}

double CirclePoint::x_approx() const {
  CirclePoint p = refined(Rat(1, 1 << 24));
  return p.x_iv_.mid().get_d();
}

double CirclePoint::theta_over_pi_approx() const { return std::acos(x_approx() / 2.0) / std::acos(-1.0); }

CirclePoint make_point(const IntPoly& min_poly, const Interval& hint) {
  if (min_poly.is_zero() || min_poly.degree() < 1)
    fail(errc::not_irreducible, "minimal polynomial must be non-constant");
  IntPoly q = normalize_alexander(min_poly);
  if (!is_symmetric(q)) fail(errc::not_symmetric, "minimal polynomial is not symmetric: " + q.str());
  if (q.degree() % 2 != 0)
    fail(errc::no_root_in_interval, "odd-degree symmetric polynomial has no root on the open upper arc");
  if (!is_irreducible(q)) fail(errc::not_irreducible, "minimal polynomial is not irreducible: " + q.str());
  IntPoly trace = trace_polynomial(q);
  Rat lo = std::max(hint.lo, Rat(-2));
  Rat hi = std::min(hint.hi, Rat(2));
  std::vector<Interval> roots = isolate_real_roots(trace, lo, hi);
  if (roots.empty()) fail(errc::no_root_in_interval, "no circle root with x in the hint interval");
  if (roots.size() > 1) fail(errc::multiple_roots_in_interval, "hint interval contains several circle roots");
  CirclePoint p;
  p.min_poly_ = std::move(q);
  p.trace_ = std::move(trace);
  p.x_iv_ = roots[0];
  return p;
}

CirclePoint make_point(const IntPoly& min_poly) { return make_point(min_poly, {Rat(-2), Rat(2)}); }

bool equals(const CirclePoint& a, const CirclePoint& b) {
  if (a.min_poly() != b.min_poly()) return false;
  Rat lo = std::max(a.x_interval().lo, b.x_interval().lo);
  Rat hi = std::min(a.x_interval().hi, b.x_interval().hi);
  if (lo >= hi) return false;
  SturmChain chain = SturmChain::build(a.trace_poly());
  return chain.count_half_open(lo, hi) == 1;
}

int cmp_by_argument(const CirclePoint& a, const CirclePoint& b) {
  if (equals(a, b)) return 0;
  CirclePoint x = a, y = b;
  while (true) {
    if (x.x_interval().hi <= y.x_interval().lo) return 1;   // x.x < y.x: larger argument
    if (y.x_interval().hi <= x.x_interval().lo) return -1;  // x.x > y.x: smaller argument
    Rat w = std::min(x.x_interval().width(), y.x_interval().width()) / 2;
    x = x.refined(w);
    y = y.refined(w);
  }
}

int cmp_x_to_rational(const CirclePoint& a, const Rat& x0) {
  const Interval& iv = a.x_interval();
  if (x0 <= iv.lo) return 1;
  if (x0 >= iv.hi) return -1;
  if (a.trace_poly().sign_at(x0) == 0) return 0;
  SturmChain chain = SturmChain::build(a.trace_poly());
  return chain.count_half_open(iv.lo, x0) == 1 ? -1 : 1;
}

std::vector<CirclePoint> conjugates_on_upper(const IntPoly& delta) {
  if (delta.is_zero() || delta.degree() < 1) return {};
  IntPoly q = normalize_alexander(delta);
  if (!is_symmetric(q)) fail(errc::not_symmetric, "conjugates_on_upper requires a symmetric polynomial");
  if (q.degree() % 2 != 0) return {};  // irreducible odd symmetric is t + 1; root excluded
  if (!is_irreducible(q)) fail(errc::not_irreducible, "conjugates_on_upper requires an irreducible polynomial");
  IntPoly trace = trace_polynomial(q);
  std::vector<Interval> roots = isolate_real_roots(trace, Rat(-2), Rat(2));
  std::vector<CirclePoint> out;
  out.reserve(roots.size());
  // Ascending x = descending argument; reverse for argument order.
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    CirclePoint p;
    p.min_poly_ = q;
    p.trace_ = trace;
    p.x_iv_ = *it;
    out.push_back(std::move(p));
  }
  return out;
}

CircleSample::CircleSample(Rat s) : s_(std::move(s)) {
  if (sgn(s_) <= 0) fail(errc::invalid_argument, "circle sample parameter must be positive");
  s_.canonicalize();
}

Rat CircleSample::re() const {
  Rat s2 = s_ * s_;
  Rat r = (Rat(1) - s2) / (Rat(1) + s2);
  r.canonicalize();
  return r;
}

Rat CircleSample::im() const {
  Rat s2 = s_ * s_;
  Rat r = (2 * s_) / (Rat(1) + s2);
  r.canonicalize();
  return r;
}

Rat CircleSample::x() const {
  Rat r = 2 * re();
  r.canonicalize();
  return r;
}

namespace {

Rat x_of_s(const Rat& s) {
  Rat s2 = s * s;
  Rat r = 2 * (Rat(1) - s2) / (Rat(1) + s2);
  r.canonicalize();
  return r;
}

// x(s) strictly below the right endpoint's x?
bool below_right(const ArcEndpoint& right, const Rat& xs) {
  if (right.is_one()) return xs < 2;
  return cmp_x_to_rational(right.point(), xs) > 0;
}

// x(s) strictly above the left endpoint's x?
bool above_left(const ArcEndpoint& left, const Rat& xs) {
  if (left.is_minus_one()) return xs > -2;
  return cmp_x_to_rational(left.point(), xs) < 0;
}

}  // namespace

CircleSample sample_in_arc(const ArcEndpoint& right, const ArcEndpoint& left) {
  if (right.is_minus_one() || left.is_one())
    fail(errc::invalid_argument, "arc endpoints out of order");
  if (right.is_one() && left.is_minus_one()) return CircleSample(Rat(1));  // full upper arc
  if (right.is_point() && left.is_point()) {
    int c = cmp_by_argument(right.point(), left.point());
    if (c == 0) fail(errc::empty_arc, "arc endpoints coincide");
    if (c > 0) fail(errc::invalid_argument, "arc endpoints out of order");
  }
  auto inside = [&](const Rat& s) {
    Rat xs = x_of_s(s);
    return below_right(right, xs) && above_left(left, xs);
  };
  // Doubling phase: find a dyadic s past or inside the arc.
  Rat lo(0), hi(1);
  while (true) {
    if (inside(hi)) return CircleSample(hi);
    if (!below_right(right, x_of_s(hi))) {
      lo = hi;
      hi = 2 * hi;
      continue;
    }
    break;  // x(hi) is at or below the left endpoint
  }
  // Bisection on (lo, hi); x is monotone decreasing in s.
  while (true) {
    Rat m = (lo + hi) / 2;
    m.canonicalize();
    if (inside(m)) return CircleSample(m);
    if (!below_right(right, x_of_s(m)))
      lo = m;
    else
      hi = m;
  }
}

namespace {

long floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return static_cast<long>(q.get_si());
}

}  // namespace

IntPoly dense_quartic(const Interval& arc, const DenseQuarticOptions& opts) {
  if (!(Rat(-2) < arc.lo && arc.lo < arc.hi && arc.hi < Rat(2)))
    fail(errc::invalid_argument, "dense_quartic arc must satisfy -2 < lo < hi < 2");
  Rat ylo = arc.lo - 2, yhi = arc.hi - 2;
  auto try_pair = [&](long a, long b) -> bool {
    IntPoly quad{std::vector<Int>{Int(1), Int(b), Int(a)}};  // a y^2 + b y + 1
    if (isolate_real_roots(quad, ylo, yhi).size() != 1) return false;
    if (isolate_real_roots(quad, Rat(-4), Rat(0)).size() != 1) return false;
    return true;
  };
  // a y^2 + b y + 1 has a root at y iff b = f(y) = -(a y^2 + 1)/y, so for each
  // a only integers b in f's range over the window can work. f is convex on
  // y < 0 for a > 0 (interior minimum 2 sqrt a at y = -1/sqrt a) and strictly
  // increasing for a < 0.
  auto f_at = [&](long a, const Rat& y) {
    Rat v = -(Rat(a) * y * y + 1) / y;
    v.canonicalize();
    return v;
  };
  for (long mag = 1; mag <= opts.coefficient_cap; ++mag) {
    for (long a : {mag, -mag}) {
      Rat f_l = f_at(a, ylo), f_h = f_at(a, yhi);
      Rat fmax = std::max(f_l, f_h), fmin = std::min(f_l, f_h);
      long hi_b = floor_rat(fmax) + 1;
      long lo_b;
      bool interior = a > 0 && Rat(a) * yhi * yhi < 1 && 1 < Rat(a) * ylo * ylo;
      if (interior) {
        lo_b = 1;
        while (lo_b * lo_b < 4 * a) ++lo_b;  // smallest b >= 2 sqrt(a)
      } else {
        lo_b = floor_rat(fmin);
      }
      for (long b = lo_b; b <= hi_b; ++b) {
        if (!try_pair(a, b)) continue;
        IntPoly q{std::vector<Int>{Int(a), Int(b - 4 * a), Int(6 * a - 2 * b + 1), Int(b - 4 * a), Int(a)}};
        if (!is_irreducible(q)) continue;
        return q;
      }
    }
  }
  fail(errc::search_exhausted, "dense_quartic found no admissible quartic within the coefficient cap");
}

}  // namespace knotsig
