#include "knotsig/sturm.hpp"

#include <algorithm>
#include <deque>

namespace knotsig {

SturmChain SturmChain::build(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_argument, "Sturm chain of zero polynomial");
  SturmChain chain;
  IntPoly sf = p;
  if (p.degree() > 0) {
    IntPoly g = gcd_poly(p, p.derivative());
    if (g.degree() > 0) {
      IntPoly q;
      if (!try_divide(g.leading() * p, g, q))
        fail(errc::internal_contradiction, "square-free division failed");
      sf = q.primitive_part();
      if (sgn(p.leading()) < 0) sf = -sf;  // keep the sign of p at +inf
    }
  }
  chain.seq_.push_back(sf);
  if (sf.degree() > 0) {
    chain.seq_.push_back(sf.derivative());
    while (chain.seq_.back().degree() > 0) {
      IntPoly r = sturm_negated_remainder(chain.seq_[chain.seq_.size() - 2], chain.seq_.back());
      if (r.is_zero()) break;  // cannot happen for square-free input; guard anyway
      chain.seq_.push_back(std::move(r));
    }
  }
  return chain;
}

int SturmChain::variations_at(const Rat& x) const {
  int var = 0, prev = 0;
  for (const auto& p : seq_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_half_open(const Rat& lo, const Rat& hi) const {
  if (lo >= hi) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_open(const Interval& iv) const {
  if (square_free().sign_at(iv.lo) == 0 || square_free().sign_at(iv.hi) == 0)
    fail(errc::invalid_argument, "count_open endpoints must not be roots");
  return count_half_open(iv.lo, iv.hi);
}

int count_sign_changes(const std::vector<Int>& coeffs) {
  int var = 0, prev = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

namespace {

// Largest k with x + 1/2^k still strictly below hi, then nudge until the
// value is not a root. Used to move off root endpoints.
Rat nudge_above(const IntPoly& sf, const SturmChain& chain, const Rat& x, const Rat& hi) {
  Rat step(1, 2);
  while (x + step >= hi) step /= 2;
  Rat cand = x + step;
  // Move inward until no root sits in (x, cand].
  while (chain.count_half_open(x, cand) != 0 || sf.sign_at(cand) == 0) {
    step /= 2;
    cand = x + step;
  }
  return cand;
}

Rat nudge_below(const IntPoly& sf, const SturmChain& chain, const Rat& x, const Rat& lo) {
  Rat step(1, 2);
  while (x - step <= lo) step /= 2;
  Rat cand = x - step;
  // x itself is a root: (cand, x] should contain exactly that root.
  while (chain.count_half_open(cand, x) != 1 || sf.sign_at(cand) == 0) {
    step /= 2;
    cand = x - step;
  }
  return cand;
}

}  // namespace

std::vector<Interval> isolate_real_roots(const IntPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) fail(errc::invalid_argument, "isolate_real_roots of zero polynomial");
  std::vector<Interval> out;
  if (p.degree() == 0 || lo >= hi) return out;
  SturmChain chain = SturmChain::build(p);
  const IntPoly& sf = chain.square_free();

  Rat a = lo, b = hi;
  if (sf.sign_at(a) == 0) a = nudge_above(sf, chain, a, b);
  if (sf.sign_at(b) == 0) b = nudge_below(sf, chain, b, a);

  std::deque<Interval> work;
  if (chain.count_half_open(a, b) > 0) work.push_back({a, b});
  while (!work.empty()) {
    Interval iv = work.front();
    work.pop_front();
    int n = chain.count_half_open(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    Rat m = iv.mid();
    if (sf.sign_at(m) == 0) {
      // The midpoint is a rational root; carve out a tight interval for it.
      Rat w = iv.width() / 8;
      Rat l = m - w, r = m + w;
      while (sf.sign_at(l) == 0 || sf.sign_at(r) == 0 || chain.count_half_open(l, r) != 1) {
        w /= 2;
        l = m - w;
        r = m + w;
      }
      work.push_back({iv.lo, l});
      out.push_back({l, r});
      work.push_back({r, iv.hi});
    } else {
      work.push_back({iv.lo, m});
      work.push_back({m, iv.hi});
    }
  }
  std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return out;
}

Interval refine_interval(const IntPoly& p, const Interval& iv, const Rat& width) {
  if (width <= 0) fail(errc::invalid_argument, "refine_interval width must be positive");
  SturmChain chain = SturmChain::build(p);
  const IntPoly& sf = chain.square_free();
  if (chain.count_open(iv) != 1) fail(errc::invalid_argument, "refine_interval input does not isolate a root");
  Interval cur = iv;
  while (cur.width() > width) {
    Rat m = cur.mid();
    if (sf.sign_at(m) == 0) {
      // Rational root found exactly; shrink symmetrically around it.
      Rat w = width / 4;
      Rat l = m - w, r = m + w;
      while (sf.sign_at(l) == 0 || sf.sign_at(r) == 0 || chain.count_half_open(l, r) != 1) {
        w /= 2;
        l = m - w;
        r = m + w;
      }
      return {l, r};
    }
    if (chain.count_half_open(cur.lo, m) == 1)
      cur.hi = m;
    else
      cur.lo = m;
  }
  return cur;
}

}  // namespace knotsig
