#include "knotsig/seifert.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

namespace knotsig {

namespace {

// Fraction-free Bareiss determinant; destroys its argument.
Int bareiss_det(std::vector<Int>& m, int n) {
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev(1);
  auto at = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * n + j]; };
  for (int k = 0; k + 1 < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(at(i, k)) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = num / prev;  // exact by Bareiss
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign < 0 ? Int(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

Int det_of(const SeifertMatrix& v, const Int& t) {
  int n = v.size();
  std::vector<Int> m(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * n + j] = v.at(i, j) - t * v.at(j, i);
  return bareiss_det(m, n);
}

}  // namespace

SeifertMatrix SeifertMatrix::validate(const std::vector<std::vector<Int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<Int> e(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      fail(errc::not_knot_seifert, "matrix is not square");
    for (int j = 0; j < n; ++j) e[static_cast<size_t>(i) * n + j] = rows[i][j];
  }
  std::vector<Int> skew(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      skew[static_cast<size_t>(i) * n + j] = e[static_cast<size_t>(i) * n + j] - e[static_cast<size_t>(j) * n + i];
  if (bareiss_det(skew, n) != 1)
    fail(errc::not_knot_seifert, "det(V - V^T) != 1: not a knot Seifert matrix");
  SeifertMatrix v;
  v.n_ = n;
  v.e_ = std::move(e);
  return v;
}

SeifertMatrix SeifertMatrix::unchecked(int n, std::vector<Int> entries) {
  SeifertMatrix v;
  v.n_ = n;
  v.e_ = std::move(entries);
  return v;
}

std::vector<std::vector<Int>> SeifertMatrix::rows() const {
  std::vector<std::vector<Int>> out(n_);
  for (int i = 0; i < n_; ++i) {
    out[i].resize(n_);
    for (int j = 0; j < n_; ++j) out[i][j] = at(i, j);
  }
  return out;
}

IntPoly alexander(const SeifertMatrix& v) {
  int n = v.size();
  if (n == 0) return IntPoly{1};
  // Interpolate det(V - tV^T) (degree <= n) at n+1 integer nodes.
  std::vector<Int> xs;
  xs.reserve(n + 1);
  xs.push_back(Int(0));
  for (long k = 1; static_cast<int>(xs.size()) < n + 1; ++k) {
    xs.push_back(Int(k));
    if (static_cast<int>(xs.size()) < n + 1) xs.push_back(Int(-k));
  }
  std::vector<Rat> newton(n + 1);  // divided differences
  for (int i = 0; i <= n; ++i) newton[i] = Rat(det_of(v, xs[i]));
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i) {
      newton[i] = (newton[i] - newton[i - 1]) / Rat(xs[i] - xs[i - level]);
      newton[i].canonicalize();
    }
  // Expand Newton form to monomial coefficients (Horner on the node basis).
  std::vector<Rat> coeff(n + 1, Rat(0));
  coeff[0] = newton[n];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n; j >= 1; --j) {
      coeff[j] = coeff[j - 1] - Rat(xs[i]) * coeff[j];
      coeff[j].canonicalize();
    }
    coeff[0] = -Rat(xs[i]) * coeff[0] + newton[i];
    coeff[0].canonicalize();
  }
  std::vector<Int> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (coeff[i].get_den() != 1)
      fail(errc::internal_contradiction, "alexander interpolation produced a non-integer");
    out[i] = coeff[i].get_num();
  }
  return normalize_alexander(IntPoly(std::move(out)));
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  int n = a.size() + b.size();
  std::vector<Int> e(static_cast<size_t>(n) * n, Int(0));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) e[static_cast<size_t>(i) * n + j] = a.at(i, j);
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      e[static_cast<size_t>(a.size() + i) * n + (a.size() + j)] = b.at(i, j);
  return SeifertMatrix::unchecked(n, std::move(e));
}

SeifertMatrix mirror(const SeifertMatrix& v) {
  int n = v.size();
  std::vector<Int> e(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[static_cast<size_t>(i) * n + j] = -v.at(j, i);
  return SeifertMatrix::unchecked(n, std::move(e));
}

SeifertMatrix random_seifert(int genus, long entry_bound, std::uint64_t seed) {
  if (genus < 0 || entry_bound < 0) fail(errc::invalid_argument, "random_seifert parameters");
  int n = 2 * genus;
  std::vector<Int> e(static_cast<size_t>(n) * n, Int(0));
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> long {
    if (entry_bound == 0) return 0;
    return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * entry_bound + 1)) - entry_bound;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      long c = draw();
      e[static_cast<size_t>(i) * n + j] = c;
      e[static_cast<size_t>(j) * n + i] = c;
    }
  for (int i = 0; i < genus; ++i) e[static_cast<size_t>(2 * i) * n + (2 * i + 1)] += 1;
  return SeifertMatrix::unchecked(n, std::move(e));
}

HermitianSample hermitian_sample(const SeifertMatrix& v, const CircleSample& s) {
  HermitianSample h;
  h.n = v.size();
  size_t nn = static_cast<size_t>(h.n) * h.n;
  h.a.resize(nn);
  h.b.resize(nn);
  Rat one_minus_re = Rat(1) - s.re();
  one_minus_re.canonicalize();
  Rat im = s.im();
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j) {
      Rat aij = one_minus_re * Rat(v.at(i, j) + v.at(j, i));
      aij.canonicalize();
      Rat bij = im * Rat(v.at(j, i) - v.at(i, j));
      bij.canonicalize();
      h.a[static_cast<size_t>(i) * h.n + j] = std::move(aij);
      h.b[static_cast<size_t>(i) * h.n + j] = std::move(bij);
    }
  return h;
}

std::vector<Int> conway_vector(const IntPoly& delta) {
  IntPoly d = normalize_alexander(delta);
  if (!is_alexander(d)) fail(errc::not_admissible, "not an Alexander polynomial: " + delta.str());
  if (d.degree() == 0) return {};
  IntPoly tr = trace_polynomial(d);
  IntPoly taylor = shifted_arg(tr, Int(2));  // T(y) = tr(y + 2), T(0) = d(1) = +-1
  if (taylor.coeff(0) == -1) taylor = -taylor;
  if (taylor.coeff(0) != 1) fail(errc::internal_contradiction, "conway normalization failed");
  int g = d.degree() / 2;
  std::vector<Int> c(g);
  for (int k = 1; k <= g; ++k) c[k - 1] = taylor.coeff(k);
  return c;
}

IntPoly alexander_from_conway(const std::vector<Int>& c) {
  std::vector<Int> t(c.size() + 1);
  t[0] = 1;
  for (size_t i = 0; i < c.size(); ++i) t[i + 1] = c[i];
  IntPoly taylor{std::move(t)};
  IntPoly q = shifted_arg(taylor, Int(-2));
  return normalize_alexander(expand_trace(q));
}

// ---------------------------------------------------------------------------
// realize_alexander

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool expired() const { return Clock::now() >= end; }
};

Int pow_reach(long base, int exp) {
  Int acc(1);
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

// Target in z-coordinates: 1 + sum c_k z^{2k}.
IntPoly conway_target_poly(const std::vector<Int>& c) {
  std::vector<Int> t(2 * c.size() + 1, Int(0));
  t[0] = 1;
  for (size_t k = 0; k < c.size(); ++k) t[2 * (k + 1)] = c[k];
  return IntPoly{std::move(t)};
}

SeifertMatrix tridiagonal_matrix(const std::vector<long>& m) {
  int n = static_cast<int>(m.size());
  std::vector<Int> e(static_cast<size_t>(n) * n, Int(0));
  for (int i = 0; i < n; ++i) {
    e[static_cast<size_t>(i) * n + i] = m[i];
    if (i + 1 < n) e[static_cast<size_t>(i) * n + (i + 1)] = 1;
  }
  return SeifertMatrix::unchecked(n, std::move(e));
}

// DFS over diagonals m in [-B, B]^size matching the continuant
// F_k = m_k z F_{k-1} + F_{k-2} against the Conway target.
bool search_tridiagonal(int size, long bound, const IntPoly& target, const Deadline& dl,
                        std::vector<long>& found) {
  std::vector<long> m(size);
  // states[k+1] holds F_k; states[0] = F_{-1} = 0.
  std::vector<IntPoly> states(size + 2);
  states[0] = IntPoly{};
  states[1] = IntPoly{1};
  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == size) return states[size + 1] == target;
    if ((k % 4 == 0) && dl.expired()) return false;
    for (long cand = -bound; cand <= bound; ++cand) {
      states[k + 2] = IntPoly::monomial(Int(cand), 1) * states[k + 1] + states[k];
      m[k] = cand;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  if (rec(0)) {
    found = m;
    return true;
  }
  return false;
}

// Bordered family: V = N + D on pairs (2i, 2i+1); D has p_i at (2i,2i),
// q_i at (2i+1,2i+1) and couplings e_i at (2i+1, 2i+3). Conway polynomial
// obeys H_k = (p_k q_k u + 1) H_{k-1} - p_k p_{k-1} e_{k-1}^2 u^2 H_{k-2}
// in u = z^2, with H_g the full Conway polynomial.
SeifertMatrix bordered_matrix(const std::vector<long>& p, const std::vector<long>& q,
                              const std::vector<long>& e) {
  int g = static_cast<int>(p.size());
  int n = 2 * g;
  std::vector<Int> m(static_cast<size_t>(n) * n, Int(0));
  auto at = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < g; ++i) {
    at(2 * i, 2 * i) = p[i];
    at(2 * i + 1, 2 * i + 1) = q[i];
    at(2 * i, 2 * i + 1) += 1;  // N
    if (i + 1 < g) {
      at(2 * i + 1, 2 * i + 3) = e[i];
      at(2 * i + 3, 2 * i + 1) = e[i];
    }
  }
  return SeifertMatrix::unchecked(n, std::move(m));
}

IntPoly bordered_conway(const std::vector<long>& p, const std::vector<long>& q,
                        const std::vector<long>& e) {
  int g = static_cast<int>(p.size());
  IntPoly hm1{1};  // H_0
  IntPoly hm2{};   // H_{-1}
  for (int k = 0; k < g; ++k) {
    IntPoly lin{std::vector<Int>{Int(1), Int(p[k] * q[k])}};  // p q u + 1
    IntPoly cur = lin * hm1;
    if (k >= 1) {
      long w = p[k] * p[k - 1] * e[k - 1] * e[k - 1];
      cur -= IntPoly::monomial(Int(w), 2) * hm2;
    }
    hm2 = std::move(hm1);
    hm1 = std::move(cur);
  }
  return hm1;  // in u = z^2
}

// Conway target expressed in u = z^2.
IntPoly conway_target_u(const std::vector<Int>& c) {
  std::vector<Int> t(c.size() + 1, Int(0));
  t[0] = 1;
  for (size_t k = 0; k < c.size(); ++k) t[k + 1] = c[k];
  return IntPoly{std::move(t)};
}

// With V = N + D on pairs (2i, 2i+1), D having 1 on the odd-slot diagonal
// and an arbitrary integer matrix G on the even slots, the skew pairing
// V - V^T is unimodular for every G: each odd slot pairs only with its even
// partner, so the pfaffian is the product of the symplectic 1s. The Conway
// polynomial is det(I + (t-1)G + (1/t-1)G^T).
SeifertMatrix even_block_matrix(const std::vector<std::vector<Int>>& g2) {
  int g = static_cast<int>(g2.size());
  int n = 2 * g;
  std::vector<Int> e(static_cast<size_t>(n) * n, Int(0));
  auto at = [&](int i, int j) -> Int& { return e[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < g; ++i) {
    at(2 * i, 2 * i) = 1;
    at(2 * i, 2 * i + 1) = 1;
  }
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) at(2 * i + 1, 2 * j + 1) = g2[i][j];
  return SeifertMatrix::unchecked(n, std::move(e));
}

// Exact genus-2 realization. For G = [[0, b], [1, s]] the Conway vector is
// c2 = -b and c1 = s - 2b + b^2 + 1, so b = -c2 and
// s = c1 - 2c2 - c2^2 - 1 solve any target.
SeifertMatrix genus2_exact(const std::vector<Int>& c) {
  Int b = -c[1];
  Int s = c[0] + 2 * b - b * b - 1;
  return even_block_matrix({{Int(0), b}, {Int(1), s}});
}

bool search_bordered(const std::vector<Int>& c, const Deadline& dl, SeifertMatrix& out) {
  int g = static_cast<int>(c.size());
  if (g == 0) return false;
  if (g == 1) {
    // c1 = p q: always solvable.
    long c1 = static_cast<long>(c[0].get_si());
    if (c[0] == 0) return false;  // handled by tridiagonal layer (c ~ 1 target has g = 0)
    out = bordered_matrix({1}, {c1}, {});
    return true;
  }
  if (g == 2) {
    // c1 = p1 q1 + p2 q2, c2 = p1 p2 (q1 q2 - e^2).
    static const long kSigns[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (long qcap = 1; qcap <= 128; qcap *= 2) {
      for (const auto& s : kSigns) {
        long p1 = s[0], p2 = s[1];
        for (long q2 = -qcap; q2 <= qcap; ++q2) {
          Int q1 = (c[0] - p2 * q2) * p1;  // p1 = +-1
          Int e2 = q1 * q2 - Int(p1 * p2) * c[1];
          if (sgn(e2) < 0) continue;
          if (!mpz_perfect_square_p(e2.get_mpz_t())) continue;
          Int e = sqrt(e2);
          out = bordered_matrix({p1, p2}, {static_cast<long>(q1.get_si()), q2},
                                {static_cast<long>(e.get_si())});
          return true;
        }
        if (dl.expired()) return false;
      }
    }
    return false;
  }
  // g >= 3: bounded scan with the recurrence. The diagonal bound must let
  // q-products reach the leading Conway coefficient.
  IntPoly target = conway_target_u(c);
  long qb = (g == 3) ? 6 : 3;
  if (g == 3) {
    Int lead = abs(c.back());
    long grow = 1;
    while (Int(grow) * grow * grow < lead) ++grow;
    qb = std::min(12L, std::max(qb, grow + 4));
  }
  long eb = 3;
  std::vector<long> p(g), q(g), e(g - 1);
  std::function<bool(int)> rec_e;
  std::function<bool(int)> rec_q = [&](int k) -> bool {
    if (k == g) return rec_e(0);
    for (long cand = -qb; cand <= qb; ++cand) {
      q[k] = cand;
      if (rec_q(k + 1)) return true;
    }
    return false;
  };
  rec_e = [&](int k) -> bool {
    if (k == g - 1) return bordered_conway(p, q, e) == target;
    if (dl.expired()) return false;
    for (long cand = 0; cand <= eb; ++cand) {
      e[k] = cand;
      if (rec_e(k + 1)) return true;
    }
    return false;
  };
  for (long mask = 0; mask < (1 << g); ++mask) {
    for (int i = 0; i < g; ++i) p[i] = (mask >> i) & 1 ? -1 : 1;
    if (rec_q(0)) {
      out = bordered_matrix(p, q, e);
      return true;
    }
    if (dl.expired()) return false;
  }
  return false;
}

}  // namespace

SeifertMatrix realize_alexander(const IntPoly& delta, const RealizeOptions& opts) {
  if (delta.is_zero() || !is_alexander(delta))
    fail(errc::not_admissible, "realize_alexander requires an Alexander polynomial");
  IntPoly d = normalize_alexander(delta);
  if (d.degree() == 0) return SeifertMatrix::unknot();
  std::vector<Int> c = conway_vector(d);
  int g = static_cast<int>(c.size());
  Deadline dl{Clock::now() + std::chrono::microseconds(static_cast<long long>(opts.budget_seconds * 1e6))};
  IntPoly target_z = conway_target_poly(c);

  auto finish = [&](const SeifertMatrix& v) {
    if (alexander(v) != d)
      fail(errc::internal_contradiction, "realize_alexander produced a wrong matrix");
    return v;
  };

  // Layer 1: tridiagonal ansatz at exact size.
  {
    std::vector<long> m;
    if (search_tridiagonal(2 * g, opts.max_entry, target_z, dl, m))
      return finish(tridiagonal_matrix(m));
  }
  // Layer 2: bordered family, exact solve for small genus.
  {
    SeifertMatrix v;
    if (search_bordered(c, dl, v)) return finish(v);
  }
  // Layer 3: closed-form even-block solve; complete for genus 2.
  if (g == 2) return finish(genus2_exact(c));
  // Layer 4: tridiagonal ansatz with degree slack (interior zeros).
  for (int gp = g + 1; gp <= g + opts.genus_slack && !dl.expired(); ++gp) {
    std::vector<long> m;
    if (search_tridiagonal(2 * gp, opts.max_entry, target_z, dl, m))
      return finish(tridiagonal_matrix(m));
  }
  // Layer 5: seeded random search over C + N, entry bound widened until the
  // leading Conway coefficient is reachable.
  long bound = opts.max_entry;
  {
    Int lead = abs(c.back());
    long grow = 1;
    while (pow_reach(grow, g) < lead) ++grow;
    bound = std::max(bound, grow + 1);
  }
  for (int gp = g; gp <= g + opts.genus_slack; ++gp) {
    std::mt19937_64 rng(0x6b6e6f747369ULL + static_cast<std::uint64_t>(gp));
    for (long it = 0; it < opts.random_iterations; ++it) {
      if ((it & 1023) == 0 && dl.expired())
        fail(errc::search_exhausted, "realize_alexander budget exhausted for " + d.str());
      int n = 2 * gp;
      std::vector<Int> e(static_cast<size_t>(n) * n, Int(0));
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          long v = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
          e[static_cast<size_t>(i) * n + j] = v;
          e[static_cast<size_t>(j) * n + i] = v;
        }
      for (int i = 0; i < gp; ++i) e[static_cast<size_t>(2 * i) * n + (2 * i + 1)] += 1;
      SeifertMatrix v = SeifertMatrix::unchecked(n, std::move(e));
      if (alexander(v) == d) return v;
    }
  }
  fail(errc::search_exhausted, "realize_alexander found no matrix for " + d.str());
}

}  // namespace knotsig
