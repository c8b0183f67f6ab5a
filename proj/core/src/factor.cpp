#include "knotsig/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace knotsig {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic for polynomials over F_p, p a small odd prime. Coefficients are
// reduced to [0, p); vectors carry no trailing zeros.

using FpPoly = std::vector<long>;

void fp_strip(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long fp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return ((t % p) + p) % p;
}

FpPoly fp_reduce(const IntPoly& f, long p) {
  FpPoly out(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    Int r = f.coeff(i) % p;
    long v = static_cast<long>(r.get_si());
    out[i] = ((v % p) + p) % p;
  }
  fp_strip(out);
  return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  fp_strip(out);
  return out;
}

// a mod b; b nonzero.
FpPoly fp_rem(FpPoly a, const FpPoly& b, long p) {
  long binv = fp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    long f = a.back() * binv % p;
    size_t off = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - f * b[j]) % p + p) % p;
    fp_strip(a);
    if (a.empty()) break;
  }
  return a;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, long p) {
  FpPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  long binv = fp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    long f = a.back() * binv % p;
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - f * b[j]) % p + p) % p;
    fp_strip(a);
    if (a.empty()) break;
  }
  fp_strip(q);
  return {q, a};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    long inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

FpPoly fp_derivative(const FpPoly& a, long p) {
  if (a.size() < 2) return {};
  FpPoly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = (static_cast<long>(i) % p) * a[i] % p;
  fp_strip(out);
  return out;
}

FpPoly fp_monic(FpPoly a, long p) {
  if (a.empty() || a.back() == 1) return a;
  long inv = fp_inv(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

// Extended Euclid: s*a + t*b = 1 for coprime a, b.
void fp_bezout(const FpPoly& a, const FpPoly& b, long p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly qs = fp_mul(q, s1, p), qt = fp_mul(q, t1, p);
    FpPoly ns = s0, nt = t0;
    ns.resize(std::max(ns.size(), qs.size()), 0);
    for (size_t i = 0; i < qs.size(); ++i) ns[i] = ((ns[i] - qs[i]) % p + p) % p;
    fp_strip(ns);
    nt.resize(std::max(nt.size(), qt.size()), 0);
    for (size_t i = 0; i < qt.size(); ++i) nt[i] = ((nt[i] - qt[i]) % p + p) % p;
    fp_strip(nt);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  // r0 = gcd (a nonzero constant by coprimality); scale to make it 1.
  long inv = fp_inv(r0.empty() ? 1 : r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = std::move(s0);
  t = std::move(t0);
}

// Berlekamp factorization of a monic square-free polynomial mod p.
std::vector<FpPoly> berlekamp(const FpPoly& f, long p) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  // x^p mod f by square-and-multiply on exponent p.
  FpPoly xp = {0, 1};
  {
    FpPoly acc = {1};
    FpPoly base = {0, 1};
    long e = p;
    while (e > 0) {
      if (e & 1) acc = fp_rem(fp_mul(acc, base, p), f, p);
      e >>= 1;
      if (e > 0) base = fp_rem(fp_mul(base, base, p), f, p);
    }
    xp = acc;
  }
  // M[j][i] = coeff j of x^{ip} mod f.
  std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
  FpPoly cur = {1};
  for (int i = 0; i < n; ++i) {
    for (size_t j = 0; j < cur.size(); ++j) M[j][i] = cur[j];
    if (i + 1 < n) cur = fp_rem(fp_mul(cur, xp, p), f, p);
  }
  for (int i = 0; i < n; ++i) M[i][i] = ((M[i][i] - 1) % p + p) % p;
  // Nullspace of M by Gaussian elimination.
  std::vector<int> pivot_col_of_row(n, -1);
  std::vector<bool> col_is_pivot(n, false);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (M[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[rank]);
    long inv = fp_inv(M[rank][col], p);
    for (int j = 0; j < n; ++j) M[rank][j] = M[rank][j] * inv % p;
    for (int row = 0; row < n; ++row) {
      if (row != rank && M[row][col] != 0) {
        long f2 = M[row][col];
        for (int j = 0; j < n; ++j) M[row][j] = ((M[row][j] - f2 * M[rank][j]) % p + p) % p;
      }
    }
    pivot_col_of_row[rank] = col;
    col_is_pivot[col] = true;
    ++rank;
  }
  std::vector<FpPoly> basis;
  for (int col = 0; col < n; ++col) {
    if (col_is_pivot[col]) continue;
    FpPoly v(n, 0);
    v[col] = 1;
    for (int row = 0; row < rank; ++row) {
      int pc = pivot_col_of_row[row];
      v[pc] = ((-M[row][col]) % p + p) % p;
    }
    fp_strip(v);
    basis.push_back(std::move(v));
  }
  size_t r = basis.size() + 1;  // +1 for the constant vector e_0 (always in the nullspace)
  std::vector<FpPoly> factors = {f};
  if (r == 1) return factors;
  for (const auto& v : basis) {
    if (factors.size() >= r) break;
    std::vector<FpPoly> next;
    for (auto& u : factors) {
      bool split_done = false;
      if (u.size() > 2) {
        std::vector<FpPoly> pieces;
        FpPoly rest = u;
        for (long c = 0; c < p && rest.size() > 1; ++c) {
          FpPoly vc = v;
          if (vc.empty()) vc = {0};
          vc[0] = ((vc[0] - c) % p + p) % p;
          fp_strip(vc);
          if (vc.empty()) continue;
          FpPoly w = fp_gcd(rest, fp_rem(vc, rest, p), p);
          if (w.size() > 1 && w.size() < rest.size()) {
            pieces.push_back(w);
            rest = fp_divmod(rest, w, p).first;
          }
        }
        if (!pieces.empty()) {
          for (auto& piece : pieces) next.push_back(fp_monic(std::move(piece), p));
          if (rest.size() > 1) next.push_back(fp_monic(std::move(rest), p));
          split_done = true;
        }
      }
      if (!split_done) next.push_back(std::move(u));
    }
    factors = std::move(next);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting with mpz coefficients.

Int sym_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

IntPoly poly_mod(const IntPoly& f, const Int& m) {
  std::vector<Int> out(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) out[i] = sym_mod(f.coeff(i), m);
  return IntPoly(std::move(out));
}

// Division with remainder by a monic (mod m) polynomial, coefficients mod m.
void poly_divmod_monic_mod(const IntPoly& a, const IntPoly& b, const Int& m, IntPoly& q, IntPoly& r) {
  std::vector<Int> rem(a.coeffs());
  int db = b.degree();
  std::vector<Int> qc;
  if (a.degree() >= db) qc.assign(a.degree() - db + 1, Int(0));
  for (int i = a.degree() - db; i >= 0; --i) {
    if (i + db >= static_cast<int>(rem.size())) continue;
    Int top = sym_mod(rem[i + db], m);
    if (sgn(top) == 0) {
      rem[i + db] = 0;
      continue;
    }
    qc[i] = top;
    for (int j = 0; j <= db; ++j) rem[i + j] = sym_mod(rem[i + j] - top * b.coeff(j), m);
  }
  q = IntPoly(std::move(qc));
  std::vector<Int> rr(rem.begin(), rem.begin() + std::min<size_t>(rem.size(), db));
  for (auto& c : rr) c = sym_mod(c, m);
  r = IntPoly(std::move(rr));
}

struct HenselQuad {
  IntPoly g, h, s, t;
};

// One quadratic lift step: from mod m to mod m^2 (h monic).
HenselQuad hensel_step(const IntPoly& f, const HenselQuad& in, const Int& m) {
  Int m2 = m * m;
  IntPoly e = poly_mod(f - in.g * in.h, m2);
  IntPoly q, r;
  poly_divmod_monic_mod(poly_mod(in.s * e, m2), in.h, m2, q, r);
  IntPoly g1 = poly_mod(in.g + in.t * e + q * in.g, m2);
  IntPoly h1 = poly_mod(in.h + r, m2);
  IntPoly b = poly_mod(in.s * g1 + in.t * h1 - IntPoly::constant(1), m2);
  IntPoly c, d;
  poly_divmod_monic_mod(poly_mod(in.s * b, m2), h1, m2, c, d);
  IntPoly s1 = poly_mod(in.s - d, m2);
  IntPoly t1 = poly_mod(in.t - in.t * b - c * g1, m2);
  return {g1, h1, s1, t1};
}

IntPoly lift_fp(const FpPoly& a) {
  std::vector<Int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = Int(a[i]);
  return IntPoly(std::move(out));
}

// Multifactor Hensel lifting: F ≡ lc(F) * prod(monic factors) mod p^k,
// where `mods` are the monic factors of F/lc mod p.
std::vector<IntPoly> hensel_lift_list(const IntPoly& F, const std::vector<FpPoly>& mods, long p, const Int& target) {
  if (mods.size() == 1) {
    // Normalize F monic mod target.
    Int lc = F.leading() % target;
    if (lc < 0) lc += target;
    Int lcinv;
    if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
      fail(errc::internal_contradiction, "leading coefficient not invertible in Hensel lift");
    std::vector<Int> out(F.degree() + 1);
    for (int i = 0; i <= F.degree(); ++i) out[i] = sym_mod(F.coeff(i) * lcinv, target);
    out[F.degree()] = 1;
    return {IntPoly(std::move(out))};
  }
  size_t half = mods.size() / 2;
  std::vector<FpPoly> left(mods.begin(), mods.begin() + half);
  std::vector<FpPoly> right(mods.begin() + half, mods.end());
  long lcp = static_cast<long>(mpz_fdiv_ui(F.leading().get_mpz_t(), static_cast<unsigned long>(p)));
  FpPoly gl = {lcp};
  for (const auto& g : left) gl = fp_mul(gl, g, p);
  FpPoly hr = {1};
  for (const auto& h : right) hr = fp_mul(hr, h, p);
  FpPoly s, t;
  fp_bezout(gl, hr, p, s, t);
  HenselQuad cur{poly_mod(lift_fp(gl), Int(p)), lift_fp(hr), lift_fp(s), lift_fp(t)};
  Int m(p);
  while (m < target) {
    cur = hensel_step(F, cur, m);
    m = m * m;
  }
  std::vector<IntPoly> a = hensel_lift_list(poly_mod(cur.g, m), left, p, m);
  std::vector<IntPoly> b = hensel_lift_list(cur.h, right, p, m);
  // m and target are powers of p with m >= target, so congruences mod m
  // restrict to congruences mod target.
  std::vector<IntPoly> out;
  out.reserve(a.size() + b.size());
  for (auto& x : a) out.push_back(poly_mod(x, target));
  for (auto& x : b) out.push_back(poly_mod(x, target));
  return out;
}

// Landau–Mignotte style bound: coefficients of lc(f)*h for any factor h | f.
Int coeff_bound(const IntPoly& f) {
  Int norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Int s = sqrt(norm2) + 1;
  Int b = abs(f.leading()) * s;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.degree() + 1);
  return b;
}

// Deterministic subset enumeration for Zassenhaus recombination.
bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Factor a primitive square-free polynomial with positive leading coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() == 1) return {f};
  static const long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
  long best_p = 0;
  std::vector<FpPoly> best_factors;
  int tried = 0;
  for (long p : kPrimes) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    FpPoly fp = fp_reduce(f, p);
    if (static_cast<int>(fp.size()) - 1 != f.degree()) continue;
    FpPoly g = fp_gcd(fp, fp_derivative(fp, p), p);
    if (g.size() != 1) continue;  // not square-free mod p
    std::vector<FpPoly> mods = berlekamp(fp_monic(fp, p), p);
    if (mods.size() == 1) return {f};  // irreducible already
    if (best_p == 0 || mods.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(mods);
    }
    if (++tried >= 3) break;
  }
  if (best_p == 0) fail(errc::search_exhausted, "no usable prime for factorization of " + f.str());
  if (best_factors.size() > 24) fail(errc::search_exhausted, "too many modular factors for recombination");

  // Deterministic order of modular factors.
  std::sort(best_factors.begin(), best_factors.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });

  Int bound = coeff_bound(f);
  Int target(best_p);
  while (target <= 2 * bound) target *= target;
  std::vector<IntPoly> lifted = hensel_lift_list(f, best_factors, best_p, target);

  std::vector<IntPoly> result;
  IntPoly remaining = f;
  std::vector<int> avail(lifted.size());
  std::iota(avail.begin(), avail.end(), 0);
  for (int csize = 1; csize <= static_cast<int>(avail.size()) / 2;) {
    bool found = false;
    std::vector<int> pick(csize);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      IntPoly cand = IntPoly::constant(remaining.leading());
      for (int i : pick) cand = poly_mod(cand * lifted[avail[i]], target);
      cand = cand.primitive_part();
      IntPoly quot;
      if (try_divide(remaining, cand, quot)) {
        result.push_back(cand);
        remaining = quot.primitive_part();
        std::vector<int> rest;
        for (int i = 0; i < static_cast<int>(avail.size()); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(avail[i]);
        avail = std::move(rest);
        found = true;
        break;
      }
    } while (next_combination(pick, static_cast<int>(avail.size())));
    if (!found) ++csize;
  }
  if (remaining.degree() >= 1) result.push_back(remaining);
  return result;
}

}  // namespace

Factorization factor(const IntPoly& p, int degree_cap) {
  if (p.is_zero()) fail(errc::invalid_argument, "factor of zero polynomial");
  if (p.degree() > degree_cap) fail(errc::search_exhausted, "degree exceeds factorization cap");
  Factorization out;
  out.content = sgn(p.leading()) < 0 ? -p.content() : p.content();
  if (p.degree() == 0) return out;
  IntPoly f = p.primitive_part();
  int val = f.valuation();
  if (val > 0) {
    f = f.shifted_down(val);
    out.factors.push_back({IntPoly{0, 1}, val});
  }
  if (f.degree() >= 1) {
    // Yun's square-free decomposition.
    IntPoly df = f.derivative();
    IntPoly u = gcd_poly(f, df);
    IntPoly v, w;
    if (!try_divide(f, u, v) ) fail(errc::internal_contradiction, "Yun: u does not divide f");
    if (!try_divide(df, u, w)) fail(errc::internal_contradiction, "Yun: u does not divide f'");
    int multiplicity = 1;
    while (v.degree() > 0) {
      IntPoly z = w - v.derivative();
      IntPoly h = gcd_poly(v, z);
      if (h.degree() > 0) {
        for (const IntPoly& irr : factor_squarefree(h.primitive_part()))
          out.factors.push_back({irr, multiplicity});
      }
      IntPoly v2, w2;
      if (h.is_zero()) fail(errc::internal_contradiction, "Yun: zero gcd");
      if (!try_divide(v, h, v2)) fail(errc::internal_contradiction, "Yun: h does not divide v");
      if (!try_divide(z, h, w2)) fail(errc::internal_contradiction, "Yun: h does not divide z");
      v = std::move(v2);
      w = std::move(w2);
      ++multiplicity;
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return out;
}

bool is_irreducible(const IntPoly& p, int degree_cap) {
  if (p.is_zero() || p.degree() < 1) return false;
  Factorization f = factor(p, degree_cap);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

IntPoly cyclotomic(int n) {
  if (n < 1) fail(errc::invalid_argument, "cyclotomic index must be >= 1");
  std::map<int, IntPoly> phi;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<Int> tn(d + 1, Int(0));
    tn[0] = -1;
    tn[d] = 1;
    IntPoly num{std::move(tn)};
    for (const auto& [e, ph] : phi) {
      if (d % e != 0 || e == d) continue;
      IntPoly q;
      if (!try_divide(num, ph, q)) fail(errc::internal_contradiction, "cyclotomic division failed");
      num = std::move(q);
    }
    phi[d] = std::move(num);
  }
  return phi[n];
}

}  // namespace knotsig
