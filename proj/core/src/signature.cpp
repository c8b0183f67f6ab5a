#include "knotsig/signature.hpp"

#include <algorithm>

namespace knotsig {

namespace {

// Characteristic polynomial x^m + c_1 x^{m-1} + ... + c_m of an integer
// matrix by Faddeev-LeVerrier; the trace divisions are exact.
std::vector<Int> char_poly(const std::vector<Int>& m, int n) {
  std::vector<Int> c(n + 1);
  c[0] = 1;
  std::vector<Int> mk = m;  // M_1 = M
  auto tr = [&](const std::vector<Int>& a) {
    Int t(0);
    for (int i = 0; i < n; ++i) t += a[static_cast<size_t>(i) * n + i];
    return t;
  };
  for (int k = 1; k <= n; ++k) {
    Int t = tr(mk);
    if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(k)))
      fail(errc::internal_contradiction, "Faddeev-LeVerrier trace division");
    c[k] = -t / k;
    if (k == n) break;
    // M_{k+1} = M (M_k + c_k I)
    std::vector<Int> shifted = mk;
    for (int i = 0; i < n; ++i) shifted[static_cast<size_t>(i) * n + i] += c[k];
    std::vector<Int> next(static_cast<size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const Int& mil = m[static_cast<size_t>(i) * n + l];
        if (sgn(mil) == 0) continue;
        for (int j = 0; j < n; ++j)
          next[static_cast<size_t>(i) * n + j] += mil * shifted[static_cast<size_t>(l) * n + j];
      }
    mk = std::move(next);
  }
  return c;
}

}  // namespace

int signature_at(const SeifertMatrix& v, const CircleSample& s) {
  int n = v.size();
  if (n == 0) return 0;
  HermitianSample h = hermitian_sample(v, s);
  // Clear denominators with a positive common multiple (signature-invariant).
  Int den(1);
  for (const auto& q : h.a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  for (const auto& q : h.b) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  int m = 2 * n;
  std::vector<Int> dbl(static_cast<size_t>(m) * m, Int(0));
  auto put = [&](int i, int j, Int val) { dbl[static_cast<size_t>(i) * m + j] = std::move(val); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat a = h.A(i, j) * Rat(den);
      a.canonicalize();
      Rat b = h.B(i, j) * Rat(den);
      b.canonicalize();
      if (a.get_den() != 1 || b.get_den() != 1)
        fail(errc::internal_contradiction, "denominator clearing failed");
      put(i, j, a.get_num());
      put(n + i, n + j, a.get_num());
      put(i, n + j, -b.get_num());
      put(n + i, j, b.get_num());
    }
  std::vector<Int> c = char_poly(dbl, m);
  // Ascending coefficients of det(xI - M).
  std::vector<Int> asc(c.rbegin(), c.rend());
  size_t val = 0;
  while (val < asc.size() && sgn(asc[val]) == 0) ++val;
  std::vector<Int> stripped(asc.begin() + val, asc.end());
  int deg = static_cast<int>(stripped.size()) - 1;
  int pos = count_sign_changes(stripped);
  std::vector<Int> neg_arg = stripped;
  for (size_t i = 1; i < neg_arg.size(); i += 2) neg_arg[i] = -neg_arg[i];
  int neg = count_sign_changes(neg_arg);
  if (pos + neg != deg || pos % 2 != 0 || neg % 2 != 0)
    fail(errc::internal_contradiction, "Descartes count mismatch on a real-rooted polynomial");
  return (pos - neg) / 2;
}

SignatureReport signature_report(const SeifertMatrix& v) {
  SignatureReport rep;
  IntPoly delta = alexander(v);
  std::vector<CirclePoint> candidates;
  if (delta.degree() > 0) {
    Factorization fact = factor(delta);
    for (const auto& [irr, exp] : fact.factors) {
      if (irr.degree() % 2 != 0) continue;      // no roots on the open upper arc
      if (!is_symmetric(irr)) continue;         // reciprocal-paired factors, no circle roots
      for (auto& p : conjugates_on_upper(irr)) candidates.push_back(std::move(p));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const CirclePoint& a, const CirclePoint& b) { return cmp_by_argument(a, b) < 0; });
  }
  size_t k = candidates.size();
  std::vector<ArcEndpoint> ends;
  ends.reserve(k + 2);
  ends.push_back(ArcEndpoint::one());
  for (const auto& p : candidates) ends.push_back(ArcEndpoint::at(p));
  ends.push_back(ArcEndpoint::minus_one());
  rep.arc_samples.reserve(k + 1);
  rep.arc_values.reserve(k + 1);
  for (size_t i = 0; i + 1 < ends.size(); ++i) {
    CircleSample s = sample_in_arc(ends[i], ends[i + 1]);
    rep.arc_samples.push_back(s.s());
    rep.arc_values.push_back(signature_at(v, s));
  }
  if (rep.arc_values.front() != 0)
    fail(errc::internal_contradiction, "signature near 1 is nonzero for a knot Seifert matrix");
  std::vector<JumpPoint> jumps;
  for (size_t i = 0; i < k; ++i) {
    long long before = rep.arc_values[i];
    long long after = rep.arc_values[i + 1];
    if ((after - before) % 2 != 0)
      fail(errc::internal_contradiction, "odd arc-value difference");
    long long jump = (after - before) / 2;
    rep.points.push_back({candidates[i], before, after, (before + after) / 2, jump});
    if (jump != 0) jumps.push_back({candidates[i], jump});
  }
  rep.function = StepFunction(0, std::move(jumps));
  return rep;
}

StepFunction signature_function(const SeifertMatrix& v) { return signature_report(v).function; }

}  // namespace knotsig
