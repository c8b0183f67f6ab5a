#include "knotsig/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace knotsig {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::odd_degree_symmetric: return "OddDegreeSymmetric";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::no_root_in_interval: return "NoRootInInterval";
    case errc::multiple_roots_in_interval: return "MultipleRootsInInterval";
    case errc::empty_arc: return "EmptyArc";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::not_knot_seifert: return "NotKnotSeifert";
    case errc::not_admissible: return "NotAdmissible";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::internal_contradiction: return "InternalContradiction";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  strip();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (sgn(c) != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(Int c, int deg) {
  IntPoly p;
  if (sgn(c) != 0) {
    p.coeffs_.assign(deg + 1, Int(0));
    p.coeffs_[deg] = std::move(c);
  }
  return p;
}

void IntPoly::strip() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Int& IntPoly::leading() const {
  if (is_zero()) fail(errc::invalid_argument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
  return coeffs_[i];
}

Int IntPoly::operator()(const Int& x) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

int IntPoly::sign_at(const Rat& x) const { return sgn((*this)(x)); }

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return IntPoly();
  std::vector<Int> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Int(static_cast<long>(i)) * coeffs_[i];
  return IntPoly(std::move(d));
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Int> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / g;
  return IntPoly(std::move(out));
}

int IntPoly::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  return 0;
}

IntPoly IntPoly::shifted_down(int k) const {
  if (k == 0) return *this;
  if (k < 0 || k > degree() + 1) fail(errc::invalid_argument, "shifted_down out of range");
  std::vector<Int> out(coeffs_.begin() + k, coeffs_.end());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::reciprocal() const {
  std::vector<Int> out(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly operator*(const Int& c, const IntPoly& p) {
  if (sgn(c) == 0) return IntPoly();
  std::vector<Int> out(p.coeffs_.size());
  for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
  return IntPoly(std::move(out));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Int a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool try_divide(const IntPoly& num, const IntPoly& den, IntPoly& quot) {
  if (den.is_zero()) fail(errc::invalid_argument, "division by zero polynomial");
  if (num.is_zero()) {
    quot = IntPoly();
    return true;
  }
  if (num.degree() < den.degree()) return false;
  std::vector<Int> rem = num.coeffs();
  std::vector<Int> q(num.degree() - den.degree() + 1, Int(0));
  const Int& lc = den.leading();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Int& top = rem[i + den.degree()];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    q[i] = top / lc;
    for (int j = 0; j <= den.degree(); ++j) rem[i + j] -= q[i] * den.coeff(j);
  }
  for (const auto& c : rem)
    if (sgn(c) != 0) return false;
  quot = IntPoly(std::move(q));
  return true;
}

IntPoly sturm_negated_remainder(const IntPoly& a, const IntPoly& b) {
  // Fraction-free remainder of a by b, returned primitive, negated, with the
  // sign the true rational value -rem(a, b) has (scaling is always positive).
  IntPoly r = a;
  const Int& lc = b.leading();
  long scale_steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Int top = r.leading();
    r = lc * r - IntPoly::monomial(top, shift) * b;
    ++scale_steps;
    if (!r.is_zero()) {
      Int c = r.content();
      if (c > 1) {
        std::vector<Int> reduced(r.coeffs().size());
        for (size_t i = 0; i < reduced.size(); ++i) reduced[i] = r.coeffs()[i] / c;
        r = IntPoly(std::move(reduced));
      }
    }
  }
  if (r.is_zero()) return r;
  int rem_sign = sgn(r.leading());
  if (sgn(lc) < 0 && (scale_steps & 1)) rem_sign = -rem_sign;
  IntPoly p = r.primitive_part();  // leading > 0
  if (rem_sign > 0) p = -p;        // want -rem
  return p;
}

IntPoly gcd_poly(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.is_zero() ? IntPoly() : a.primitive_part();
  IntPoly y = b.is_zero() ? IntPoly() : b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  while (!y.is_zero()) {
    IntPoly r = sturm_negated_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  return x.primitive_part();
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly acc = IntPoly::constant(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

IntPoly shifted_arg(const IntPoly& p, const Int& c) {
  IntPoly acc;
  IntPoly shift{std::vector<Int>{c, Int(1)}};
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * shift;
    acc += IntPoly::constant(p.coeff(i));
  }
  return acc;
}

int compare(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = 0; i <= a.degree(); ++i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

IntPoly normalize_alexander(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_argument, "normalize_alexander of zero polynomial");
  return p.shifted_down(p.valuation()).primitive_part();
}

bool is_symmetric(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_argument, "is_symmetric of zero polynomial");
  const auto& c = p.coeffs();
  size_t n = c.size();
  for (size_t i = 0; i < n / 2; ++i)
    if (c[i] != c[n - 1 - i]) return false;
  return true;
}

bool is_alexander(const IntPoly& p) {
  if (p.is_zero()) return false;
  IntPoly q = normalize_alexander(p);
  if (!is_symmetric(q)) return false;
  Int at_one = q(Int(1));
  return at_one == 1 || at_one == -1;
}

IntPoly trace_polynomial(const IntPoly& p) {
  if (p.is_zero()) fail(errc::invalid_argument, "trace_polynomial of zero polynomial");
  if (!is_symmetric(p)) fail(errc::not_symmetric, "trace_polynomial requires a symmetric polynomial");
  if (p.degree() % 2 != 0)
    fail(errc::odd_degree_symmetric, "odd-degree symmetric polynomial (root at -1 or 1): " + p.str());
  int d = p.degree() / 2;
  // p(t)/t^d = c_d + sum_{j>=1} c_{d+j} (t^j + t^-j) and t^j + t^-j = C_j(x),
  // C_0 = 2, C_1 = x, C_{j+1} = x C_j - C_{j-1}.
  IntPoly q = IntPoly::constant(p.coeff(d));
  IntPoly c_prev{2};
  IntPoly c_cur{0, 1};
  IntPoly x{0, 1};
  for (int j = 1; j <= d; ++j) {
    q += p.coeff(d + j) * c_cur;
    IntPoly c_next = x * c_cur - c_prev;
    c_prev = std::move(c_cur);
    c_cur = std::move(c_next);
  }
  return q;
}

IntPoly expand_trace(const IntPoly& q) {
  if (q.is_zero()) return IntPoly();
  int d = q.degree();
  IntPoly result;
  IntPoly t2p1{1, 0, 1};
  for (int j = 0; j <= d; ++j) result += IntPoly::monomial(q.coeff(j), d - j) * pow(t2p1, static_cast<unsigned>(j));
  return result;
}

}  // namespace knotsig
