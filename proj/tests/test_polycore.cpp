#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "knotsig/factor.hpp"
#include "knotsig/sturm.hpp"

using namespace knotsig;

namespace {

std::mt19937_64 rng(0xA5EEDULL);

long rand_in(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }

// Random palindromic polynomial of degree 2g with |p(1)| = 1: pick the outer
// coefficients freely and solve for the middle one.
IntPoly random_admissible(int g, long bound) {
  std::vector<Int> c(2 * g + 1, Int(0));
  Int sum = 0;
  for (int i = 0; i < g; ++i) {
    long v = rand_in(-bound, bound);
    if (i == 0 && v == 0) v = 1;
    c[i] = v;
    c[2 * g - i] = v;
    sum += 2 * v;
  }
  c[g] = (rng() % 2 ? Int(1) : Int(-1)) - sum;
  return IntPoly(std::move(c));
}

IntPoly refactor_product(const Factorization& f) {
  IntPoly acc = IntPoly::constant(f.content);
  for (const auto& [p, e] : f.factors) acc = acc * pow(p, static_cast<unsigned>(e));
  return acc;
}

}  // namespace

TEST_CASE("normalize_alexander canonical form") {
  CHECK(normalize_alexander(IntPoly{-1, 3, -1}) == IntPoly{1, -3, 1});
  CHECK(normalize_alexander(IntPoly{0, 0, -1, 1}) == IntPoly{-1, 1});
  CHECK(normalize_alexander(IntPoly{1, -1, 1}) == IntPoly{1, -1, 1});
  // Idempotent on a batch of random inputs.
  for (int i = 0; i < 50; ++i) {
    IntPoly p = random_admissible(rand_in(1, 4), 4);
    IntPoly n = normalize_alexander(p);
    CHECK(normalize_alexander(n) == n);
    CHECK(n.leading() > 0);
    CHECK(n.coeff(0) != 0);
    CHECK(n.content() == 1);
  }
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(IntPoly{1, -1, 1}));
  CHECK(is_symmetric(IntPoly{1, -3, 1}));
  CHECK_FALSE(is_symmetric(IntPoly{3, 2, 1}));
}

TEST_CASE("is_alexander") {
  CHECK(is_alexander(IntPoly{1, -1, 1}));
  CHECK_FALSE(is_alexander(IntPoly{1, 1, 1, 1, 1}));  // value 5 at t = 1
  CHECK(is_alexander(IntPoly{2, -3, 2}));
  CHECK_FALSE(is_alexander(IntPoly{}));
}

TEST_CASE("alexander polynomials are odd at -1") {
  for (int i = 0; i < 1000; ++i) {
    IntPoly p = random_admissible(rand_in(1, 5), 5);
    REQUIRE(is_alexander(p));
    Int at = p(Int(-1));
    CHECK(at % 2 != 0);
  }
}

TEST_CASE("factor: reference cases") {
  // t^4 - t^3 - t + 1 = (t-1)^2 (t^2+t+1)
  Factorization f = factor(IntPoly{1, -1, 0, -1, 1});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.content == 1);
  CHECK(f.factors[0].first == IntPoly{-1, 1});
  CHECK(f.factors[0].second == 2);
  CHECK(f.factors[1].first == IntPoly{1, 1, 1});
  CHECK(f.factors[1].second == 1);
  CHECK(refactor_product(f) == IntPoly{1, -1, 0, -1, 1});

  Factorization g = factor(IntPoly{1, -1, 1});
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0] == std::pair<IntPoly, int>{IntPoly{1, -1, 1}, 1});

  Factorization c = factor(IntPoly{6});
  CHECK(c.content == 6);
  CHECK(c.factors.empty());
}

TEST_CASE("factor: round trip on random products") {
  for (int trial = 0; trial < 60; ++trial) {
    // Build a product of small polynomials, factor it, re-multiply.
    IntPoly p = IntPoly::constant(rand_in(1, 3));
    int parts = static_cast<int>(rand_in(1, 3));
    for (int i = 0; i < parts; ++i) {
      int d = static_cast<int>(rand_in(1, 3));
      std::vector<Int> cs(d + 1);
      for (int k = 0; k <= d; ++k) cs[k] = rand_in(-3, 3);
      if (sgn(cs[d]) == 0) cs[d] = 1;
      IntPoly q{std::move(cs)};
      int e = static_cast<int>(rand_in(1, 2));
      p = p * pow(q, static_cast<unsigned>(e));
    }
    Factorization f = factor(p);
    CHECK(refactor_product(f) == p);
    for (size_t i = 0; i + 1 < f.factors.size(); ++i)
      CHECK(compare(f.factors[i].first, f.factors[i + 1].first) < 0);
    for (const auto& [irr, e] : f.factors) {
      CHECK(irr.leading() > 0);
      CHECK(irr.content() == 1);
    }
  }
}

TEST_CASE("factor: cyclotomic and palindromic stress") {
  // t^12 - 1 has the divisors' cyclotomics as factors.
  std::vector<Int> c(13, Int(0));
  c[0] = -1;
  c[12] = 1;
  Factorization f = factor(IntPoly{std::move(c)});
  CHECK(f.factors.size() == 6);  // Phi_1, Phi_2, Phi_3, Phi_4, Phi_6, Phi_12
  IntPoly product = refactor_product(f);
  CHECK(product.coeff(12) == 1);
  CHECK(product.coeff(0) == -1);
  for (int n : {1, 2, 3, 4, 6, 12}) {
    IntPoly phi = cyclotomic(n);
    bool found = false;
    for (const auto& [irr, e] : f.factors) found = found || irr == phi;
    CHECK(found);
  }
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(IntPoly{1, -1, 1}));
  CHECK(is_irreducible(IntPoly{2, -1, 2}));
  CHECK_FALSE(is_irreducible(IntPoly{1, 2, 1}));
  CHECK_FALSE(is_irreducible(IntPoly{1}));
  // The dense-quartic family member used elsewhere.
  CHECK(is_irreducible(IntPoly{1, 1, -3, 1, 1}));
}

TEST_CASE("trace_polynomial: reference cases and round trip") {
  CHECK(trace_polynomial(IntPoly{1, -1, 1}) == IntPoly{-1, 1});
  CHECK(trace_polynomial(IntPoly{1, -1, 1, -1, 1}) == IntPoly{-1, -1, 1});
  CHECK(trace_polynomial(IntPoly{1, 0, 1}) == IntPoly{0, 1});
  CHECK_THROWS_AS((void)trace_polynomial(IntPoly{1, 1}), error);

  for (int trial = 0; trial < 100; ++trial) {
    IntPoly p = random_admissible(rand_in(1, 6), 4);
    IntPoly q = trace_polynomial(p);
    CHECK(expand_trace(q) == p);
  }
}

TEST_CASE("count_sign_changes") {
  CHECK(count_sign_changes({Int(1), Int(1), Int(1)}) == 0);
  CHECK(count_sign_changes({Int(1), Int(-1), Int(1)}) == 2);
  CHECK(count_sign_changes({Int(1), Int(0), Int(-2)}) == 1);
}

TEST_CASE("isolate_real_roots: golden ratio quadratic") {
  IntPoly p{-1, -1, 1};  // x^2 - x - 1
  auto roots = isolate_real_roots(p, Rat(-2), Rat(2));
  REQUIRE(roots.size() == 2);
  double lo0 = roots[0].lo.get_d(), hi0 = roots[0].hi.get_d();
  double lo1 = roots[1].lo.get_d(), hi1 = roots[1].hi.get_d();
  double phi_conj = (1.0 - std::sqrt(5.0)) / 2.0;
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(lo0 < phi_conj);
  CHECK(phi_conj < hi0);
  CHECK(lo1 < phi);
  CHECK(phi < hi1);
  CHECK(p.sign_at(roots[0].lo) * p.sign_at(roots[0].hi) < 0);
  CHECK(p.sign_at(roots[1].lo) * p.sign_at(roots[1].hi) < 0);
}

TEST_CASE("isolate_real_roots: linear cases") {
  auto one = isolate_real_roots(IntPoly{-1, 1}, Rat(-2), Rat(2));
  REQUIRE(one.size() == 1);
  CHECK(one[0].lo < 1);
  CHECK(Rat(1) < one[0].hi);
  CHECK(isolate_real_roots(IntPoly{-3, 1}, Rat(-2), Rat(2)).empty());
}

TEST_CASE("isolate_real_roots: repeated and endpoint roots") {
  // (x-1)^2 (x+1): roots 1 (double) and -1; isolate in (-1, 2) must skip the endpoint.
  IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1};
  auto roots = isolate_real_roots(p, Rat(-1), Rat(2));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].lo < 1);
  CHECK(Rat(1) < roots[0].hi);
  auto both = isolate_real_roots(p, Rat(-2), Rat(2));
  CHECK(both.size() == 2);
}

TEST_CASE("isolate count equals Sturm variation difference") {
  for (int trial = 0; trial < 60; ++trial) {
    int d = static_cast<int>(rand_in(1, 6));
    std::vector<Int> cs(d + 1);
    for (int k = 0; k <= d; ++k) cs[k] = rand_in(-5, 5);
    if (sgn(cs[d]) == 0) cs[d] = 1;
    IntPoly p{std::move(cs)};
    Rat lo(-3), hi(3);
    SturmChain chain = SturmChain::build(p);
    Rat a = lo, b = hi;
    // Perturb endpoints off roots, mirroring the isolation contract.
    while (chain.square_free().sign_at(a) == 0) a -= Rat(1, 7);
    while (chain.square_free().sign_at(b) == 0) b += Rat(1, 7);
    auto roots = isolate_real_roots(p, a, b);
    CHECK(static_cast<int>(roots.size()) == chain.count_half_open(a, b));
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
  }
}

TEST_CASE("refine_interval") {
  Interval iv = refine_interval(IntPoly{-1, 1}, {Rat(0), Rat(2)}, Rat(1, 8));
  CHECK(iv.width() <= Rat(1, 8));
  CHECK(iv.lo < 1);
  CHECK(Rat(1) < iv.hi);
  // Irrational root: x^2 - 2 on (0, 2).
  Interval sq = refine_interval(IntPoly{-2, 0, 1}, {Rat(0), Rat(2)}, Rat(1, 1024));
  CHECK(sq.width() <= Rat(1, 1024));
  double root = std::sqrt(2.0);
  CHECK(sq.lo.get_d() < root);
  CHECK(root < sq.hi.get_d());
}

TEST_CASE("circle-root factors of symmetric polynomials are symmetric") {
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly p = random_admissible(rand_in(1, 5), 3);
    Factorization f = factor(p);
    for (const auto& [irr, e] : f.factors) {
      if (irr == IntPoly{0, 1}) continue;
      if (is_symmetric(irr)) continue;
      // Non-symmetric irreducible factors must have no circle roots:
      // a circle root would be shared with the reciprocal polynomial.
      IntPoly rec = irr.reciprocal();
      IntPoly g = gcd_poly(irr, rec);
      CHECK(g.degree() == 0);
    }
  }
}

TEST_CASE("gcd and division helpers") {
  IntPoly a = IntPoly{-1, 1} * IntPoly{1, 1, 1};
  IntPoly b = IntPoly{-1, 1} * IntPoly{1, 0, 1};
  CHECK(gcd_poly(a, b) == IntPoly{-1, 1});
  IntPoly q;
  CHECK(try_divide(a, IntPoly{-1, 1}, q));
  CHECK(q == IntPoly{1, 1, 1});
  CHECK_FALSE(try_divide(a, IntPoly{1, 0, 1}, q));
}
