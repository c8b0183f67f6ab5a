#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "float_oracle.hpp"
#include "knotsig/signature.hpp"

using namespace knotsig;

namespace {

SeifertMatrix from_rows(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Int>> r;
  for (auto& row : rows) {
    std::vector<Int> out;
    for (long v : row) out.emplace_back(v);
    r.push_back(std::move(out));
  }
  return SeifertMatrix::validate(r);
}

SeifertMatrix trefoil() { return from_rows({{-1, 1}, {0, -1}}); }
SeifertMatrix fig8() { return from_rows({{-1, 1}, {0, 1}}); }
SeifertMatrix t25() {
  return from_rows({{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
}

}  // namespace

TEST_CASE("signature_at: trefoil spot values") {
  CHECK(signature_at(trefoil(), CircleSample(Rat(2))) == -2);     // x = -6/5, past the jump
  CHECK(signature_at(trefoil(), CircleSample(Rat(1, 2))) == 0);   // x = 6/5, before the jump
  CHECK(signature_at(trefoil(), CircleSample(Rat(1))) == -2);     // omega = i
  CHECK(signature_at(SeifertMatrix::unknot(), CircleSample(Rat(1))) == 0);
}

TEST_CASE("signature_at: even, bounded, rank parity") {
  for (int trial = 0; trial < 200; ++trial) {
    SeifertMatrix v = random_seifert(1 + trial % 4, 3, 424200 + trial);
    CircleSample s(Rat(1 + trial % 9, 1 + (trial * 7) % 6));
    int sig = signature_at(v, s);
    CHECK(sig % 2 == 0);
    CHECK(std::abs(sig) <= v.size());
  }
}

TEST_CASE("signature_function: trefoil") {
  SignatureReport rep = signature_report(trefoil());
  const StepFunction& f = rep.function;
  CHECK(f.initial_value() == 0);
  REQUIRE(f.jumps().size() == 1);
  CHECK(f.jumps()[0].jump == -1);
  CHECK(cmp_x_to_rational(f.jumps()[0].point, Rat(1)) == 0);
  CHECK(evaluate_at_minus_one(f) == -2);
  CHECK(evaluate(f, f.jumps()[0].point) == -1);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].before == 0);
  CHECK(rep.points[0].after == -2);
  CHECK(rep.points[0].balanced == -1);
  CHECK(rep.points[0].after - rep.points[0].before == 2 * rep.points[0].jump);
  CHECK(rep.arc_values.front() == 0);
}

TEST_CASE("signature_function: figure-eight is constant zero") {
  StepFunction f = signature_function(fig8());
  CHECK(f.is_constant_zero());
  CHECK(evaluate_at_minus_one(f) == 0);
}

TEST_CASE("signature_function: unknot") {
  CHECK(signature_function(SeifertMatrix::unknot()).is_constant_zero());
}

TEST_CASE("signature_function: T(2,5)") {
  StepFunction f = signature_function(t25());
  CHECK(f.initial_value() == 0);
  REQUIRE(f.jumps().size() == 2);
  CHECK(f.jumps()[0].jump == -1);
  CHECK(f.jumps()[1].jump == -1);
  CHECK(evaluate_at_minus_one(f) == -4);
  // Jump points at x = (1 + sqrt 5)/2 and (1 - sqrt 5)/2.
  CHECK(cmp_x_to_rational(f.jumps()[0].point, Rat(1)) > 0);
  CHECK(cmp_x_to_rational(f.jumps()[1].point, Rat(0)) < 0);
  CHECK(cmp_x_to_rational(f.jumps()[1].point, Rat(-1)) > 0);
}

TEST_CASE("evaluate: reference cases") {
  StepFunction f = signature_function(trefoil());
  CHECK(evaluate_at_x(f, Rat(3, 2)) == 0);
  CHECK(evaluate_at_x(f, Rat(199, 100)) == 0);
  CHECK(evaluate_at_x(f, Rat(1)) == -1);    // exactly on the jump
  CHECK(evaluate_at_x(f, Rat(0)) == -2);
  CHECK(evaluate_at_x(f, Rat(-2)) == -2);
  CHECK(evaluate_at_x(f, Rat(2)) == 0);
  CirclePoint phi = make_point(IntPoly{1, -1, 1, -1, 1}, {Rat(3, 2), Rat(2)});
  CHECK(evaluate(f, phi) == 0);  // arc value before the jump
}

TEST_CASE("jump_at: reference cases") {
  StepFunction f = signature_function(trefoil());
  CirclePoint pt = f.jumps()[0].point;
  CHECK(jump_at(f, pt) == -1);
  CirclePoint phi = make_point(IntPoly{1, -1, 1, -1, 1}, {Rat(3, 2), Rat(2)});
  CHECK(jump_at(f, phi) == 0);
  StepFunction m = signature_function(mirror(trefoil()));
  CHECK(jump_at(m, pt) == 1);
}

TEST_CASE("add / negate / equals") {
  StepFunction f = signature_function(t25());
  CHECK(add(f, negate(f)).is_constant_zero());
  CHECK(equals(f, f));
  CHECK_FALSE(equals(f, negate(f)));
  CHECK(equals(negate(negate(f)), f));
}

TEST_CASE("cancelling connected sums drop the candidate discontinuity") {
  // Square-knot pattern: Delta = (t^2 - t + 1)^2 but the jumps cancel, so the
  // candidate at x = 1 is not a discontinuity and must be dropped.
  SeifertMatrix square = block_sum(trefoil(), mirror(trefoil()));
  CHECK(alexander(square) == IntPoly{1, -1, 1} * IntPoly{1, -1, 1});
  SignatureReport rep = signature_report(square);
  CHECK(rep.function.is_constant_zero());
  REQUIRE(rep.points.size() == 1);  // the candidate is still audited
  CHECK(rep.points[0].jump == 0);
  CHECK(rep.points[0].before == rep.points[0].after);

  // Granny-knot pattern: same polynomial, jumps reinforce to -2.
  SeifertMatrix granny = block_sum(trefoil(), trefoil());
  StepFunction g = signature_function(granny);
  REQUIRE(g.jumps().size() == 1);
  CHECK(g.jumps()[0].jump == -2);
  CHECK(evaluate_at_minus_one(g) == -4);
}

TEST_CASE("homomorphism: block sums add, mirrors negate") {
  for (int trial = 0; trial < 25; ++trial) {
    SeifertMatrix a = random_seifert(1 + trial % 3, 2, 60600 + trial);
    SeifertMatrix b = random_seifert(1 + (trial * 5) % 3, 2, 70700 + trial);
    StepFunction fa = signature_function(a);
    StepFunction fb = signature_function(b);
    CHECK(equals(signature_function(block_sum(a, b)), add(fa, fb)));
    CHECK(equals(signature_function(mirror(a)), negate(fa)));
  }
}

TEST_CASE("arc values are even; value at a jump has the jump's parity") {
  for (int trial = 0; trial < 40; ++trial) {
    SeifertMatrix v = random_seifert(1 + trial % 3, 3, 123000 + trial);
    SignatureReport rep = signature_report(v);
    for (long long value : rep.arc_values) CHECK(value % 2 == 0);
    for (const auto& p : rep.points) {
      CHECK((p.balanced - p.jump) % 2 == 0);
      CHECK(p.after - p.before == 2 * p.jump);
    }
  }
}

TEST_CASE("exact signature matches the float eigenvalue oracle") {
  std::mt19937_64 rng(0xF10A7);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    SeifertMatrix v = random_seifert(1 + static_cast<int>(rng() % 4), 3, 888000 + trial);
    CircleSample s(Rat(1 + static_cast<long>(rng() % 29), 1 + static_cast<long>(rng() % 17)));
    auto oracle = float_signature(v, s, 1e-6);
    if (!oracle) continue;
    ++compared;
    CHECK(signature_at(v, s) == *oracle);
  }
  CHECK(compared > 900);  // the untrusted region must stay rare
}
