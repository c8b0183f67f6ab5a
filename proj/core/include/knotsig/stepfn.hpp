#pragma once

#include <vector>

#include "knotsig/circle.hpp"

namespace knotsig {

struct JumpPoint {
  CirclePoint point;
  long long jump;  // nonzero
};

/// Balanced, conjugate-symmetric integer step function on the circle, stored
/// on the upper arc only. On the open arc after the i-th jump point the value
/// is initial + 2 * sum_{j<=i} jump_j; at the i-th point it is the two-sided
/// average, previous arc value + jump_i. The value at -1 is the last arc
/// value; the lower semicircle is implied by sigma(conj w) = sigma(w).
class StepFunction {
public:
  StepFunction() = default;  // constant 0
  StepFunction(long long initial_value, std::vector<JumpPoint> jumps);

  long long initial_value() const { return initial_; }
  const std::vector<JumpPoint>& jumps() const { return jumps_; }
  bool is_constant_zero() const { return initial_ == 0 && jumps_.empty(); }

private:
  long long initial_ = 0;
  std::vector<JumpPoint> jumps_;
};

/// Balanced value at an algebraic point (arc value off the jump set).
long long evaluate(const StepFunction& f, const CirclePoint& at);

/// Balanced value at the circle point with rational x = 2 cos(theta),
/// -2 <= x <= 2; x = 2 gives the value at 1, x = -2 the value at -1.
long long evaluate_at_x(const StepFunction& f, const Rat& x);

long long evaluate_at_minus_one(const StepFunction& f);

/// Stored jump, or 0 off the jump set.
long long jump_at(const StepFunction& f, const CirclePoint& p);

/// Pointwise sum; jump lists merge with cancellation.
StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction negate(const StepFunction& f);
bool equals(const StepFunction& f, const StepFunction& g);

}  // namespace knotsig
