#include "knotsig/stepfn.hpp"

namespace knotsig {

StepFunction::StepFunction(long long initial_value, std::vector<JumpPoint> jumps)
    : initial_(initial_value), jumps_(std::move(jumps)) {
  for (const auto& j : jumps_)
    if (j.jump == 0) fail(errc::invalid_argument, "step function jumps must be nonzero");
  for (size_t i = 0; i + 1 < jumps_.size(); ++i)
    if (cmp_by_argument(jumps_[i].point, jumps_[i + 1].point) >= 0)
      fail(errc::invalid_argument, "step function jumps must be strictly increasing in argument");
}

long long evaluate(const StepFunction& f, const CirclePoint& at) {
  long long value = f.initial_value();
  for (const auto& j : f.jumps()) {
    int c = cmp_by_argument(at, j.point);
    if (c == 0) return value + j.jump;
    if (c < 0) return value;  // `at` sits on the arc before this jump
    value += 2 * j.jump;
  }
  return value;
}

long long evaluate_at_x(const StepFunction& f, const Rat& x) {
  if (x < Rat(-2) || x > Rat(2)) fail(errc::invalid_argument, "x must lie in [-2, 2]");
  long long value = f.initial_value();
  for (const auto& j : f.jumps()) {
    int c = cmp_x_to_rational(j.point, x);  // sign of (point.x - x)
    if (c == 0) return value + j.jump;
    if (c < 0) return value;  // point.x < x: the jump lies past x in argument order
    value += 2 * j.jump;
  }
  return value;
}

long long evaluate_at_minus_one(const StepFunction& f) {
  long long value = f.initial_value();
  for (const auto& j : f.jumps()) value += 2 * j.jump;
  return value;
}

long long jump_at(const StepFunction& f, const CirclePoint& p) {
  for (const auto& j : f.jumps())
    if (equals(j.point, p)) return j.jump;
  return 0;
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  std::vector<JumpPoint> merged;
  size_t i = 0, k = 0;
  const auto& a = f.jumps();
  const auto& b = g.jumps();
  while (i < a.size() || k < b.size()) {
    if (i == a.size()) {
      merged.push_back(b[k++]);
    } else if (k == b.size()) {
      merged.push_back(a[i++]);
    } else {
      int c = cmp_by_argument(a[i].point, b[k].point);
      if (c < 0) {
        merged.push_back(a[i++]);
      } else if (c > 0) {
        merged.push_back(b[k++]);
      } else {
        long long sum = a[i].jump + b[k].jump;
        if (sum != 0) merged.push_back({a[i].point, sum});
        ++i;
        ++k;
      }
    }
  }
  return StepFunction(f.initial_value() + g.initial_value(), std::move(merged));
}

StepFunction negate(const StepFunction& f) {
  std::vector<JumpPoint> jumps = f.jumps();
  for (auto& j : jumps) j.jump = -j.jump;
  return StepFunction(-f.initial_value(), std::move(jumps));
}

bool equals(const StepFunction& f, const StepFunction& g) {
  if (f.initial_value() != g.initial_value()) return false;
  if (f.jumps().size() != g.jumps().size()) return false;
  for (size_t i = 0; i < f.jumps().size(); ++i) {
    if (f.jumps()[i].jump != g.jumps()[i].jump) return false;
    if (!equals(f.jumps()[i].point, g.jumps()[i].point)) return false;
  }
  return true;
}

}  // namespace knotsig
