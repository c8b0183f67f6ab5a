#pragma once

#include "knotsig/seifert.hpp"
#include "knotsig/stepfn.hpp"

namespace knotsig {

/// Exact signature of the hermitian matrix W(omega(s)). Computed through the
/// real symmetric double M = [[A, -B], [B, A]] (signature(M) = 2 sig(W)): the
/// characteristic polynomial of M is exact, its zero roots are stripped, and
/// positive/negative root counts come from Descartes' rule, which is exact
/// for real-rooted polynomials.
int signature_at(const SeifertMatrix& v, const CircleSample& s);

/// Full audit of a signature function computation.
struct SignatureReport {
  StepFunction function;
  std::vector<Rat> arc_samples;     // sample parameter s per open arc
  std::vector<long long> arc_values;
  struct PointLimits {
    CirclePoint point;
    long long before = 0;   // limit from the smaller-argument side
    long long after = 0;    // limit from the larger-argument side
    long long balanced = 0;
    long long jump = 0;     // 0 when the candidate is not a discontinuity
  };
  std::vector<PointLimits> points;  // every candidate (Alexander root), dropped ones included
};

SignatureReport signature_report(const SeifertMatrix& v);

/// The balanced signature function: initial value 0 and the nonzero jumps at
/// roots of the Alexander polynomial on the open upper circle.
StepFunction signature_function(const SeifertMatrix& v);

}  // namespace knotsig
