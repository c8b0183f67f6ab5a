#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotsig/stepfn.hpp"

namespace knotsig {

/// Per-condition verdicts for a candidate step function. Condition 1
/// (conjugate symmetry) and balancedness hold structurally: the upper-arc
/// representation cannot express a violation.
struct AdmissibilityReport {
  bool condition1 = true;
  std::string condition1_note;

  bool condition2 = false;  // value 0 near 1

  struct Condition3Item {
    size_t jump_index = 0;
    IntPoly min_poly;
    Int value_at_one;
    bool pass = false;
  };
  std::vector<Condition3Item> condition3;
  bool condition3_pass = true;

  struct Condition4Item {
    IntPoly min_poly;
    std::vector<std::pair<CirclePoint, long long>> conjugate_jumps;  // implicit zeros listed
    bool pass = false;
  };
  std::vector<Condition4Item> condition4;
  bool condition4_pass = true;

  bool overall = false;
};

/// Theorem-style admissibility check: condition 2 (vanishing near 1),
/// condition 3 (every jump minimal polynomial is an irreducible Alexander
/// polynomial) and condition 4 (jumps constant mod 2 across each Galois
/// conjugate class on the upper circle, unlisted conjugates jumping 0).
AdmissibilityReport check(const StepFunction& f);

}  // namespace knotsig
