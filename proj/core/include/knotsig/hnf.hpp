#pragma once

#include <optional>
#include <vector>

#include "knotsig/intpoly.hpp"

namespace knotsig {

struct IntegerSolution {
  std::vector<Int> x;
  std::vector<std::vector<Int>> kernel;  // basis of the homogeneous solutions
};

/// Solve A x = b over the integers by column Hermite reduction; the returned
/// particular solution is size-reduced against the kernel basis. Empty when
/// no integer solution exists.
std::optional<IntegerSolution> solve_integer_system(const std::vector<std::vector<Int>>& a,
                                                    const std::vector<Int>& b);

}  // namespace knotsig
