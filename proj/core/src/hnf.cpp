#include "knotsig/hnf.hpp"

#include <algorithm>

namespace knotsig {

std::optional<IntegerSolution> solve_integer_system(const std::vector<std::vector<Int>>& a,
                                                    const std::vector<Int>& b) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols) fail(errc::invalid_argument, "ragged matrix");
  if (static_cast<int>(b.size()) != rows) fail(errc::invalid_argument, "rhs size mismatch");

  // Column echelon (Hermite-style) form: H = A * U with U unimodular.
  std::vector<std::vector<Int>> h = a;
  std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, Int(0)));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;

  auto col_addmul = [&](int dst, int src, const Int& q) {
    if (sgn(q) == 0) return;
    for (int r = 0; r < rows; ++r) h[r][dst] -= q * h[r][src];
    for (int r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(h[r][i], h[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(u[r][i], u[r][j]);
  };
  auto col_negate = [&](int i) {
    for (int r = 0; r < rows; ++r) h[r][i] = -h[r][i];
    for (int r = 0; r < cols; ++r) u[r][i] = -u[r][i];
  };

  std::vector<std::pair<int, int>> pivots;  // (row, col)
  int next_col = 0;
  for (int r = 0; r < rows && next_col < cols; ++r) {
    // Euclid across columns next_col..cols-1 on row r.
    while (true) {
      int best = -1;
      for (int j = next_col; j < cols; ++j) {
        if (sgn(h[r][j]) == 0) continue;
        if (best < 0 || abs(h[r][j]) < abs(h[r][best])) best = j;
      }
      if (best < 0) break;
      bool reduced_all = true;
      for (int j = next_col; j < cols; ++j) {
        if (j == best || sgn(h[r][j]) == 0) continue;
        Int q;
        // Round-to-nearest quotient keeps entries small.
        Int num = h[r][j], den = h[r][best];
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Int rem = num - q * den;
        if (2 * rem > abs(den)) q += sgn(den) > 0 ? 1 : -1;
        col_addmul(j, best, q);
        if (sgn(h[r][j]) != 0) reduced_all = false;
      }
      if (reduced_all) {
        col_swap(next_col, best);
        if (sgn(h[r][next_col]) < 0) col_negate(next_col);
        pivots.push_back({r, next_col});
        ++next_col;
        break;
      }
    }
  }

  // Forward substitution along pivot columns.
  std::vector<Int> residual = b;
  std::vector<Int> y(cols, Int(0));
  for (const auto& [pr, pc] : pivots) {
    if (!mpz_divisible_p(residual[pr].get_mpz_t(), h[pr][pc].get_mpz_t())) return std::nullopt;
    Int q = residual[pr] / h[pr][pc];
    y[pc] = q;
    if (sgn(q) != 0)
      for (int r = 0; r < rows; ++r) residual[r] -= q * h[r][pc];
  }
  for (const auto& v : residual)
    if (sgn(v) != 0) return std::nullopt;

  IntegerSolution sol;
  sol.x.assign(cols, Int(0));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j)
      if (sgn(y[j]) != 0) sol.x[i] += u[i][j] * y[j];
  for (int j = static_cast<int>(pivots.size()); j < cols; ++j) {
    std::vector<Int> k(cols);
    for (int i = 0; i < cols; ++i) k[i] = u[i][j];
    sol.kernel.push_back(std::move(k));
  }

  // Size-reduce the particular solution against the kernel.
  for (int pass = 0; pass < 4; ++pass) {
    bool changed = false;
    for (const auto& k : sol.kernel) {
      Int dot(0), norm(0);
      for (int i = 0; i < cols; ++i) {
        dot += sol.x[i] * k[i];
        norm += k[i] * k[i];
      }
      if (sgn(norm) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), dot.get_mpz_t(), norm.get_mpz_t());
      Int rem = dot - q * norm;
      if (2 * rem > norm) q += 1;
      if (sgn(q) != 0) {
        for (int i = 0; i < cols; ++i) sol.x[i] -= q * k[i];
        changed = true;
      }
    }
    if (!changed) break;
  }
  return sol;
}

}  // namespace knotsig
