#pragma once

#include "knotsig/admissibility.hpp"
#include "knotsig/seifert.hpp"
#include "knotsig/signature.hpp"

namespace knotsig {

struct PoolEntry {
  SeifertMatrix seifert;
  StepFunction function;
  long long multiplicity;  // negative: that many mirrored copies
};

/// Constructive witness: a Seifert matrix, its recomputed signature function
/// (equal to the realized target), and the audited block decomposition.
struct RealizationCertificate {
  SeifertMatrix seifert;
  StepFunction recomputed;
  std::vector<PoolEntry> pool;
};

struct RealizeBudget {
  double seconds = 60.0;
  RealizeOptions alexander;        // options for per-block realize_alexander calls
  long alt_iterations = 200000;    // randomized re-realization budget per minimal polynomial
  int alt_patterns_cap = 6;        // distinct jump patterns collected per minimal polynomial
};

/// Realize an admissible step function as a Seifert matrix. Pool strategy:
/// realized blocks for each jump minimal polynomial, alternative seeded
/// realizations of the same polynomials for jump-sign control, dense quartic
/// blocks in the gaps between support points (and past the last), product
/// blocks, and an exact integer solve of the jump-matching system; the pool
/// grows until the budget runs out. Throws not_admissible or
/// budget_exhausted (with the final system in the message).
RealizationCertificate realize(const StepFunction& target, const RealizeBudget& budget = {});

/// Recomputes everything from scratch, trusting only sigfunc: the recomputed
/// function of cert.seifert must equal the target, the stored pool functions
/// must match their matrices, and the block-sum composition must reproduce
/// cert.seifert exactly.
bool verify_certificate(const RealizationCertificate& cert, const StepFunction& target);

}  // namespace knotsig
