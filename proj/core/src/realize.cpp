#include "knotsig/realize.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "knotsig/hnf.hpp"

namespace knotsig {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool expired() const { return Clock::now() >= end; }
};

struct Pool {
  std::vector<SeifertMatrix> blocks;
  std::vector<StepFunction> functions;
  std::vector<IntPoly> block_polys;

  bool has(const IntPoly& p) const {
    return std::any_of(block_polys.begin(), block_polys.end(), [&](const IntPoly& q) { return q == p; });
  }
  void add(const IntPoly& p, const RealizeOptions& opts) {
    if (has(p)) return;
    SeifertMatrix v = realize_alexander(p, opts);
    functions.push_back(signature_function(v));
    blocks.push_back(std::move(v));
    block_polys.push_back(p);
  }
  void add_matrix(SeifertMatrix v, StepFunction f, IntPoly p) {
    blocks.push_back(std::move(v));
    functions.push_back(std::move(f));
    block_polys.push_back(std::move(p));
  }
};

std::uint64_t fnv64(const IntPoly& p) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& c : p.coeffs())
    for (char ch : c.get_str()) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
  return h;
}

// Jump-sign control: the deterministic block for a minimal polynomial has one
// particular jump pattern at its conjugates; seeded random re-realizations of
// the same polynomial supply blocks with other patterns (the analogue of the
// alternating-jump knots in the sufficiency construction).
void add_alternative_realizations(Pool& pool, const IntPoly& delta, const RealizeBudget& budget,
                                  const Deadline& dl) {
  std::vector<CirclePoint> conj = conjugates_on_upper(delta);
  if (conj.size() < 2) return;
  std::vector<std::vector<long long>> seen;
  for (size_t i = 0; i < pool.blocks.size(); ++i) {
    if (pool.block_polys[i] != delta) continue;
    std::vector<long long> pattern;
    for (const auto& p : conj) pattern.push_back(jump_at(pool.functions[i], p));
    seen.push_back(std::move(pattern));
  }
  int n = delta.degree();
  long bound = budget.alexander.max_entry;
  std::mt19937_64 rng(0xA17E12ULL ^ fnv64(delta));
  int found = 0;
  for (long it = 0; it < budget.alt_iterations && found < budget.alt_patterns_cap; ++it) {
    if ((it & 511) == 0 && dl.expired()) return;
    std::vector<Int> e(static_cast<size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        long v = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
        e[static_cast<size_t>(i) * n + j] = v;
        e[static_cast<size_t>(j) * n + i] = v;
      }
    for (int i = 0; i + 1 < n; i += 2) e[static_cast<size_t>(i) * n + (i + 1)] += 1;
    SeifertMatrix v = SeifertMatrix::unchecked(n, std::move(e));
    if (alexander(v) != delta) continue;
    StepFunction f = signature_function(v);
    std::vector<long long> pattern;
    for (const auto& p : conj) pattern.push_back(jump_at(f, p));
    if (std::find(seen.begin(), seen.end(), pattern) != seen.end()) continue;
    seen.push_back(pattern);
    pool.add_matrix(std::move(v), std::move(f), delta);
    ++found;
  }
}

// Canonical list of every jump point seen in the target and the pool.
std::vector<CirclePoint> collect_points(const StepFunction& target, const Pool& pool) {
  std::vector<CirclePoint> pts;
  auto insert = [&](const CirclePoint& p) {
    for (const auto& q : pts)
      if (equals(q, p)) return;
    pts.push_back(p);
  };
  for (const auto& j : target.jumps()) insert(j.point);
  for (const auto& f : pool.functions)
    for (const auto& j : f.jumps()) insert(j.point);
  std::sort(pts.begin(), pts.end(),
            [](const CirclePoint& a, const CirclePoint& b) { return cmp_by_argument(a, b) < 0; });
  return pts;
}

SeifertMatrix assemble(const Pool& pool, const std::vector<Int>& mult) {
  SeifertMatrix v = SeifertMatrix::unknot();
  for (size_t i = 0; i < pool.blocks.size(); ++i) {
    if (sgn(mult[i]) == 0) continue;
    SeifertMatrix piece = sgn(mult[i]) < 0 ? mirror(pool.blocks[i]) : pool.blocks[i];
    Int copies = abs(mult[i]);
    for (Int c(0); c < copies; ++c) v = block_sum(v, piece);
  }
  return v;
}

std::string system_diagnostic(const StepFunction& target, const Pool& pool,
                              const std::vector<CirclePoint>& pts) {
  std::ostringstream os;
  os << "jump system: " << pts.size() << " points x " << pool.blocks.size() << " blocks;";
  os << " target jumps (";
  for (size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << jump_at(target, pts[i]);
  os << "); block columns:";
  for (size_t bi = 0; bi < pool.blocks.size(); ++bi) {
    os << " " << pool.block_polys[bi].str() << "=(";
    for (size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << jump_at(pool.functions[bi], pts[i]);
    os << ")";
  }
  return os.str();
}

}  // namespace

RealizationCertificate realize(const StepFunction& target, const RealizeBudget& budget) {
  AdmissibilityReport rep = check(target);
  if (!rep.overall) {
    std::string which;
    if (!rep.condition2) which += " condition2";
    if (!rep.condition3_pass) which += " condition3";
    if (!rep.condition4_pass) which += " condition4";
    fail(errc::not_admissible, "target fails" + which);
  }
  Clock::time_point start = Clock::now();
  auto remaining = [&]() -> double {
    double used = std::chrono::duration<double>(Clock::now() - start).count();
    return budget.seconds - used;
  };

  RealizationCertificate cert;
  if (target.is_constant_zero()) {
    cert.seifert = SeifertMatrix::unknot();
    cert.recomputed = signature_function(cert.seifert);
    return cert;
  }

  // Distinct jump minimal polynomials, deterministic order.
  std::vector<IntPoly> deltas;
  for (const auto& j : target.jumps()) {
    bool seen = std::any_of(deltas.begin(), deltas.end(),
                            [&](const IntPoly& d) { return d == j.point.min_poly(); });
    if (!seen) deltas.push_back(j.point.min_poly());
  }
  std::sort(deltas.begin(), deltas.end(), [](const IntPoly& a, const IntPoly& b) { return compare(a, b) < 0; });

  Pool pool;
  auto block_opts = [&]() {
    RealizeOptions o = budget.alexander;
    o.budget_seconds = std::max(0.5, remaining());
    return o;
  };

  auto try_solve = [&](RealizationCertificate& out) -> bool {
    std::vector<CirclePoint> pts = collect_points(target, pool);
    std::vector<std::vector<Int>> a(pts.size(), std::vector<Int>(pool.blocks.size(), Int(0)));
    std::vector<Int> b(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      b[i] = static_cast<long>(jump_at(target, pts[i]));
      for (size_t bi = 0; bi < pool.blocks.size(); ++bi)
        a[i][bi] = static_cast<long>(jump_at(pool.functions[bi], pts[i]));
    }
    auto sol = solve_integer_system(a, b);
    if (!sol) return false;
    SeifertMatrix v = assemble(pool, sol->x);
    StepFunction recomputed = signature_function(v);
    if (!equals(recomputed, target))
      fail(errc::internal_contradiction, "solved jump system but recomputed function differs");
    out.seifert = std::move(v);
    out.recomputed = std::move(recomputed);
    out.pool.clear();
    for (size_t i = 0; i < pool.blocks.size(); ++i) {
      if (sgn(sol->x[i]) == 0) continue;
      if (!mpz_fits_slong_p(sol->x[i].get_mpz_t()))
        fail(errc::internal_contradiction, "unreasonable block multiplicity");
      out.pool.push_back({pool.blocks[i], pool.functions[i], sol->x[i].get_si()});
    }
    return true;
  };

  // Stage 0: one realized block per distinct minimal polynomial. A failure
  // here is fatal: nothing else can jump at that polynomial's conjugates.
  for (const auto& d : deltas) {
    try {
      pool.add(d, block_opts());
    } catch (const error& e) {
      fail(errc::budget_exhausted, "no block realization for " + d.str() + " (" + e.what() + ")");
    }
  }
  if (try_solve(cert)) return cert;

  // Stage 1: alternative realizations for jump-sign control.
  Deadline dl{start + std::chrono::microseconds(static_cast<long long>(budget.seconds * 1e6))};
  if (remaining() > 0) {
    for (const auto& d : deltas) add_alternative_realizations(pool, d, budget, dl);
    if (try_solve(cert)) return cert;
  }

  // Gap arcs between consecutive support points plus one past the last.
  auto gap_arcs = [&](int split) -> std::vector<Interval> {
    std::vector<CirclePoint> support;
    for (const auto& j : target.jumps()) support.push_back(j.point);
    std::vector<Interval> arcs;
    auto push_split = [&](const Rat& lo, const Rat& hi) {
      if (split == 1) {
        arcs.push_back({lo, hi});
      } else {
        Rat mid = (lo + hi) / 2;
        mid.canonicalize();
        arcs.push_back({lo, mid});
        arcs.push_back({mid, hi});
      }
    };
    for (size_t i = 0; i + 1 < support.size(); ++i) {
      // Higher argument = lower x; gap between support[i] and support[i+1].
      CirclePoint hi_pt = support[i];      // larger x
      CirclePoint lo_pt = support[i + 1];  // smaller x
      Rat w = std::min(hi_pt.x_interval().width(), lo_pt.x_interval().width());
      while (lo_pt.x_interval().hi >= hi_pt.x_interval().lo) {
        w /= 2;
        hi_pt = hi_pt.refined(w);
        lo_pt = lo_pt.refined(w);
      }
      push_split(lo_pt.x_interval().hi, hi_pt.x_interval().lo);
    }
    const CirclePoint& last = support.back();
    Rat lo = (Rat(-2) + last.x_interval().lo) / 2;
    lo.canonicalize();
    push_split(lo, last.x_interval().lo);
    return arcs;
  };

  for (int split = 1; split <= 2; ++split) {
    if (remaining() <= 0) break;
    std::vector<Interval> arcs = gap_arcs(split);
    std::vector<IntPoly> betas;
    for (const auto& arc : arcs) {
      try {
        betas.push_back(dense_quartic(arc));
      } catch (const error&) {
        // No admissible quartic in this arc within the cap; skip it.
      }
    }
    // Gap quartic blocks, then product blocks; blocks that fail to realize
    // within budget are skipped, the pool stays useful without them.
    auto add_optional = [&](const IntPoly& p) {
      try {
        pool.add(p, block_opts());
      } catch (const error&) {
      }
    };
    for (const auto& q : betas) {
      if (remaining() <= 0) break;
      add_optional(q);
    }
    if (try_solve(cert)) return cert;
    for (const auto& d : deltas) {
      for (const auto& q : betas) {
        if (remaining() <= 0) break;
        add_optional(normalize_alexander(d * q));
      }
    }
    if (try_solve(cert)) return cert;
  }

  std::vector<CirclePoint> pts = collect_points(target, pool);
  fail(errc::budget_exhausted, "pool strategy exhausted; " + system_diagnostic(target, pool, pts));
}

bool verify_certificate(const RealizationCertificate& cert, const StepFunction& target) {
  StepFunction recomputed = signature_function(cert.seifert);
  if (!equals(recomputed, target)) return false;
  if (!equals(cert.recomputed, target)) return false;
  // Audit each pool block and the block-sum composition.
  SeifertMatrix v = SeifertMatrix::unknot();
  for (const auto& entry : cert.pool) {
    if (entry.multiplicity == 0) return false;
    if (!equals(signature_function(entry.seifert), entry.function)) return false;
    SeifertMatrix piece = entry.multiplicity < 0 ? mirror(entry.seifert) : entry.seifert;
    for (long long c = 0; c < std::abs(entry.multiplicity); ++c) v = block_sum(v, piece);
  }
  return v == cert.seifert;
}

}  // namespace knotsig
