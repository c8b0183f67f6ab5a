// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exit status = number of failed criteria.

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "float_oracle.hpp"
#include "knotsig/hnf.hpp"
#include "knotsig/json_io.hpp"

using namespace knotsig;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  int number;
  std::string label;
  Clock::time_point start = Clock::now();
  std::ostringstream notes;
  bool ok = true;

  Criterion(int n, std::string text) : number(n), label(std::move(text)) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << (notes.str().empty() ? "" : "; ") << what;
    }
  }
  void finish(double limit_seconds) {
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && elapsed > limit_seconds) {
      ok = false;
      notes << (notes.str().empty() ? "" : "; ") << "runtime " << elapsed << "s exceeds "
            << limit_seconds << "s";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ["
              << elapsed << "s]";
    if (!ok) std::cout << " -- " << notes.str();
    std::cout << "\n";
    if (!ok) ++g_failures;
  }
};

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

// Float eigenvalue scan agreement away from the jump set.
bool float_scan_agrees(const SeifertMatrix& v, const StepFunction& f,
                       const std::vector<Rat>& avoid_x, double margin, int points,
                       std::string* note) {
  for (int k = 1; k <= points; ++k) {
    CircleSample s(Rat(k, points / 4));
    Rat x = s.x();
    bool near = false;
    for (const Rat& ax : avoid_x) near = near || std::abs(Rat(x - ax).get_d()) <= margin;
    if (near) continue;
    auto oracle = float_signature(v, s, 1e-9);
    if (!oracle) continue;
    if (evaluate_at_x(f, x) != *oracle) {
      *note = "float scan mismatch at s = " + s.s().get_str();
      return false;
    }
  }
  return true;
}

void criterion1() {
  Criterion c(1, "trefoil end-to-end (exact values + float scan)");
  SeifertMatrix v = trefoil();
  c.require(alexander(v) == IntPoly{1, -1, 1}, "Alexander polynomial");
  StepFunction f = signature_function(v);
  c.require(f.initial_value() == 0, "initial value");
  c.require(f.jumps().size() == 1, "jump count");
  if (f.jumps().size() == 1) {
    c.require(f.jumps()[0].jump == -1, "J = -1");
    c.require(cmp_x_to_rational(f.jumps()[0].point, Rat(1)) == 0, "jump at x = 1");
    c.require(evaluate(f, f.jumps()[0].point) == -1, "balanced value -1");
  }
  c.require(evaluate_at_x(f, Rat(3, 2)) == 0, "0 before the jump");
  c.require(evaluate_at_x(f, Rat(1, 2)) == -2, "-2 after the jump");
  c.require(evaluate_at_minus_one(f) == -2, "sigma(-1) = -2");
  std::string note;
  c.require(float_scan_agrees(v, f, {Rat(1)}, 1e-3, 1000, &note), note);
  c.finish(1.0);
}

void criterion2() {
  Criterion c(2, "figure-eight: no circle roots, sigma identically 0");
  SeifertMatrix v = fig8();
  c.require(alexander(v) == IntPoly{1, -3, 1}, "Alexander polynomial");
  StepFunction f = signature_function(v);
  c.require(f.is_constant_zero(), "constant zero");
  std::string note;
  c.require(float_scan_agrees(v, f, {}, 0.0, 1000, &note), note);
  c.finish(1.0);
}

void criterion3() {
  Criterion c(3, "T(2,5) band matrix: jumps -1 at both Phi_10 points");
  SeifertMatrix v = t25();
  c.require(alexander(v) == IntPoly{1, -1, 1, -1, 1}, "Alexander polynomial");
  StepFunction f = signature_function(v);
  c.require(f.initial_value() == 0, "initial value");
  c.require(f.jumps().size() == 2, "two jumps");
  std::vector<Rat> avoid;
  if (f.jumps().size() == 2) {
    c.require(f.jumps()[0].jump == -1 && f.jumps()[1].jump == -1, "jumps -1");
    c.require(cmp_x_to_rational(f.jumps()[0].point, Rat(1)) > 0, "first point x = (1+sqrt5)/2");
    c.require(cmp_x_to_rational(f.jumps()[1].point, Rat(0)) < 0 &&
                  cmp_x_to_rational(f.jumps()[1].point, Rat(-1)) > 0,
              "second point x = (1-sqrt5)/2");
    for (const auto& j : f.jumps()) {
      CirclePoint p = j.point.refined(Rat(1, 1 << 20));
      avoid.push_back(p.x_interval().mid());
    }
  }
  c.require(evaluate_at_minus_one(f) == -4, "sigma(-1) = -4");
  AdmissibilityReport rep = check(f);
  c.require(rep.overall && rep.condition4_pass, "checker incl condition 4");
  std::string note;
  c.require(float_scan_agrees(v, f, avoid, 1e-3, 1000, &note), note);
  c.finish(2.0);
}

void criterion4() {
  Criterion c(4, "necessity suite: 500 random Seifert matrices fully pass check()");
  // KNOTSIG_SEED reseeds the random_seifert stream for exploratory runs.
  std::uint64_t base = 555000;
  if (const char* env = std::getenv("KNOTSIG_SEED")) base = std::strtoull(env, nullptr, 10);
  for (int i = 0; i < 500 && c.ok; ++i) {
    int genus = 1 + i % 4;
    SeifertMatrix v = random_seifert(genus, 3, base + i);
    IntPoly delta = alexander(v);
    SignatureReport rep = signature_report(v);
    const StepFunction& f = rep.function;
    c.require(f.initial_value() == 0, "initial value 0 (seed " + std::to_string(i) + ")");
    AdmissibilityReport adm = check(f);
    c.require(adm.overall, "check() fails (seed " + std::to_string(i) + ")");
    for (const auto& j : f.jumps()) {
      IntPoly q;
      c.require(delta.degree() == 0 ? false : try_divide(delta, j.point.min_poly(), q),
                "min_poly does not divide Delta (seed " + std::to_string(i) + ")");
    }
    // Jump parity must match the parity of the factor exponent.
    if (delta.degree() > 0) {
      for (const auto& [irr, exp] : factor(delta).factors) {
        if (irr.degree() % 2 != 0 || !is_symmetric(irr)) continue;
        for (const auto& pt : conjugates_on_upper(irr)) {
          long long jump = jump_at(f, pt);
          c.require(((jump % 2 + 2) % 2) == (exp % 2),
                    "jump parity vs factor exponent (seed " + std::to_string(i) + ")");
        }
      }
    }
  }
  c.finish(300.0);
}

void criterion5() {
  Criterion c(5, "homomorphism suite: 100 random pairs, exact equality");
  for (int i = 0; i < 100 && c.ok; ++i) {
    SeifertMatrix a = random_seifert(1 + i % 3, 2, 111000 + i);
    SeifertMatrix b = random_seifert(1 + (i / 3) % 3, 2, 222000 + i);
    StepFunction fa = signature_function(a), fb = signature_function(b);
    c.require(equals(signature_function(block_sum(a, b)), add(fa, fb)),
              "block sum vs add (pair " + std::to_string(i) + ")");
    c.require(equals(signature_function(mirror(a)), negate(fa)),
              "mirror vs negate (pair " + std::to_string(i) + ")");
  }
  c.finish(300.0);
}

void criterion6() {
  Criterion c(6, "exact hermitian signature vs float oracle: 1000 samples, zero mismatches");
  std::mt19937_64 rng(0xACCE97);
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    SeifertMatrix v = random_seifert(1 + static_cast<int>(rng() % 4), 3, 333000 + i);
    CircleSample s(Rat(1 + static_cast<long>(rng() % 37), 1 + static_cast<long>(rng() % 23)));
    auto oracle = float_signature(v, s, 1e-6);
    if (!oracle) continue;
    ++compared;
    if (signature_at(v, s) != *oracle) {
      c.require(false, "mismatch at sample " + std::to_string(i));
      break;
    }
  }
  c.require(compared >= 900, "too few trusted samples: " + std::to_string(compared));
  c.finish(120.0);
}

void criterion7() {
  Criterion c(7, "realize_alexander corpus, exact round trips");
  const std::vector<IntPoly> corpus = {
      IntPoly{1},          IntPoly{1, -1, 1},          IntPoly{1, -3, 1},
      IntPoly{2, -3, 2},   IntPoly{1, -1, 1, -1, 1},   IntPoly{1, 1, -3, 1, 1},
  };
  for (const IntPoly& delta : corpus) {
    Clock::time_point t0 = Clock::now();
    try {
      SeifertMatrix v = realize_alexander(delta);
      c.require(alexander(v) == normalize_alexander(delta), "wrong polynomial for " + delta.str());
    } catch (const error& e) {
      c.require(false, std::string("realization failed: ") + e.what());
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(dt <= 60.0, "per-polynomial budget exceeded for " + delta.str());
  }
  c.finish(0.0);
}

void criterion8(const std::string& cli, const fs::path& tmp) {
  Criterion c(8, "checker rejection suite: documented verdicts and exit codes");
  auto run = [&](const std::string& args) {
    std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  // Condition 3 failure: jump at the 2t^2 - t + 2 point (value 3 at t = 1).
  {
    CirclePoint p = make_point(IntPoly{2, -1, 2});
    StepFunction f(0, {{p, 1}});
    write_text_file((tmp / "c3.json").string(), canonical_dump(stepfn_to_json(f)));
    AdmissibilityReport rep = check(f);
    c.require(!rep.condition3_pass && !rep.overall, "condition-3 verdict");
    c.require(run("check --in " + (tmp / "c3.json").string()) == 1, "condition-3 exit code");
  }
  // Condition 4 failure: lone Phi_10 jump.
  {
    CirclePoint phi = make_point(IntPoly{1, -1, 1, -1, 1}, {Rat(3, 2), Rat(2)});
    StepFunction f(0, {{phi, 1}});
    write_text_file((tmp / "c4.json").string(), canonical_dump(stepfn_to_json(f)));
    AdmissibilityReport rep = check(f);
    c.require(!rep.condition4_pass && !rep.overall, "condition-4 verdict");
    c.require(rep.condition4.size() == 1 && rep.condition4[0].conjugate_jumps.size() == 2,
              "condition-4 witness lists the implicit conjugate");
    c.require(run("check --in " + (tmp / "c4.json").string()) == 1, "condition-4 exit code");
  }
  // Malformed candidate: non-symmetric minimal polynomial.
  {
    json malformed;
    malformed["format"] = "knotsig.sigfn.v1";
    malformed["initial_value"] = 0;
    json jp;
    jp["min_poly"] = json::array({"3", "2", "1"});
    jp["x_interval"] = json::array({"-1", "1"});
    jp["jump"] = 1;
    malformed["jumps"] = json::array({jp});
    write_text_file((tmp / "mal.json").string(), canonical_dump(malformed));
    c.require(run("check --in " + (tmp / "mal.json").string()) == 2, "malformed exit code");
  }
  c.finish(30.0);
}

void criterion9() {
  Criterion c(9, "realizer soundness: 20 hidden-combination targets");
  std::vector<StepFunction> basis;
  for (const IntPoly& p : {IntPoly{1, -1, 1}, IntPoly{1, -1, 1, -1, 1}, IntPoly{2, -3, 2},
                           IntPoly{1, 1, -3, 1, 1}})
    basis.push_back(signature_function(realize_alexander(p)));
  std::mt19937_64 rng(0x20CE97);
  for (int trial = 0; trial < 20 && c.ok; ++trial) {
    StepFunction target;
    for (const auto& fn : basis) {
      long coeff = static_cast<long>(rng() % 5) - 2;
      for (long i = 0; i < std::abs(coeff); ++i) target = add(target, coeff < 0 ? negate(fn) : fn);
    }
    Clock::time_point t0 = Clock::now();
    try {
      RealizationCertificate cert = realize(target);
      c.require(equals(cert.recomputed, target), "recomputed != target (trial " + std::to_string(trial) + ")");
      c.require(verify_certificate(cert, target), "verify failed (trial " + std::to_string(trial) + ")");
    } catch (const error& e) {
      c.require(false, std::string("realize failed: ") + e.what());
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(dt <= 60.0, "per-target budget exceeded (trial " + std::to_string(trial) + ")");
  }
  c.finish(0.0);
}

void criterion10(const std::string& cli, const fs::path& tmp) {
  Criterion c(10, "determinism: byte-identical outputs for every command");
  auto run = [&](const std::string& args, const std::string& out) {
    std::string cmd = cli + " " + args + " >" + out + " 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  auto same = [&](const std::string& a, const std::string& b) {
    return read_text_file(a) == read_text_file(b);
  };
  json trefoil_json = seifert_to_json(trefoil());
  std::string in = (tmp / "tref.json").string();
  write_text_file(in, canonical_dump(trefoil_json));

  for (int round = 1; round <= 2; ++round) {
    std::string tag = std::to_string(round);
    c.require(run("compute --in " + in + " --out " + (tmp / ("fn" + tag + ".json")).string() +
                      " --csv " + (tmp / ("plot" + tag + ".csv")).string() + " --report " +
                      (tmp / ("rep" + tag + ".json")).string(),
                  (tmp / ("compute_out" + tag + ".txt")).string()) == 0,
              "compute exit");
    c.require(run("check --in " + (tmp / ("fn" + tag + ".json")).string() + " --json " +
                      (tmp / ("chk" + tag + ".json")).string(),
                  (tmp / ("check_out" + tag + ".txt")).string()) == 0,
              "check exit");
    c.require(run("realize --in " + (tmp / ("fn" + tag + ".json")).string() + " --out " +
                      (tmp / ("cert" + tag + ".json")).string(),
                  (tmp / ("realize_out" + tag + ".txt")).string()) == 0,
              "realize exit");
    c.require(run("alex --poly 1,1,-3,1,1 --realize " + (tmp / ("alex" + tag + ".json")).string(),
                  (tmp / ("alex_out" + tag + ".txt")).string()) == 0,
              "alex exit");
    c.require(run("eval --in " + (tmp / ("fn" + tag + ".json")).string() + " --at-x 1",
                  (tmp / ("eval_out" + tag + ".txt")).string()) == 0,
              "eval exit");
  }
  for (const char* f : {"fn", "plot", "rep", "chk", "cert", "alex", "eval_out", "check_out"}) {
    std::string ext = (std::string(f) == "plot") ? ".csv" : (std::string(f).find("_out") != std::string::npos ? ".txt" : ".json");
    c.require(same((tmp / (std::string(f) + "1" + ext)).string(), (tmp / (std::string(f) + "2" + ext)).string()),
              std::string("files differ: ") + f);
  }
  c.finish(180.0);
}

}  // namespace

int main() {
  fs::path tmp = fs::temp_directory_path() / ("knotsig_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  std::string cli = KNOTSIG_CLI_PATH;

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(cli, tmp);
  criterion9();
  criterion10(cli, tmp);

  fs::remove_all(tmp);
  if (g_failures == 0)
    std::cout << "acceptance: all criteria passed\n";
  else
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
  return g_failures;
}
