#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "knotsig/json_io.hpp"

using namespace knotsig;

namespace {

// Exit codes: 0 success/pass, 1 semantic failure, 2 invalid input, 3 budget
// exhausted.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;
constexpr int kBudget = 3;

int classify(const error& e) {
  switch (e.code()) {
    case errc::budget_exhausted: return kBudget;
    case errc::not_admissible: return kFail;
    default: return kBadInput;
  }
}

json load_json(const std::string& path) {
  std::string text = read_text_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "invalid JSON in " + path);
  return j;
}

IntPoly poly_from_csv(const std::string& csv) {
  std::vector<Int> coeffs;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) fail(errc::parse_error, "empty coefficient in --poly");
    Int v;
    if (mpz_set_str(v.get_mpz_t(), cur.c_str(), 10) != 0)
      fail(errc::parse_error, "bad coefficient: " + cur);
    coeffs.push_back(v);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  flush();
  IntPoly p{std::move(coeffs)};
  if (p.is_zero()) fail(errc::parse_error, "--poly is the zero polynomial");
  return p;
}

double x_to_double(const Rat& x) { return x.get_d(); }

int cmd_compute(const std::string& in, const std::string& out, const std::string& csv, int samples,
                const std::string& report) {
  SeifertMatrix v = seifert_from_json(load_json(in));
  SignatureReport rep = signature_report(v);
  write_text_file(out, canonical_dump(stepfn_to_json(rep.function)));
  if (!csv.empty()) write_text_file(csv, emit_plot_csv(rep.function, samples));
  if (!report.empty()) write_text_file(report, canonical_dump(signature_report_to_json(rep)));
  return kOk;
}

int cmd_check(const std::string& in, const std::string& report_path) {
  StepFunction f = stepfn_from_json(load_json(in));
  AdmissibilityReport rep = check(f);
  auto line = [](const char* name, bool pass, const std::string& extra) {
    std::cout << name << ": " << (pass ? "pass" : "FAIL") << (extra.empty() ? "" : " (" + extra + ")")
              << "\n";
  };
  line("condition 1 (conjugate symmetry)", rep.condition1, rep.condition1_note);
  line("condition 2 (vanishing near 1)", rep.condition2,
       rep.condition2 ? "" : "initial value is nonzero");
  std::string c3note;
  for (const auto& item : rep.condition3)
    if (!item.pass)
      c3note += (c3note.empty() ? "" : "; ") + item.min_poly.str() + " has value " +
                item.value_at_one.get_str() + " at t=1";
  line("condition 3 (irreducible Alexander minimal polynomials)", rep.condition3_pass, c3note);
  std::string c4note;
  for (const auto& item : rep.condition4) {
    if (item.pass) continue;
    c4note += (c4note.empty() ? "" : "; ") + item.min_poly.str() + " jumps (";
    for (size_t i = 0; i < item.conjugate_jumps.size(); ++i)
      c4note += (i ? "," : "") + std::to_string(item.conjugate_jumps[i].second);
    c4note += ") differ mod 2";
  }
  line("condition 4 (Galois parity)", rep.condition4_pass, c4note);
  std::cout << "overall: " << (rep.overall ? "admissible" : "NOT admissible") << "\n";
  if (!report_path.empty()) write_text_file(report_path, canonical_dump(admissibility_to_json(rep)));
  return rep.overall ? kOk : kFail;
}

int cmd_realize(const std::string& in, const std::string& out, double budget_seconds, int max_entry,
                int genus_slack) {
  StepFunction f = stepfn_from_json(load_json(in));
  RealizeBudget budget;
  budget.seconds = budget_seconds;
  budget.alexander.max_entry = max_entry;
  budget.alexander.genus_slack = genus_slack;
  budget.alexander.budget_seconds = budget_seconds;
  RealizationCertificate cert;
  try {
    cert = realize(f, budget);
  } catch (const error& e) {
    if (e.code() == errc::not_admissible) {
      std::cerr << "target is not admissible: " << e.what() << "\n";
      return kFail;
    }
    throw;
  }
  if (!verify_certificate(cert, f)) fail(errc::internal_contradiction, "certificate failed verification");
  write_text_file(out, canonical_dump(certificate_to_json(cert)));
  std::cout << "realized by a " << cert.seifert.size() << "x" << cert.seifert.size()
            << " Seifert matrix, " << cert.pool.size()
            << (cert.pool.size() == 1 ? " pool block\n" : " pool blocks\n");
  return kOk;
}

int cmd_alex(const std::string& poly_csv, bool do_check, bool do_factor, bool do_circle_roots,
             const std::string& realize_out) {
  IntPoly p = poly_from_csv(poly_csv);
  if (do_check) {
    if (is_alexander(p)) {
      std::cout << "Alexander: yes\n";
    } else {
      IntPoly n = normalize_alexander(p);
      if (!is_symmetric(n))
        std::cout << "Alexander: no: not symmetric\n";
      else
        std::cout << "Alexander: no: " << "Δ(1)=" << n(Int(1)).get_str() << "\n";
      return kFail;
    }
  }
  if (do_factor) {
    Factorization f = factor(p);
    std::cout << "content: " << f.content.get_str() << "\n";
    for (const auto& [irr, exp] : f.factors)
      std::cout << "factor: (" << irr.str() << ")^" << exp << "\n";
  }
  if (do_circle_roots) {
    Factorization f = factor(normalize_alexander(p));
    int count = 0;
    for (const auto& [irr, exp] : f.factors) {
      if (irr.degree() % 2 != 0 || !is_symmetric(irr)) continue;
      for (const auto& pt : conjugates_on_upper(irr)) {
        std::cout << "root: min_poly " << irr.str() << ", x " << "≈ "
                  << x_to_double(pt.refined(Rat(1, 1 << 30)).x_interval().mid()) << "\n";
        ++count;
      }
    }
    std::cout << count << " upper-circle root" << (count == 1 ? "" : "s") << "\n";
  }
  if (!realize_out.empty()) {
    if (!is_alexander(p)) {
      std::cerr << "not an Alexander polynomial; cannot realize\n";
      return kFail;
    }
    SeifertMatrix v = realize_alexander(p);
    write_text_file(realize_out, canonical_dump(seifert_to_json(v)));
    std::cout << "realized " << normalize_alexander(p).str() << " by a " << v.size() << "x"
              << v.size() << " Seifert matrix\n";
  }
  return kOk;
}

int cmd_eval(const std::string& in, const std::string& at_x, bool at_minus_one) {
  StepFunction f = stepfn_from_json(load_json(in));
  if (at_minus_one) {
    std::cout << evaluate_at_minus_one(f) << "\n";
    return kOk;
  }
  Rat x = rat_from_string(at_x);
  if (x < Rat(-2) || x > Rat(2)) fail(errc::parse_error, "--at-x must lie in [-2, 2]");
  std::cout << evaluate_at_x(f, x) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Tristram-Levine signature functions of knots from Seifert matrices"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Seifert matrix -> signature step function");
  std::string compute_in, compute_out, compute_csv, compute_report;
  int compute_samples = 720;
  compute->add_option("--in", compute_in, "Seifert matrix JSON")->required();
  compute->add_option("--out", compute_out, "output step function JSON")->required();
  compute->add_option("--csv", compute_csv, "CSV plot data output");
  compute->add_option("--samples", compute_samples, "CSV samples (rows = samples+1)")
      ->default_val(720);
  compute->add_option("--report", compute_report, "full signature report JSON");

  auto* chk = app.add_subcommand("check", "step function admissibility per the four conditions");
  std::string check_in, check_report;
  chk->add_option("--in", check_in, "step function JSON")->required();
  chk->add_option("--json", check_report, "machine-readable report output");

  auto* real = app.add_subcommand("realize", "admissible step function -> certified Seifert matrix");
  std::string realize_in, realize_out;
  double realize_budget = 60.0;
  int realize_max_entry = 3, realize_slack = 2;
  real->add_option("--in", realize_in, "step function JSON")->required();
  real->add_option("--out", realize_out, "certificate JSON")->required();
  real->add_option("--budget-seconds", realize_budget)->default_val(60.0);
  real->add_option("--max-entry", realize_max_entry)->default_val(3);
  real->add_option("--max-genus-slack", realize_slack)->default_val(2);

  auto* alex = app.add_subcommand("alex", "Alexander polynomial utilities");
  std::string alex_poly, alex_realize;
  bool alex_check = false, alex_factor = false, alex_circle = false;
  alex->add_option("--poly", alex_poly, "coefficients c0,c1,... ascending")->required();
  alex->add_flag("--check", alex_check, "admissibility verdict");
  alex->add_flag("--factor", alex_factor, "irreducible factorization");
  alex->add_flag("--circle-roots", alex_circle, "roots on the open upper circle");
  alex->add_option("--realize", alex_realize, "write a Seifert matrix realization to this path");

  auto* ev = app.add_subcommand("eval", "evaluate a step function exactly");
  std::string eval_in, eval_at_x;
  bool eval_minus_one = false;
  ev->add_option("--in", eval_in, "step function JSON")->required();
  ev->add_option("--at-x", eval_at_x, "rational x = 2cos(theta), in [-2, 2]");
  ev->add_flag("--at-minus-one", eval_minus_one, "value at -1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed())
      return cmd_compute(compute_in, compute_out, compute_csv, compute_samples, compute_report);
    if (chk->parsed()) return cmd_check(check_in, check_report);
    if (real->parsed())
      return cmd_realize(realize_in, realize_out, realize_budget, realize_max_entry, realize_slack);
    if (alex->parsed()) {
      if (!alex_check && !alex_factor && !alex_circle && alex_realize.empty()) {
        std::cerr << "alex: pick one of --check, --factor, --circle-roots, --realize\n";
        return kBadInput;
      }
      return cmd_alex(alex_poly, alex_check, alex_factor, alex_circle, alex_realize);
    }
    if (ev->parsed()) {
      if (eval_at_x.empty() && !eval_minus_one) {
        std::cerr << "eval: pick --at-x or --at-minus-one\n";
        return kBadInput;
      }
      return cmd_eval(eval_in, eval_at_x, eval_minus_one);
    }
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
