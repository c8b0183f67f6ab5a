#include "knotsig/json_io.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace knotsig {

namespace {

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
      fail(errc::parse_error, "bad integer string: " + j.get<std::string>());
    return v;
  }
  fail(errc::parse_error, "expected integer or decimal string");
}

json int_to_json(const Int& v) {
  static const Int kMax = (Int(1) << 53) - 1;
  if (abs(v) <= kMax) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(errc::parse_error, std::string("missing field: ") + key);
  return j.at(key);
}

void expect_format(const json& j, const char* format) {
  if (expect(j, "format").get<std::string>() != format)
    fail(errc::parse_error, std::string("expected format ") + format);
}

}  // namespace

json poly_to_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) fail(errc::parse_error, "polynomial must be an array of coefficients");
  std::vector<Int> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(int_from_json(c));
  return IntPoly(std::move(coeffs));
}

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty rational");
  Rat v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0 || v.get_den() == 0)
    fail(errc::parse_error, "bad rational string: " + s);
  v.canonicalize();
  return v;
}

json point_to_json(const CirclePoint& p) {
  json j;
  j["min_poly"] = poly_to_json(p.min_poly());
  j["x_interval"] = json::array({rat_to_string(p.x_interval().lo), rat_to_string(p.x_interval().hi)});
  return j;
}

CirclePoint point_from_json(const json& j) {
  IntPoly mp = poly_from_json(expect(j, "min_poly"));
  const json& iv = expect(j, "x_interval");
  if (!iv.is_array() || iv.size() != 2) fail(errc::parse_error, "x_interval must be [lo, hi]");
  Rat lo = iv[0].is_string() ? rat_from_string(iv[0].get<std::string>()) : Rat(int_from_json(iv[0]));
  Rat hi = iv[1].is_string() ? rat_from_string(iv[1].get<std::string>()) : Rat(int_from_json(iv[1]));
  if (lo >= hi) fail(errc::parse_error, "empty x_interval");
  return make_point(mp, {lo, hi});
}

json seifert_to_json(const SeifertMatrix& v) {
  json m = json::array();
  for (int i = 0; i < v.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < v.size(); ++j) row.push_back(int_to_json(v.at(i, j)));
    m.push_back(std::move(row));
  }
  json out;
  out["format"] = "knotsig.seifert.v1";
  out["matrix"] = std::move(m);
  return out;
}

SeifertMatrix seifert_from_json(const json& j) {
  expect_format(j, "knotsig.seifert.v1");
  const json& m = expect(j, "matrix");
  if (!m.is_array()) fail(errc::parse_error, "matrix must be an array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : m) {
    if (!r.is_array()) fail(errc::parse_error, "matrix row must be an array");
    std::vector<Int> row;
    for (const auto& e : r) row.push_back(int_from_json(e));
    rows.push_back(std::move(row));
  }
  return SeifertMatrix::validate(rows);
}

json stepfn_to_json(const StepFunction& f) {
  json jumps = json::array();
  for (const auto& jp : f.jumps()) {
    json j = point_to_json(jp.point);
    j["jump"] = jp.jump;
    jumps.push_back(std::move(j));
  }
  json out;
  out["format"] = "knotsig.sigfn.v1";
  out["initial_value"] = f.initial_value();
  out["jumps"] = std::move(jumps);
  return out;
}

StepFunction stepfn_from_json(const json& j) {
  expect_format(j, "knotsig.sigfn.v1");
  long long initial = expect(j, "initial_value").get<long long>();
  const json& jumps = expect(j, "jumps");
  if (!jumps.is_array()) fail(errc::parse_error, "jumps must be an array");
  std::vector<JumpPoint> out;
  for (const auto& item : jumps) {
    CirclePoint p = point_from_json(item);
    long long jump = expect(item, "jump").get<long long>();
    if (jump == 0) fail(errc::parse_error, "zero jump in step function");
    out.push_back({std::move(p), jump});
  }
  return StepFunction(initial, std::move(out));
}

json admissibility_to_json(const AdmissibilityReport& r) {
  json c3 = json::array();
  for (const auto& item : r.condition3) {
    json e;
    e["jump_index"] = item.jump_index;
    e["min_poly"] = poly_to_json(item.min_poly);
    e["value_at_one"] = int_to_json(item.value_at_one);
    e["pass"] = item.pass;
    c3.push_back(std::move(e));
  }
  json c4 = json::array();
  for (const auto& item : r.condition4) {
    json conj = json::array();
    for (const auto& [pt, jump] : item.conjugate_jumps) {
      json e;
      e["point"] = point_to_json(pt);
      e["jump"] = jump;
      conj.push_back(std::move(e));
    }
    json e;
    e["min_poly"] = poly_to_json(item.min_poly);
    e["conjugates"] = std::move(conj);
    e["pass"] = item.pass;
    c4.push_back(std::move(e));
  }
  json out;
  out["format"] = "knotsig.report.v1";
  out["condition1"] = {{"pass", r.condition1}, {"note", r.condition1_note}};
  out["condition2"] = {{"pass", r.condition2}};
  out["condition3"] = {{"pass", r.condition3_pass}, {"items", std::move(c3)}};
  out["condition4"] = {{"pass", r.condition4_pass}, {"items", std::move(c4)}};
  out["overall"] = r.overall;
  return out;
}

json signature_report_to_json(const SignatureReport& r) {
  json arcs = json::array();
  for (size_t i = 0; i < r.arc_samples.size(); ++i) {
    json e;
    e["sample_s"] = rat_to_string(r.arc_samples[i]);
    e["value"] = r.arc_values[i];
    arcs.push_back(std::move(e));
  }
  json pts = json::array();
  for (const auto& p : r.points) {
    json e;
    e["point"] = point_to_json(p.point);
    e["limit_before"] = p.before;
    e["limit_after"] = p.after;
    e["balanced_value"] = p.balanced;
    e["jump"] = p.jump;
    pts.push_back(std::move(e));
  }
  json out;
  out["format"] = "knotsig.sigreport.v1";
  out["function"] = stepfn_to_json(r.function);
  out["arcs"] = std::move(arcs);
  out["points"] = std::move(pts);
  return out;
}

json certificate_to_json(const RealizationCertificate& c) {
  json pool = json::array();
  for (const auto& entry : c.pool) {
    json e;
    e["seifert"] = seifert_to_json(entry.seifert);
    e["function"] = stepfn_to_json(entry.function);
    e["multiplicity"] = entry.multiplicity;
    pool.push_back(std::move(e));
  }
  json out;
  out["format"] = "knotsig.cert.v1";
  out["seifert"] = seifert_to_json(c.seifert);
  out["recomputed"] = stepfn_to_json(c.recomputed);
  out["pool"] = std::move(pool);
  return out;
}

RealizationCertificate certificate_from_json(const json& j) {
  expect_format(j, "knotsig.cert.v1");
  RealizationCertificate c;
  c.seifert = seifert_from_json(expect(j, "seifert"));
  c.recomputed = stepfn_from_json(expect(j, "recomputed"));
  const json& pool = expect(j, "pool");
  if (!pool.is_array()) fail(errc::parse_error, "pool must be an array");
  for (const auto& e : pool) {
    PoolEntry entry;
    entry.seifert = seifert_from_json(expect(e, "seifert"));
    entry.function = stepfn_from_json(expect(e, "function"));
    entry.multiplicity = expect(e, "multiplicity").get<long long>();
    c.pool.push_back(std::move(entry));
  }
  return c;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// CSV emission

namespace {

// Exact test: does `p` equal the circle point at theta = k*pi/N?
// That point is a primitive n-th root of unity for n = 2N/gcd(k, 2N); its
// minimal polynomial is the n-th cyclotomic, and among the upper-circle
// conjugates 2cos(2 pi m / n) the index is determined by the coprime rank
// of m = k/gcd(k, 2N).
bool equals_grid_point(const CirclePoint& p, int k, int N) {
  long g = std::gcd(static_cast<long>(k), 2L * N);
  long n = 2L * N / g;
  long m = k / g;
  if (n < 3) return false;  // endpoints, handled by the caller
  // Degree check first: cheap rejection.
  long phi = 0;
  for (long i = 1; i < n; ++i)
    if (std::gcd(i, n) == 1) ++phi;
  if (p.min_poly().degree() != phi) return false;
  if (p.min_poly() != cyclotomic(static_cast<int>(n))) return false;
  // Rank of m among coprime residues in (0, n/2), ascending.
  std::vector<long> js;
  for (long i = 1; 2 * i < n; ++i)
    if (std::gcd(i, n) == 1) js.push_back(i);
  auto it = std::find(js.begin(), js.end(), m);
  if (it == js.end()) return false;
  size_t rank = static_cast<size_t>(it - js.begin());
  // Roots of the trace polynomial ascending in x = descending in m.
  std::vector<Interval> roots = isolate_real_roots(p.trace_poly(), Rat(-2), Rat(2));
  if (roots.size() != js.size())
    fail(errc::internal_contradiction, "cyclotomic trace root count mismatch");
  const Interval& target = roots[roots.size() - 1 - rank];
  Rat lo = std::max(p.x_interval().lo, target.lo);
  Rat hi = std::min(p.x_interval().hi, target.hi);
  if (lo >= hi) return false;
  SturmChain chain = SturmChain::build(p.trace_poly());
  return chain.count_half_open(lo, hi) == 1;
}

std::string fixed_fraction(long k, long n, int digits) {
  // k/n in [0, 1] rendered with `digits` decimals, round-half-up, exact
  // integer arithmetic.
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int num = Int(k) * scale * 2 + Int(n);
  Int q = num / (2 * Int(n));
  Int whole = q / scale;
  Int frac = q % scale;
  std::string fs = frac.get_str();
  while (static_cast<int>(fs.size()) < digits) fs = "0" + fs;
  return whole.get_str() + "." + fs;
}

}  // namespace

std::string emit_plot_csv(const StepFunction& f, int samples) {
  if (samples < 1) fail(errc::invalid_argument, "samples must be >= 1");
  int N = samples;
  const auto& jumps = f.jumps();
  size_t k = jumps.size();
  // Cumulative arc values: arc i is between jump i-1 and jump i.
  std::vector<long long> arc(k + 1);
  arc[0] = f.initial_value();
  for (size_t i = 0; i < k; ++i) arc[i + 1] = arc[i] + 2 * jumps[i].jump;
  // Tight intervals keep the float thetas accurate far below the gate.
  std::vector<double> theta(k);
  for (size_t i = 0; i < k; ++i)
    theta[i] = jumps[i].point.refined(Rat(1, Int(1) << 48)).theta_over_pi_approx();
  double gate = 0.25 / N;  // candidates closer than a quarter grid step

  std::ostringstream os;
  os << "theta_over_pi,sigma\n";
  for (int s = 0; s <= N; ++s) {
    long long value;
    bool balanced = false;
    if (s == 0) {
      value = f.initial_value();
    } else if (s == N) {
      value = arc[k];
    } else {
      double ts = static_cast<double>(s) / N;
      size_t below = 0;  // jumps with theta strictly below ts
      for (size_t i = 0; i < k; ++i) {
        if (std::abs(theta[i] - ts) < gate) {
          if (equals_grid_point(jumps[i].point, s, N)) {
            value = arc[i] + jumps[i].jump;
            balanced = true;
            break;
          }
        }
        if (theta[i] < ts) ++below;
      }
      if (!balanced) value = arc[below];
    }
    os << fixed_fraction(s, N, 6) << "," << value << "\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::invalid_argument, "cannot write file: " + path);
  out << contents;
}

}  // namespace knotsig
