#pragma once

#include <string>

#include "knotsig/admissibility.hpp"
#include "knotsig/realize.hpp"
#include "knotsig/seifert.hpp"
#include "knotsig/signature.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace knotsig {

using json = nlohmann::json;

// Polynomials serialize as arrays of decimal integer strings, ascending
// degree; rationals as canonical "p/q" strings. Parsers also accept plain
// JSON integers. All structural errors throw error(parse_error).

json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

json point_to_json(const CirclePoint& p);
CirclePoint point_from_json(const json& j);

json seifert_to_json(const SeifertMatrix& v);          // knotsig.seifert.v1
SeifertMatrix seifert_from_json(const json& j);

json stepfn_to_json(const StepFunction& f);            // knotsig.sigfn.v1
StepFunction stepfn_from_json(const json& j);

json admissibility_to_json(const AdmissibilityReport& r);  // knotsig.report.v1

json signature_report_to_json(const SignatureReport& r);   // knotsig.sigreport.v1

json certificate_to_json(const RealizationCertificate& c);  // knotsig.cert.v1
RealizationCertificate certificate_from_json(const json& j);

/// Deterministic serialization: sorted keys, two-space indent, newline at end.
std::string canonical_dump(const json& j);

/// CSV rendering of the balanced function on a uniform theta grid:
/// header "theta_over_pi,sigma" and samples+1 rows. Grid points that land
/// exactly on a jump (decided exactly via cyclotomic minimal polynomials)
/// get the balanced value; everything else is located by refined float
/// comparison. Derived data, not part of the exactness guarantees.
std::string emit_plot_csv(const StepFunction& f, int samples);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace knotsig
