#include "knotsig/admissibility.hpp"

#include <algorithm>

namespace knotsig {

AdmissibilityReport check(const StepFunction& f) {
  AdmissibilityReport rep;
  rep.condition1 = true;
  rep.condition1_note =
      "structural: the representation stores the upper arc only and is balanced by construction";
  rep.condition2 = f.initial_value() == 0;

  for (size_t i = 0; i < f.jumps().size(); ++i) {
    const IntPoly& mp = f.jumps()[i].point.min_poly();
    AdmissibilityReport::Condition3Item item;
    item.jump_index = i;
    item.min_poly = mp;
    item.value_at_one = mp(Int(1));
    item.pass = item.value_at_one == 1 || item.value_at_one == -1;
    rep.condition3_pass = rep.condition3_pass && item.pass;
    rep.condition3.push_back(std::move(item));
  }

  std::vector<IntPoly> distinct;
  for (const auto& j : f.jumps()) {
    bool seen = false;
    for (const auto& d : distinct) seen = seen || d == j.point.min_poly();
    if (!seen) distinct.push_back(j.point.min_poly());
  }
  std::sort(distinct.begin(), distinct.end(), [](const IntPoly& a, const IntPoly& b) { return compare(a, b) < 0; });
  for (const auto& mp : distinct) {
    AdmissibilityReport::Condition4Item item;
    item.min_poly = mp;
    bool parity_known = false;
    int parity = 0;
    item.pass = true;
    for (const auto& conj : conjugates_on_upper(mp)) {
      long long jump = jump_at(f, conj);
      item.conjugate_jumps.push_back({conj, jump});
      int par = static_cast<int>(((jump % 2) + 2) % 2);
      if (!parity_known) {
        parity = par;
        parity_known = true;
      } else if (par != parity) {
        item.pass = false;
      }
    }
    rep.condition4_pass = rep.condition4_pass && item.pass;
    rep.condition4.push_back(std::move(item));
  }

  rep.overall = rep.condition2 && rep.condition3_pass && rep.condition4_pass;
  return rep;
}

}  // namespace knotsig
