#include <cstdio>
#include <map>

#include "topogame/suites.hpp"

using namespace topogame;

namespace {

struct Criterion {
  std::string id;
  std::vector<std::string> checks;  // suite.check
  double limit_seconds;
};

const std::vector<Criterion> criteria = {
    {"A1", {"duality.forward_rationals"}, 5},
    {"A2", {"duality.forward_finite", "duality.claim_finite"}, 60},
    {"A3", {"pr_density.family_to_pairs", "pr_density.pairs_to_family"}, 120},
    {"A4", {"double_selector.rationals_horizon"}, 30},
    {"A5", {"baire_diagonal.selection_meets_pibase", "baire_diagonal.witness_permanence"}, 10},
    {"A6", {"property_p.covering_equivalence", "property_p.padding_preserves_P"}, 60},
    {"A7", {"product.rectangles_rationals"}, 30},
    {"A8",
     {"finite_unions.splus_two_pieces", "finite_unions.splus_fin_three_pieces", "finite_unions.selection_union",
      "open_restriction.restrict_open", "open_restriction.lift_dense"},
     120},
    {"A9",
     {"pibase_dgame.rationals_seeded", "pibase_dgame.finite_exhaustive", "finite_triviality.selcover",
      "finite_triviality.splus", "finite_triviality.dgame"},
     60},
};

}  // namespace

int main() {
  const std::uint64_t seed = 0;
  std::map<std::string, RunReport> reports;
  for (const auto& s : all_suites()) reports.emplace(s.name, run_suite(s.name, seed));

  bool all_ok = true;
  for (const auto& c : criteria) {
    bool ok = true;
    double seconds = 0;
    std::string detail;
    for (const auto& name : c.checks) {
      const auto dot = name.find('.');
      const auto* rec = reports.at(name.substr(0, dot)).find(name.substr(dot + 1));
      if (!rec) {
        ok = false;
        detail += name + ": missing; ";
        continue;
      }
      seconds += rec->seconds;
      if (rec->status != Status::Pass) ok = false;
      detail += name + ": " + to_string(rec->status) + " (" + rec->detail + "); ";
    }
    if (seconds > c.limit_seconds) ok = false;
    all_ok = all_ok && ok;
    std::printf("%s %s %.2fs/%gs %s\n", c.id.c_str(), ok ? "PASS" : "FAIL", seconds, c.limit_seconds, detail.c_str());
  }

  // every suite again with the same seed, compared without timings
  std::string differing;
  for (const auto& s : all_suites())
    if (to_json(run_suite(s.name, seed, 2)).dump() != to_json(reports.at(s.name)).dump()) differing += " " + s.name;
  const bool same = differing.empty();
  all_ok = all_ok && same;
  std::printf("A10 %s %zu suites rerun%s\n", same ? "PASS" : "FAIL", all_suites().size(),
              same ? ", reports identical" : (", reports differ:" + differing).c_str());
  return all_ok ? 0 : 1;
}
