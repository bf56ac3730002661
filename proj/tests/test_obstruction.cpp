#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "hlf/census.hpp"
#include "hlf/enumerator.hpp"
#include "hlf/errors.hpp"
#include "hlf/obstruction.hpp"
#include "hlf/render.hpp"

using namespace hlf;

namespace {

FiberTypeVector vec(int g, i64 n, std::vector<i64> s) { return FiberTypeVector(g, n, std::move(s)); }

std::set<std::vector<i64>> totals(const std::vector<Verdict>& vs) {
  std::set<std::vector<i64>> out;
  for (const Verdict& v : vs) {
    std::vector<i64> t{v.vector.n()};
    t.insert(t.end(), v.vector.s().begin(), v.vector.s().end());
    out.insert(t);
  }
  return out;
}

}  // namespace

TEST_CASE("default profiles") {
  Profile general = Profile::general();
  Profile complex = Profile::complex_surfaces();
  CHECK(!general.enabled("R7"));
  CHECK(complex.enabled("R7"));
  CHECK(general.enabled("li_2_5"));
  CHECK(!general.stipsicz_bound(4));
  CHECK(!general.stipsicz_bound(7));
  CHECK(!general.stipsicz_bound(5));
  CHECK(general.stipsicz_bound(6) == 16);
  CHECK(general.stipsicz_bound(9) == 24);
  CHECK(general.stipsicz_bound(13) == 32);
  CHECK(general.stipsicz_bound(15) == 40);
  CHECK(general.stipsicz_bound(16) == 36);
}

TEST_CASE("profile validation") {
  Profile p = Profile::general();
  p.enabled_rules.insert("R99");
  CHECK_THROWS_AS(p.validate(), error);

  Profile q = Profile::general();
  q.enabled_rules.insert("R7");
  CHECK_THROWS_AS(q.validate(), error);  // general never uses complex classification

  Profile r = Profile::general();
  CHECK_THROWS_AS(apply_rule_overrides(r, "+bogus"), error);
  CHECK_THROWS_AS(apply_rule_overrides(r, "R4"), error);  // missing +/-
  apply_rule_overrides(r, "-R10,-li_2_5");
  CHECK(!r.enabled("R10"));
  CHECK(!r.enabled("li_2_5"));
}

TEST_CASE("evaluate requires an admissible vector") {
  CHECK_THROWS_AS(evaluate(vec(4, 2, {0, 0}), Profile::general()), error);
}

TEST_CASE("paper-cited verdicts") {
  // genus 7 case (b1): geography floor
  Verdict b1 = evaluate(vec(7, 12, {0, 0, 2}), Profile::complex_surfaces());
  CHECK(b1.status == VerdictStatus::Excluded);
  CHECK(b1.fired("R4"));
  CHECK(b1.witness("R4", "c1sq") == -26);
  CHECK(b1.witness("R4", "geography_floor") == -24);

  // genus 7 case (b8): signature bound
  Verdict b8 = evaluate(vec(7, 12, {0, 0, 7}), Profile::complex_surfaces());
  CHECK(b8.status == VerdictStatus::Excluded);
  CHECK(b8.fired("R5"));
  CHECK(b8.witness("R5", "sigma") == 9);
  CHECK(b8.witness("R5", "bound") == 1);

  // genus 6 cases (d3)/(d4): minimality chain pins b1 = 11 = 2g-1
  for (auto& s : {std::vector<i64>{2, 0, 3}, std::vector<i64>{1, 4, 0}}) {
    Verdict d = evaluate(vec(6, 10, s), Profile::general());
    CHECK(d.status == VerdictStatus::Excluded);
    CHECK(d.fired("R11"));
    CHECK(d.witness("R11", "b1_lower") == 11);
    CHECK(d.witness("R11", "b1_cap") == 11);
  }

  // genus 8 case (e5) survives the general profile with nothing fired
  Verdict e5 = evaluate(vec(8, 14, {0, 1, 2, 2}), Profile::general());
  CHECK(e5.status == VerdictStatus::Survives);
  for (const TraceEntry& t : e5.trace) CHECK(!t.fired);
}

TEST_CASE("genus 7 case (b11): R6 -> R9 -> R10 chain with Betti triple (6,1,4)") {
  Verdict v = evaluate(vec(7, 16, {0, 2, 1}), Profile::complex_surfaces());
  CHECK(v.status == VerdictStatus::Excluded);
  CHECK(v.fired("R6"));
  CHECK(v.fired("R9"));
  CHECK(v.fired("R10"));
  REQUIRE(v.betti.has_value());
  CHECK(v.betti->b1 == 6);
  CHECK(v.betti->b2_plus == 1);
  CHECK(v.betti->b2_minus == 4);
  CHECK(v.betti->base_genus_k == 3);
  CHECK(v.betti->blowups_m == 3);
  CHECK(v.witness("R10", "T_1") == -29);
  // Betti identities
  CHECK(v.betti->b2_plus - v.betti->b2_minus == v.invariants.sigma);
  CHECK(2 - 2 * v.betti->b1 + v.betti->b2_plus + v.betti->b2_minus == v.invariants.e);
}

TEST_CASE("survivor sets reproduce the theorems") {
  CHECK(survivors(9, 24, Profile::general()).empty());
  CHECK(survivors(4, 12, Profile::general()).empty());

  auto s10 = survivors(10, 24, Profile::general());
  CHECK(totals(s10) == std::set<std::vector<i64>>{{18, 0, 0, 0, 2, 3}});
}

TEST_CASE("lower bounds with qualifiers") {
  LowerBound b6 = lower_bound(6, 16, Profile::general());
  CHECK(b6.value == 16);
  CHECK(b6.qualifier == BoundQualifier::ProvenAtLeast);

  LowerBound b8 = lower_bound(8, 20, Profile::general());
  CHECK(b8.value == 19);
  CHECK(b8.qualifier == BoundQualifier::Conditional);

  LowerBound b5 = lower_bound(5, 15, Profile::general());
  CHECK(b5.value == 15);
  CHECK(b5.qualifier == BoundQualifier::ProvenAtLeast);
}

TEST_CASE("fired-rule witnesses re-satisfy their inequalities") {
  for (int g = 4; g <= 10; ++g) {
    for (const FiberTypeVector& v : enumerate_vectors({g, default_budget(g), std::nullopt})) {
      for (const Profile& p : {Profile::general(), Profile::complex_surfaces()}) {
        Verdict verdict = evaluate(v, p);
        bool any_exclusion = false;
        for (const TraceEntry& t : verdict.trace) {
          if (t.fired && t.action == RuleAction::Exclude) any_exclusion = true;
          if (!t.fired) continue;
          auto w = [&](const char* name) { return *verdict.witness(t.rule, name); };
          if (t.rule == "R1") CHECK(w("n") < 1);
          if (t.rule == "R2") CHECK(w("n") < w("n_floor"));
          if (t.rule == "R4") CHECK(w("c1sq") < w("geography_floor"));
          if (t.rule == "R5") CHECK(w("sigma") > w("bound"));
          if (t.rule == "R6") CHECK(w("c1sq") < w("threshold"));
          if (t.rule == "R8") CHECK(w("total") < w("stipsicz_bound"));
          if (t.rule == "R10" && t.action == RuleAction::Exclude) CHECK(w("solutions") == 0);
          if (t.rule == "R11" && t.action == RuleAction::Exclude) {
            if (w("li_2_5") == 1)
              CHECK(w("b1_lower") >= w("b1_cap"));
            else
              CHECK(w("b1_lower") > w("b1_cap"));
          }
          if (t.rule == "R12") CHECK(w("sigma") > w("bound"));
        }
        CHECK((verdict.status == VerdictStatus::Excluded) == any_exclusion);
      }
    }
  }
}

TEST_CASE("sigma = 0 candidates are never ruled-excluded by R7") {
  // (g2) at genus 10 has sigma = 0 and chi_h < 0: R7 may flag it but only
  // the Stipsicz count, not the sign of sigma, can exclude it.
  Verdict v = evaluate(vec(10, 16, {1, 2, 0, 1, 0}), Profile::complex_surfaces());
  CHECK(v.invariants.sigma == 0);
  for (const TraceEntry& t : v.trace) {
    if (t.rule == "R7") CHECK(t.action == RuleAction::Flag);
  }
  CHECK(v.fired("R8"));
}

TEST_CASE("disabling any single rule never shrinks the survivor set") {
  for (int g : {6, 8, 10}) {
    const Profile base = Profile::general();
    auto baseline = totals(survivors(g, default_budget(g), base));
    for (const std::string& id : known_rule_ids()) {
      if (id == "R7") continue;  // never part of the general profile
      Profile p = base;
      p.enabled_rules.erase(id);
      auto weakened = totals(survivors(g, default_budget(g), p));
      CHECK(std::includes(weakened.begin(), weakened.end(), baseline.begin(), baseline.end()));
    }
  }
}

TEST_CASE("li_2_5 isolates the b1 = 2g-1 step") {
  Profile no_li = Profile::general();
  apply_rule_overrides(no_li, "-li_2_5");
  Verdict d3 = evaluate(vec(6, 10, {2, 0, 3}), no_li);
  CHECK(d3.status == VerdictStatus::Survives);  // bound exactly 11 no longer excludes
}

TEST_CASE("per-vector hollemma: complex survivors under budget 2g+4 have n >= 2g+2") {
  for (int g : {6, 8, 10, 12, 9, 11, 13}) {
    for (const FiberTypeVector& v : enumerate_vectors({g, 2 * i64(g) + 4, std::nullopt})) {
      Verdict verdict = evaluate(v, Profile::complex_surfaces());
      if (verdict.status == VerdictStatus::Survives) CHECK(v.n() >= 2 * i64(g) + 2);
    }
  }
}

TEST_CASE("custom stipsicz table at genus 4 is honored and marked circular") {
  Profile p = Profile::general();
  p.stipsicz_table.push_back({0, 4, 4, 2, 4});  // even g in [4,4]: bound 12
  CHECK(p.stipsicz_bound(4) == 12);
  CHECK(p.stipsicz_covers_conclusion_genus(4));
  // (a2) now dies at R8 instead of needing the adjunction route
  Verdict a2 = evaluate(vec(4, 6, {4, 0}), p);
  CHECK(a2.fired("R8"));
  CHECK(a2.witness("R8", "circular_bound_for_this_genus") == 1);
}

TEST_CASE("profile files round-trip") {
  const std::string path = "hlf_test_profile.cfg";
  {
    std::ofstream out(path);
    out << "# test profile\n";
    out << "kind = complex\n";
    out << "rules = R1, R2, R4, R5, R6, R7, R8, R9, R10, R11, R12, li_2_5\n";
    out << "stipsicz = even 6 * 2 4\n";
    out << "stipsicz = odd 9 13 2 6\n";
  }
  Profile p = load_profile_file(path);
  CHECK(p.kind == ProfileKind::Complex);
  CHECK(p.enabled("R7"));
  CHECK(p.stipsicz_bound(6) == 16);
  CHECK(p.stipsicz_bound(11) == 28);
  CHECK(!p.stipsicz_bound(15));  // default table was replaced

  {
    std::ofstream out(path);
    out << "kind = general\n";
    out << "rules = R1, R7\n";
  }
  CHECK_THROWS_AS(load_profile_file(path), error);

  {
    std::ofstream out(path);
    out << "mystery = 1\n";
  }
  CHECK_THROWS_AS(load_profile_file(path), error);
  std::remove(path.c_str());
}

TEST_CASE("evaluate traces are byte-stable") {
  Profile p = Profile::general();
  CensusResult a = run_census(8, 20, p, 1);
  CensusResult b = run_census(8, 20, p, 3);
  std::ostringstream ja, jb;
  render_census(ja, a, OutputFormat::Json);
  render_census(jb, b, OutputFormat::Json);
  CHECK(ja.str() == jb.str());
}
