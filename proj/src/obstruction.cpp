#include "hlf/obstruction.hpp"

#include <algorithm>

#include "hlf/adjunction.hpp"
#include "hlf/enumerator.hpp"
#include "hlf/errors.hpp"

namespace hlf {

bool Verdict::fired(const std::string& rule_id) const {
  for (const TraceEntry& t : trace) {
    if (t.rule == rule_id && t.fired) return true;
  }
  return false;
}

std::optional<i64> Verdict::witness(const std::string& rule_id, const std::string& name) const {
  for (const TraceEntry& t : trace) {
    if (t.rule != rule_id) continue;
    for (const auto& [key, value] : t.witnesses) {
      if (key == name) return value;
    }
  }
  return std::nullopt;
}

namespace {

struct EvalContext {
  const FiberTypeVector& v;
  const InvariantSet& inv;
  const Profile& profile;
  i64 s_total;
  i64 chi4;  // e + sigma = 4 chi_h
  bool flag_b2_plus_one = false;
  bool flag_ruled_blowup = false;
  bool excluded = false;
  std::optional<BettiResolution> betti;
  std::vector<TraceEntry> trace;

  void emit(TraceEntry entry) {
    if (entry.fired && entry.action == RuleAction::Exclude) excluded = true;
    trace.push_back(std::move(entry));
  }
};

void rule_nontriviality(EvalContext& c) {  // R1
  const bool bad = c.v.n() < 1;
  c.emit({"R1", bad, RuleAction::Exclude,
          {{"n", c.v.n()}},
          "every nontrivial Lefschetz fibration over S^2 has a non-separating vanishing cycle"});
}

void rule_n_floor(EvalContext& c) {  // R2
  const i64 floor = n_lower_bound(c.v.g());
  const bool bad = c.v.n() < floor;
  c.emit({"R2", bad, RuleAction::Exclude,
          {{"n", c.v.n()}, {"n_floor", floor}},
          "Baykur-Korkmaz: n >= (8g-3)/5"});
}

void rule_geography_floor(EvalContext& c) {  // R4
  const i64 floor = 4 - 4 * static_cast<i64>(c.v.g());
  const bool bad = c.inv.c1_sq < floor;
  c.emit({"R4", bad, RuleAction::Exclude,
          {{"c1sq", c.inv.c1_sq}, {"geography_floor", floor}},
          "Stipsicz: c1^2 >= 4-4g for Lefschetz fibrations over S^2"});
}

void rule_ozbagci(EvalContext& c) {  // R5
  const i64 bound = checked_sub(checked_sub(c.v.n(), c.s_total), 4);
  const bool bad = c.inv.sigma > bound;
  c.emit({"R5", bad, RuleAction::Exclude,
          {{"sigma", c.inv.sigma}, {"bound", bound}},
          "Ozbagci: sigma <= n-s-4 for hyperelliptic Lefschetz fibrations over S^2"});
}

void rule_li_rational_ruled(EvalContext& c) {  // R6
  const i64 threshold = 2 - 2 * static_cast<i64>(c.v.g());
  const bool flag = c.inv.c1_sq < threshold;
  if (flag) c.flag_b2_plus_one = true;
  c.emit({"R6", flag, RuleAction::Flag,
          {{"c1sq", c.inv.c1_sq}, {"threshold", threshold}},
          "T.-J. Li: c1^2 < 2-2g forces a blow-up of a rational or ruled surface, so b2+ = 1"});
}

void rule_complex_chi_ruled(EvalContext& c) {  // R7, complex profiles only
  const bool flag = c.chi4 < 0;
  const bool exclude = flag && c.inv.sigma > 0;
  if (flag) {
    c.flag_b2_plus_one = true;
    c.flag_ruled_blowup = true;
  }
  c.emit({"R7", flag, exclude ? RuleAction::Exclude : RuleAction::Flag,
          {{"chi_h_times4", c.chi4}, {"sigma", c.inv.sigma}},
          "classification of complex surfaces: chi_h < 0 forces a blow-up of a ruled surface, "
          "and ruled surfaces have sigma <= 0"});
}

void rule_stipsicz_fiber_count(EvalContext& c) {  // R8
  if (!c.flag_b2_plus_one) return;
  TraceEntry entry{"R8", false, RuleAction::Exclude,
                   {{"total", c.v.total()}},
                   "Stipsicz: fiber-count lower bound for b2+ = 1 Lefschetz fibrations"};
  const std::optional<i64> bound = c.profile.stipsicz_bound(c.v.g());
  if (bound) {
    entry.witnesses.emplace_back("stipsicz_bound", *bound);
    if (c.profile.stipsicz_covers_conclusion_genus(c.v.g()))
      entry.witnesses.emplace_back("circular_bound_for_this_genus", 1);
    entry.fired = c.v.total() < *bound;
  }
  c.emit(std::move(entry));
}

void rule_betti_resolution(EvalContext& c) {  // R9
  if (!c.flag_b2_plus_one) return;
  const i64 two_b1 = checked_sub(checked_sub(4, c.inv.sigma), c.inv.e);
  const i64 b2_minus = checked_sub(1, c.inv.sigma);
  TraceEntry entry{"R9", false, RuleAction::Note,
                   {{"b2_plus", 1}, {"b2_minus", b2_minus}, {"two_b1", two_b1}},
                   "b2+ = 1 resolution: b1 <= 2g-1; a blow-up of a ruled surface over Sigma_k "
                   "has b1 = 2k"};
  const i64 b1_cap = 2 * static_cast<i64>(c.v.g()) - 1;
  if (two_b1 < 0 || two_b1 % 2 != 0) {
    entry.fired = true;
    entry.action = RuleAction::Exclude;
  } else {
    const i64 b1 = two_b1 / 2;
    entry.witnesses.emplace_back("b1", b1);
    if (b1 > b1_cap) {
      entry.fired = true;
      entry.action = RuleAction::Exclude;
    } else if (c.flag_ruled_blowup && b1 % 2 == 1) {
      entry.fired = true;
      entry.action = RuleAction::Exclude;
    } else if (b1 % 2 == 0 && b2_minus >= 0) {
      BettiResolution betti{b1, 1, b2_minus, b1 / 2, checked_sub(b2_minus, 1)};
      entry.witnesses.emplace_back("k", *betti.base_genus_k);
      entry.witnesses.emplace_back("m", *betti.blowups_m);
      entry.fired = true;  // resolution recorded
      c.betti = betti;
    }
  }
  c.emit(std::move(entry));
}

void rule_adjunction_obstruction(EvalContext& c) {  // R10
  if (!c.betti || !c.betti->base_genus_k || !c.betti->blowups_m) return;
  const i64 k = *c.betti->base_genus_k;
  const i64 m = *c.betti->blowups_m;
  if (k < 2 || m < 0 || c.inv.sigma > 0) return;
  const RuledTarget target(static_cast<int>(k), static_cast<int>(m), c.v.g());
  const ExistenceVerdict existence = decide(target);
  TraceEntry entry{"R10", existence.outcome == AdjunctionOutcome::NoSolution,
                   existence.outcome == AdjunctionOutcome::NoSolution ? RuleAction::Exclude
                                                                      : RuleAction::Note,
                   {{"k", k}, {"m", m}, {"degree_bound", degree_bound(target)}},
                   "adjunction and [F]^2 = 0 in (Sigma_k x S^2) # m CPbar^2 "
                   "(Li-Liu pseudo-holomorphic fiber, Kneser degree bound)"};
  i64 solution_count = 0;
  for (const DegreeReport& d : existence.per_degree) {
    entry.witnesses.emplace_back("T_" + std::to_string(d.a), d.T);
    solution_count = checked_add(solution_count, static_cast<i64>(d.solutions.size()));
  }
  entry.witnesses.emplace_back("solutions", solution_count);
  // Only the trivial S^2-bundle over Sigma_k is probed; with no blow-ups the
  // twisted bundle is a genuinely different space the certificate does not
  // cover.
  if (m == 0) entry.witnesses.emplace_back("m0_trivial_bundle_only", 1);
  c.emit(std::move(entry));
}

void rule_taubes_minimality_chain(EvalContext& c) {  // R11
  if (c.excluded) return;
  if (!(c.inv.sigma > 0 && c.chi4 < 0 && c.inv.c1_sq < 0)) return;
  // b2- = b1 + 2 chi_h - 1 - sigma together with b2- >= (-c1^2) gives
  // b1 >= -c1^2 + 1 + sigma - 2 chi_h; compare twice the bound to stay
  // integral.
  const i64 twice_bound =
      checked_sub(checked_add(checked_add(checked_mul(-2, c.inv.c1_sq), 2),
                              checked_mul(2, c.inv.sigma)),
                  c.chi4);
  const i64 b1_lower = ceil_div(twice_bound, 2);
  const i64 b1_cap = 2 * static_cast<i64>(c.v.g()) - 1;
  const bool li25 = c.profile.enabled("li_2_5");
  const bool bad = b1_lower > b1_cap || (li25 && b1_lower == b1_cap);
  c.emit({"R11", bad, RuleAction::Exclude,
          {{"sigma", c.inv.sigma},
           {"chi_h_times4", c.chi4},
           {"c1sq", c.inv.c1_sq},
           {"b1_lower", b1_lower},
           {"b1_cap", b1_cap},
           {"li_2_5", li25 ? 1 : 0}},
          "Liu, Taubes: a minimal symplectic 4-manifold has c1^2 >= 0; b1 <= 2g-1; "
          "Li Lemma 2.5 rules out b1 = 2g-1"});
}

void rule_cadavid(EvalContext& c) {  // R12
  const i64 bound = checked_sub(checked_sub(c.v.n(), c.s_total), 2);
  const bool bad = c.inv.sigma > bound;
  // eq: sigma <= n-s-2(2g-b1) rearranges to b1 >= 2g - (n-s-sigma)/2.
  const i64 b1_min =
      ceil_div(checked_sub(checked_mul(4, c.v.g()),
                           checked_sub(checked_sub(c.v.n(), c.s_total), c.inv.sigma)),
               2);
  c.emit({"R12", bad, RuleAction::Exclude,
          {{"sigma", c.inv.sigma}, {"bound", bound}, {"b1_min", b1_min}},
          "Cadavid: sigma <= n-s-2(2g-b1), with b1 <= 2g-1"});
}

struct RuleSlot {
  const char* id;
  void (*run)(EvalContext&);
};

constexpr RuleSlot kRuleOrder[] = {
    {"R1", rule_nontriviality},
    {"R2", rule_n_floor},
    {"R4", rule_geography_floor},
    {"R5", rule_ozbagci},
    {"R6", rule_li_rational_ruled},
    {"R7", rule_complex_chi_ruled},
    {"R8", rule_stipsicz_fiber_count},
    {"R9", rule_betti_resolution},
    {"R10", rule_adjunction_obstruction},
    {"R11", rule_taubes_minimality_chain},
    {"R12", rule_cadavid},
};

}  // namespace

Verdict evaluate(const FiberTypeVector& v, const Profile& p) {
  p.validate();
  InvariantSet inv = invariant_set(v);  // throws on non-integral signature
  if (inv.residue != 0) {
    fail(errc::domain,
         "vector " + v.str() + " is not admissible: residue " + std::to_string(inv.residue));
  }
  EvalContext ctx{v, inv, p, v.s_total(), checked_add(inv.e, inv.sigma)};
  for (const RuleSlot& slot : kRuleOrder) {
    if (p.enabled(slot.id)) slot.run(ctx);
  }
  return Verdict{v, inv, ctx.excluded ? VerdictStatus::Excluded : VerdictStatus::Survives,
                 std::move(ctx.trace), ctx.betti};
}

std::vector<Verdict> survivors(int g, i64 budget, const Profile& p) {
  std::vector<Verdict> out;
  for (const FiberTypeVector& v : enumerate_vectors({g, budget, std::nullopt})) {
    Verdict verdict = evaluate(v, p);
    if (verdict.status == VerdictStatus::Survives) out.push_back(std::move(verdict));
  }
  return out;
}

LowerBound lower_bound(int g, i64 budget, const Profile& p) {
  const std::vector<Verdict> alive = survivors(g, budget, p);
  if (alive.empty()) return {budget, BoundQualifier::ProvenAtLeast};
  i64 best = alive.front().vector.total();
  for (const Verdict& v : alive) best = std::min(best, v.vector.total());
  return {best, BoundQualifier::Conditional};
}

}  // namespace hlf
