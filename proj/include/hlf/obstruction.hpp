#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlf/fiber_vector.hpp"
#include "hlf/invariants.hpp"
#include "hlf/profile.hpp"

namespace hlf {

// Betti numbers forced by b2+ = 1 together with (e, sigma). When b1 is even
// the space can be a blow-up of a ruled surface over Sigma_k with k = b1/2
// and m = b2- - 1 exceptional classes.
struct BettiResolution {
  i64 b1;
  i64 b2_plus;
  i64 b2_minus;
  std::optional<i64> base_genus_k;
  std::optional<i64> blowups_m;
};

enum class VerdictStatus { Excluded, Survives };
enum class RuleAction { Exclude, Flag, Note };

// One certificate line: which rule ran, whether it took its action, and the
// exact numbers that reproduce its inequality.
struct TraceEntry {
  std::string rule;
  bool fired;
  RuleAction action;
  std::vector<std::pair<std::string, i64>> witnesses;
  std::string citation;
};

struct Verdict {
  FiberTypeVector vector;
  InvariantSet invariants;
  VerdictStatus status;
  std::vector<TraceEntry> trace;
  std::optional<BettiResolution> betti;

  bool fired(const std::string& rule_id) const;
  std::optional<i64> witness(const std::string& rule_id, const std::string& name) const;
};

// Applies the enabled rules in the fixed order R1, R2, R4..R12 and returns
// the full certificate trace. Requires an admissible vector (residue 0);
// signature integrality is checked on the way in.
Verdict evaluate(const FiberTypeVector& v, const Profile& p);

// Every enumerated candidate that no enabled rule excludes, in enumeration
// order.
std::vector<Verdict> survivors(int g, i64 budget, const Profile& p);

enum class BoundQualifier { ProvenAtLeast, Conditional };

struct LowerBound {
  i64 value;
  BoundQualifier qualifier;
};

// budget with PROVEN_AT_LEAST when nothing survives; otherwise the smallest
// survivor total with CONDITIONAL (the bound improves only if that survivor
// turns out to be unrealizable).
LowerBound lower_bound(int g, i64 budget, const Profile& p);

}  // namespace hlf
