#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hlf/checked.hpp"

namespace hlf {

enum class ProfileKind { Complex, General };

// One row of the Stipsicz fiber-count table: for genus of the given parity
// in [g_min, g_max] (g_max absent = unbounded), a b2+=1 fibration needs at
// least coeff*g + offset singular fibers.
struct StipsiczEntry {
  int parity;  // 0 even, 1 odd
  int g_min;
  std::optional<int> g_max;
  i64 coeff;
  i64 offset;

  bool matches(int g) const {
    return g % 2 == parity && g >= g_min && (!g_max || g <= *g_max);
  }
  i64 bound(int g) const { return checked_add(checked_mul(coeff, g), offset); }
};

// Which exclusion rules run, and with which Stipsicz table. The defaults
// deliberately leave g = 4 and g = 7 out of the table: their fiber-count
// bounds are conclusions of the engine (via the adjunction route), so using
// them as inputs would be circular. A profile may still add them; the R8
// trace then carries a circularity marker.
struct Profile {
  ProfileKind kind = ProfileKind::General;
  std::set<std::string> enabled_rules;
  std::vector<StipsiczEntry> stipsicz_table;

  static Profile general();
  static Profile complex_surfaces();

  bool enabled(const std::string& id) const { return enabled_rules.count(id) > 0; }
  std::optional<i64> stipsicz_bound(int g) const;
  // True when the table the profile carries covers genus 4 or 7.
  bool stipsicz_covers_conclusion_genus(int g) const;

  // Throws errc::config on unknown rule ids or a GENERAL profile enabling R7.
  void validate() const;
};

// The full set of known rule identifiers (R1..R12 plus the li_2_5
// sub-toggle of R11), in evaluation order.
const std::vector<std::string>& known_rule_ids();

// Applies a comma-separated "+id,-id" override list.
void apply_rule_overrides(Profile& p, const std::string& overrides);

// Key-value profile file:
//   kind = general | complex
//   rules = R1, R2, ...            (replaces the enabled set)
//   stipsicz = <even|odd> <gmin> <gmax|*> <coeff> <offset>   (repeatable;
//              first matching entry wins; replaces the default table)
// '#' starts a comment. Unknown keys or malformed values raise errc::config.
Profile load_profile_file(const std::string& path);

}  // namespace hlf
