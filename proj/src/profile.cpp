#include "hlf/profile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hlf/errors.hpp"

namespace hlf {

namespace {

const std::vector<std::string> kRuleIds = {"R1", "R2",  "R4",  "R5",  "R6",    "R7",
                                           "R8", "R9", "R10", "R11", "R12", "li_2_5"};

std::vector<StipsiczEntry> default_table() {
  return {
      {0, 6, std::nullopt, 2, 4},    // even g >= 6: 2g+4
      {1, 15, std::nullopt, 2, 10},  // odd g >= 15: 2g+10
      {1, 9, 13, 2, 6},              // odd 9 <= g <= 13: 2g+6
  };
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

i64 parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    i64 v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(errc::config, "malformed " + what + ": \"" + s + "\"");
  }
}

}  // namespace

const std::vector<std::string>& known_rule_ids() { return kRuleIds; }

Profile Profile::general() {
  Profile p;
  p.kind = ProfileKind::General;
  p.enabled_rules = {"R1", "R2", "R4", "R5", "R6", "R8", "R9", "R10", "R11", "R12", "li_2_5"};
  p.stipsicz_table = default_table();
  return p;
}

Profile Profile::complex_surfaces() {
  Profile p = general();
  p.kind = ProfileKind::Complex;
  p.enabled_rules.insert("R7");
  return p;
}

std::optional<i64> Profile::stipsicz_bound(int g) const {
  for (const StipsiczEntry& e : stipsicz_table) {
    if (e.matches(g)) return e.bound(g);
  }
  return std::nullopt;
}

bool Profile::stipsicz_covers_conclusion_genus(int g) const {
  if (g != 4 && g != 7) return false;
  return stipsicz_bound(g).has_value();
}

void Profile::validate() const {
  for (const std::string& id : enabled_rules) {
    if (std::find(kRuleIds.begin(), kRuleIds.end(), id) == kRuleIds.end())
      fail(errc::config, "unknown rule id \"" + id + "\"");
  }
  if (kind == ProfileKind::General && enabled("R7"))
    fail(errc::config, "R7 uses the classification of complex surfaces; a general profile cannot enable it");
}

void apply_rule_overrides(Profile& p, const std::string& overrides) {
  for (const std::string& tok : split(overrides, ',')) {
    if (tok.empty()) continue;
    if (tok[0] != '+' && tok[0] != '-')
      fail(errc::config, "rule override must start with + or -: \"" + tok + "\"");
    const std::string id = trim(tok.substr(1));
    if (std::find(kRuleIds.begin(), kRuleIds.end(), id) == kRuleIds.end())
      fail(errc::config, "unknown rule id \"" + id + "\"");
    if (tok[0] == '+')
      p.enabled_rules.insert(id);
    else
      p.enabled_rules.erase(id);
  }
  p.validate();
}

Profile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::config, "cannot open profile file: " + path);
  Profile p = Profile::general();
  bool table_replaced = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(errc::config, "profile line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "kind") {
      if (value == "general")
        p.kind = ProfileKind::General;
      else if (value == "complex")
        p.kind = ProfileKind::Complex;
      else
        fail(errc::config, "kind must be general or complex, got \"" + value + "\"");
      p.enabled_rules = (p.kind == ProfileKind::Complex) ? Profile::complex_surfaces().enabled_rules
                                                         : Profile::general().enabled_rules;
    } else if (key == "rules") {
      p.enabled_rules.clear();
      for (const std::string& id : split(value, ',')) {
        if (!id.empty()) p.enabled_rules.insert(id);
      }
    } else if (key == "stipsicz") {
      std::istringstream fields(value);
      std::string parity, gmin, gmax, coeff, offset;
      if (!(fields >> parity >> gmin >> gmax >> coeff >> offset))
        fail(errc::config, "stipsicz entry needs: <even|odd> <gmin> <gmax|*> <coeff> <offset>");
      StipsiczEntry e;
      if (parity == "even")
        e.parity = 0;
      else if (parity == "odd")
        e.parity = 1;
      else
        fail(errc::config, "stipsicz parity must be even or odd, got \"" + parity + "\"");
      e.g_min = static_cast<int>(parse_int(gmin, "stipsicz gmin"));
      if (gmax != "*") e.g_max = static_cast<int>(parse_int(gmax, "stipsicz gmax"));
      e.coeff = parse_int(coeff, "stipsicz coeff");
      e.offset = parse_int(offset, "stipsicz offset");
      if (!table_replaced) {
        p.stipsicz_table.clear();
        table_replaced = true;
      }
      p.stipsicz_table.push_back(e);
    } else {
      fail(errc::config, "unknown profile key \"" + key + "\"");
    }
  }
  p.validate();
  return p;
}

}  // namespace hlf
