#include "hlf/render.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hlf/errors.hpp"
#include "hlf/reference_tables.hpp"

namespace hlf {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  fail(errc::usage, "unknown format \"" + s + "\" (expected table, json or csv)");
}

namespace {

std::string fired_rules(const Verdict& v, const char* sep) {
  std::string out;
  for (const TraceEntry& t : v.trace) {
    if (!t.fired) continue;
    if (!out.empty()) out += sep;
    out += t.rule;
  }
  return out.empty() ? "-" : out;
}

std::string action_name(RuleAction a) {
  switch (a) {
    case RuleAction::Exclude: return "exclude";
    case RuleAction::Flag: return "flag";
    case RuleAction::Note: return "note";
  }
  return "?";
}

std::string profile_name(ProfileKind k) {
  return k == ProfileKind::Complex ? "complex" : "general";
}

ordered_json trace_json(const Verdict& v) {
  ordered_json arr = ordered_json::array();
  for (const TraceEntry& t : v.trace) {
    ordered_json entry;
    entry["rule"] = t.rule;
    entry["fired"] = t.fired;
    entry["action"] = action_name(t.action);
    ordered_json wit;
    for (const auto& [name, value] : t.witnesses) wit[name] = value;
    entry["witnesses"] = std::move(wit);
    entry["citation"] = t.citation;
    arr.push_back(std::move(entry));
  }
  return arr;
}

ordered_json candidate_json(const Verdict& v, bool with_trace) {
  ordered_json c;
  c["n"] = v.vector.n();
  c["s"] = v.vector.s();
  c["e"] = v.invariants.e;
  c["sigma"] = v.invariants.sigma;
  c["c1sq"] = v.invariants.c1_sq;
  c["chi_h_times4"] = checked_add(v.invariants.e, v.invariants.sigma);
  c["chi_h"] = v.invariants.chi_h.str();
  c["verdict"] = v.status == VerdictStatus::Excluded ? "EXCLUDED" : "SURVIVES";
  c["trace"] = with_trace ? trace_json(v) : ordered_json::array();
  return c;
}

void census_table(std::ostream& os, const CensusResult& r) {
  const int k = r.g / 2;
  os << "# census genus=" << r.g << " budget=" << r.budget
     << " profile=" << profile_name(r.kind) << "\n";
  os << std::setw(6) << "n";
  for (int h = 1; h <= k; ++h) os << std::setw(5) << ("s" + std::to_string(h));
  os << std::setw(7) << "e" << std::setw(7) << "sigma" << std::setw(7) << "c1sq" << std::setw(8)
     << "chi_h" << "  " << std::setw(8) << std::left << "verdict" << std::right << "  fired\n";
  bool any_unlisted = false;
  for (const Verdict& v : r.candidates) {
    os << std::setw(6) << v.vector.n();
    for (i64 s : v.vector.s()) os << std::setw(5) << s;
    os << std::setw(7) << v.invariants.e << std::setw(7) << v.invariants.sigma << std::setw(7)
       << v.invariants.c1_sq << std::setw(8) << v.invariants.chi_h.str() << "  " << std::setw(8)
       << std::left << (v.status == VerdictStatus::Excluded ? "EXCLUDED" : "SURVIVES")
       << std::right << "  " << fired_rules(v, ",");
    if (!in_reference_tables(v.vector)) {
      os << "  *";
      any_unlisted = true;
    }
    os << "\n";
  }
  if (any_unlisted) os << "# * not listed in source tables\n";
  os << "# candidates: " << r.candidates.size() << "\n";
  os << "# survivors: " << r.survivor_index.size() << "\n";
  for (std::size_t i : r.survivor_index)
    os << "#   survivor " << r.candidates[i].vector.str() << " total "
       << r.candidates[i].vector.total() << "\n";
  os << "# lower_bound: " << r.lower.value << " " << to_string(r.lower.qualifier) << "\n";
  if (r.upper)
    os << "# upper_bound: " << r.upper->value << " " << to_string(r.upper->source) << "\n";
  os << "# conclusion: " << r.conclusion << "\n";
}

void census_csv(std::ostream& os, const CensusResult& r) {
  const int k = r.g / 2;
  os << "n";
  for (int h = 1; h <= k; ++h) os << ",s" << h;
  os << ",e,sigma,c1sq,chi_h,verdict,fired\n";
  for (const Verdict& v : r.candidates) {
    os << v.vector.n();
    for (i64 s : v.vector.s()) os << "," << s;
    os << "," << v.invariants.e << "," << v.invariants.sigma << "," << v.invariants.c1_sq << ","
       << v.invariants.chi_h.str() << ","
       << (v.status == VerdictStatus::Excluded ? "EXCLUDED" : "SURVIVES") << ","
       << fired_rules(v, ";") << "\n";
  }
}

void census_json(std::ostream& os, const CensusResult& r) {
  ordered_json j;
  j["genus"] = r.g;
  j["budget"] = r.budget;
  j["profile"] = profile_name(r.kind);
  ordered_json cands = ordered_json::array();
  for (const Verdict& v : r.candidates) cands.push_back(candidate_json(v, true));
  j["candidates"] = std::move(cands);
  ordered_json survs = ordered_json::array();
  for (std::size_t i : r.survivor_index)
    survs.push_back(candidate_json(r.candidates[i], false));
  j["survivors"] = std::move(survs);
  j["lower_bound"] = r.lower.value;
  j["qualifier"] = to_string(r.lower.qualifier);
  if (r.upper)
    j["upper_bound"] = r.upper->value;
  else
    j["upper_bound"] = nullptr;
  j["conclusion"] = r.conclusion;
  os << j.dump(2) << "\n";
}

}  // namespace

void render_census(std::ostream& os, const CensusResult& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: census_table(os, r); break;
    case OutputFormat::Csv: census_csv(os, r); break;
    case OutputFormat::Json: census_json(os, r); break;
  }
}

void render_adjunction(std::ostream& os, const RuledTarget& t, const ExistenceVerdict& v,
                       OutputFormat format) {
  const char* outcome =
      v.outcome == AdjunctionOutcome::NoSolution ? "NO_SOLUTION" : "SOLUTIONS_EXIST";
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["base_genus"] = t.k;
    j["blowups"] = t.m;
    j["fiber_genus"] = t.gF;
    j["degree_bound"] = degree_bound(t);
    ordered_json per = ordered_json::array();
    for (const DegreeReport& d : v.per_degree) {
      ordered_json dj;
      dj["a"] = d.a;
      dj["T"] = d.T;
      ordered_json sols = ordered_json::array();
      for (const FiberClassSolution& s : d.solutions) {
        ordered_json sj;
        sj["a"] = s.a;
        sj["b"] = s.b;
        sj["c"] = s.c;
        sols.push_back(std::move(sj));
      }
      dj["solutions"] = std::move(sols);
      per.push_back(std::move(dj));
    }
    j["per_degree"] = std::move(per);
    j["outcome"] = outcome;
    os << j.dump(2) << "\n";
    return;
  }
  os << "# target: (Sigma_" << t.k << " x S^2) # " << t.m << " CPbar^2, fiber genus " << t.gF
     << "\n";
  os << "# degree_bound: " << degree_bound(t) << "\n";
  if (v.per_degree.empty()) os << "# no admissible degree\n";
  for (const DegreeReport& d : v.per_degree) {
    os << "a=" << d.a << " T=" << d.T;
    if (d.T < 0) {
      os << "  (negative completion constant: no class at this degree)\n";
      continue;
    }
    if (d.solutions.empty()) {
      os << "  (no representation satisfies both equations)\n";
      continue;
    }
    os << "\n";
    for (const FiberClassSolution& s : d.solutions) {
      os << "  solution a=" << s.a << " b=" << s.b << " c=(";
      for (std::size_t i = 0; i < s.c.size(); ++i) os << (i ? "," : "") << s.c[i];
      os << ")\n";
    }
  }
  os << "outcome: " << outcome << "\n";
  if (v.outcome == AdjunctionOutcome::SolutionsExist)
    os << "# the homological obstruction vanishes; this does not assert that a "
          "fibration exists\n";
}

void render_words(std::ostream& os, const std::vector<WordReport>& reports) {
  for (const WordReport& w : reports) {
    os << "word " << w.index << ": vector=" << w.vector.str() << " image=" << w.image
       << " modulus=" << w.modulus
       << " necessary-condition=" << (w.image == 0 ? "PASS" : "FAIL") << "\n";
  }
}

void render_bounds(std::ostream& os, const std::vector<BoundsReport>& reports) {
  for (const BoundsReport& b : reports) {
    os << "g=" << b.g << " profile=" << profile_name(b.kind) << " budget=" << b.budget
       << " lower=" << b.lower.value << " " << to_string(b.lower.qualifier);
    if (b.upper) os << " upper=" << b.upper->value << " " << to_string(b.upper->source);
    os << " conclusion: " << b.conclusion << "\n";
  }
}

}  // namespace hlf
