// fibercensus: exact census and certification of singular-fiber-type vectors
// of hyperelliptic Lefschetz fibrations over the 2-sphere.
//
// Subcommands: census, adjunction, word, bounds. Exit codes: 0 success
// (survivors are findings, not failures), 2 usage/config error, 3 resource
// error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "hlf/census.hpp"
#include "hlf/errors.hpp"
#include "hlf/render.hpp"
#include "hlf/twist_words.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

unsigned thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("CENSUS_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) {
    std::cerr << "warning: ignoring invalid CENSUS_THREADS=\"" << env << "\"\n";
    return 1;
  }
  return static_cast<unsigned>(v);
}

// Writes to --out if given, else stdout.
int with_output(const std::string& out_path, const std::function<void(std::ostream&)>& fn) {
  if (out_path.empty()) {
    fn(std::cout);
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kExitUsage;
  }
  fn(os);
  return 0;
}

hlf::Profile resolve_profile(const std::string& kind, const std::string& profile_file,
                             const std::string& rule_overrides) {
  hlf::Profile p;
  if (!profile_file.empty()) {
    p = hlf::load_profile_file(profile_file);
  } else if (kind == "complex") {
    p = hlf::Profile::complex_surfaces();
  } else if (kind == "general") {
    p = hlf::Profile::general();
  } else {
    hlf::fail(hlf::errc::usage, "profile must be complex or general, got \"" + kind + "\"");
  }
  if (!rule_overrides.empty()) hlf::apply_rule_overrides(p, rule_overrides);
  if (p.stipsicz_bound(4) || p.stipsicz_bound(7)) {
    std::cerr << "warning: profile's Stipsicz table covers genus 4 or 7; those bounds are "
                 "normally conclusions of the adjunction route (potentially circular)\n";
  }
  return p;
}

int map_error(const hlf::error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return e.kind() == hlf::errc::resource ? kExitResource : kExitUsage;
}

struct CensusArgs {
  int genus = 0;
  std::optional<hlf::i64> budget;
  std::string profile = "general";
  std::string profile_file;
  std::string rules;
  std::string format = "table";
  std::string out;
};

int run_census_cmd(const CensusArgs& a) {
  const hlf::Profile profile = resolve_profile(a.profile, a.profile_file, a.rules);
  const hlf::i64 budget = a.budget ? *a.budget : hlf::default_budget(a.genus);
  const hlf::OutputFormat format = hlf::parse_format(a.format);
  const hlf::CensusResult result = hlf::run_census(a.genus, budget, profile, thread_cap());
  return with_output(a.out, [&](std::ostream& os) { hlf::render_census(os, result, format); });
}

struct AdjunctionArgs {
  int base_genus = 0;
  int blowups = 0;
  int fiber_genus = 0;
  std::string format = "table";
  std::string out;
};

int run_adjunction_cmd(const AdjunctionArgs& a) {
  const hlf::OutputFormat format = hlf::parse_format(a.format);
  if (format == hlf::OutputFormat::Csv)
    hlf::fail(hlf::errc::usage, "adjunction supports table or json output");
  const hlf::RuledTarget target(a.base_genus, a.blowups, a.fiber_genus);
  const hlf::ExistenceVerdict verdict = hlf::decide(target);
  return with_output(a.out,
                     [&](std::ostream& os) { hlf::render_adjunction(os, target, verdict, format); });
}

struct WordArgs {
  int genus = 0;
  std::string word;
  std::string file;
  std::string out;
};

int run_word_cmd(const WordArgs& a) {
  if (a.genus < 2) hlf::fail(hlf::errc::usage, "word reports need --genus >= 2");
  std::vector<std::pair<std::size_t, hlf::TwistWord>> words;
  if (!a.word.empty() && !a.file.empty())
    hlf::fail(hlf::errc::usage, "pass either --word or --file, not both");
  if (!a.word.empty()) {
    try {
      words.emplace_back(1, hlf::parse_word(a.genus, a.word));
    } catch (const hlf::parse_error& e) {
      throw hlf::parse_error("line 1: " + std::string(e.what()), e.offset());
    } catch (const hlf::error& e) {
      throw hlf::error(e.kind(), "line 1: " + std::string(e.what()));
    }
  } else if (!a.file.empty()) {
    words = hlf::read_word_file(a.genus, a.file);
  } else {
    hlf::fail(hlf::errc::usage, "one of --word or --file is required");
  }
  std::vector<hlf::WordReport> reports;
  reports.reserve(words.size());
  for (const auto& [line, w] : words) {
    if (w.tokens.empty()) hlf::fail(hlf::errc::usage, "empty word has no fibration");
    reports.push_back(hlf::WordReport{line, hlf::to_fiber_vector(w),
                                      hlf::abelianization_image(w),
                                      hlf::h1_order(w.g, hlf::McgGroup::Hyperelliptic)});
  }
  return with_output(a.out, [&](std::ostream& os) { hlf::render_words(os, reports); });
}

struct BoundsArgs {
  std::string range;
  std::string profile = "general";
  std::string profile_file;
  std::string rules;
  std::string out;
};

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  if (sep == std::string::npos)
    hlf::fail(hlf::errc::usage, "genus range must look like <lo>..<hi>, got \"" + text + "\"");
  try {
    std::size_t pos = 0;
    const int lo = std::stoi(text.substr(0, sep), &pos);
    if (pos != sep) throw std::invalid_argument(text);
    const std::string hi_text = text.substr(sep + 2);
    const int hi = std::stoi(hi_text, &pos);
    if (pos != hi_text.size()) throw std::invalid_argument(text);
    if (lo < 2 || hi < lo) hlf::fail(hlf::errc::usage, "genus range needs 2 <= lo <= hi");
    return {lo, hi};
  } catch (const hlf::error&) {
    throw;
  } catch (const std::exception&) {
    hlf::fail(hlf::errc::usage, "malformed genus range \"" + text + "\"");
  }
}

int run_bounds_cmd(const BoundsArgs& a) {
  const hlf::Profile profile = resolve_profile(a.profile, a.profile_file, a.rules);
  const auto [lo, hi] = parse_range(a.range);
  std::vector<hlf::BoundsReport> reports;
  for (int g = lo; g <= hi; ++g)
    reports.push_back(hlf::make_bounds_report(g, profile, std::nullopt, thread_cap()));
  return with_output(a.out, [&](std::ostream& os) { hlf::render_bounds(os, reports); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"census and certification of singular fiber counts in hyperelliptic "
               "Lefschetz fibrations over S^2"};
  app.require_subcommand(1);

  CensusArgs census;
  CLI::App* census_cmd = app.add_subcommand(
      "census", "enumerate admissible fiber-type vectors and apply the obstruction rules");
  census_cmd->add_option("--genus", census.genus, "fiber genus (>= 2)")->required();
  hlf::i64 budget_value = 0;
  CLI::Option* budget_opt = census_cmd->add_option(
      "--budget", budget_value, "strict upper bound on n+s (default 2g+4 even, 2g+6 odd)");
  census_cmd->add_option("--profile", census.profile, "complex | general (default general)");
  census_cmd->add_option("--profile-file", census.profile_file, "profile configuration file");
  census_cmd->add_option("--rules", census.rules, "rule overrides, e.g. +R7,-R10");
  census_cmd->add_option("--format", census.format, "table | json | csv (default table)");
  census_cmd->add_option("--out", census.out, "output path (default stdout)");

  AdjunctionArgs adj;
  CLI::App* adj_cmd = app.add_subcommand(
      "adjunction", "decide whether a blown-up ruled surface admits a fiber class");
  adj_cmd->add_option("--base-genus", adj.base_genus, "base genus k of Sigma_k x S^2 (>= 2)")
      ->required();
  adj_cmd->add_option("--blowups", adj.blowups, "number m of blow-ups (>= 0)")->required();
  adj_cmd->add_option("--fiber-genus", adj.fiber_genus, "sought fiber genus (>= 2)")->required();
  adj_cmd->add_option("--format", adj.format, "table | json (default table)");
  adj_cmd->add_option("--out", adj.out, "output path (default stdout)");

  WordArgs word;
  CLI::App* word_cmd = app.add_subcommand(
      "word", "map twist words to fiber vectors and abelianization images");
  word_cmd->add_option("--genus", word.genus, "fiber genus (>= 2)")->required();
  word_cmd->add_option("--word", word.word, "one word, tokens N and S<h>");
  word_cmd->add_option("--file", word.file, "word file, one word per line, # comments");
  word_cmd->add_option("--out", word.out, "output path (default stdout)");

  BoundsArgs bounds;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "bounds report for a genus range at default budgets");
  bounds_cmd->add_option("--genus-range", bounds.range, "<lo>..<hi>, lo >= 2")->required();
  bounds_cmd->add_option("--profile", bounds.profile, "complex | general (default general)");
  bounds_cmd->add_option("--profile-file", bounds.profile_file, "profile configuration file");
  bounds_cmd->add_option("--rules", bounds.rules, "rule overrides, e.g. +R7,-R10");
  bounds_cmd->add_option("--out", bounds.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*census_cmd) {
      if (*budget_opt) census.budget = budget_value;
      if (census.genus < 2) hlf::fail(hlf::errc::usage, "census needs --genus >= 2");
      return run_census_cmd(census);
    }
    if (*adj_cmd) return run_adjunction_cmd(adj);
    if (*word_cmd) return run_word_cmd(word);
    if (*bounds_cmd) return run_bounds_cmd(bounds);
  } catch (const hlf::error& e) {
    return map_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
