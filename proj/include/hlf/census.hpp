#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlf/obstruction.hpp"

namespace hlf {

enum class UpperBoundSource { Even2g4, Odd5g3, Hyperelliptic8g4 };

struct UpperBound {
  i64 value;
  UpperBoundSource source;
};

std::string to_string(UpperBoundSource s);
std::string to_string(BoundQualifier q);

// Census of one (genus, budget, profile) cell: every admissible candidate
// with its verdict, the survivor set, and the resulting bound statement.
struct CensusResult {
  int g;
  i64 budget;
  ProfileKind kind;
  std::vector<Verdict> candidates;          // enumeration order
  std::vector<std::size_t> survivor_index;  // into candidates
  LowerBound lower;
  std::optional<UpperBound> upper;
  std::string conclusion;
};

// Default interrogation budget: 2g+4 for even g, 2g+6 for odd g.
i64 default_budget(int g);

// Known upper bound for the minimal fiber count. General profiles: 2g+4 for
// even g, min(5g-3, 8g+4) for odd g. Complex profiles: 2g+4 for even g
// (those fibrations live on complex surfaces); none is recorded for odd g.
std::optional<UpperBound> known_upper_bound(int g, ProfileKind kind);

// Runs the census. threads <= 1 evaluates serially; any thread count
// produces identical results (candidates are assigned by index).
CensusResult run_census(int g, i64 budget, const Profile& p, unsigned threads = 1);

// "M_g = ..." / "N_g ∈ {L, ..., U}" / "N_g >= L" rendering used everywhere.
std::string render_conclusion(int g, ProfileKind kind, const LowerBound& lower,
                              const std::optional<UpperBound>& upper);

struct BoundsReport {
  int g;
  ProfileKind kind;
  i64 budget;
  LowerBound lower;
  std::optional<UpperBound> upper;
  std::string conclusion;
};

BoundsReport make_bounds_report(int g, const Profile& p,
                                std::optional<i64> budget = std::nullopt, unsigned threads = 1);

}  // namespace hlf
