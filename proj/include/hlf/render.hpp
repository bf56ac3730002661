#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hlf/adjunction.hpp"
#include "hlf/census.hpp"
#include "hlf/twist_words.hpp"

namespace hlf {

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& s);  // errc::usage on junk

// All emitters are byte-deterministic for a given input.
void render_census(std::ostream& os, const CensusResult& r, OutputFormat format);
void render_adjunction(std::ostream& os, const RuledTarget& t, const ExistenceVerdict& v,
                       OutputFormat format);

struct WordReport {
  std::size_t index;  // line number (file) or 1 (--word)
  FiberTypeVector vector;
  i64 image;
  i64 modulus;
};
void render_words(std::ostream& os, const std::vector<WordReport>& reports);

void render_bounds(std::ostream& os, const std::vector<BoundsReport>& reports);

}  // namespace hlf
