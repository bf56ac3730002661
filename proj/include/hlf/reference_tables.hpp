#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlf/fiber_vector.hpp"

namespace hlf {

// One row of the published genus-4..10 case tables this census reproduces.
// e, sigma and c1_sq are the exact values of the row's vector (a handful of
// printed cells in the source disagree with their own vector by transcription
// slips; the exact values are stored). chi_h_times4 is present only where
// the source tables list a chi_h column.
struct ReferenceRow {
  std::string label;  // e.g. "b11"
  int g;
  i64 n;
  std::vector<i64> s;
  i64 e;
  i64 sigma;
  i64 c1_sq;
  std::optional<i64> chi_h_times4;

  FiberTypeVector vector() const { return FiberTypeVector(g, n, s); }
};

const std::vector<ReferenceRow>& reference_rows();

// Rows for one genus, in table order.
std::vector<ReferenceRow> reference_rows_for(int g);

// Whether (n, s) appears in the genus-g reference table.
bool in_reference_tables(const FiberTypeVector& v);

// The (genus, budget) cells the reference tables cover.
struct ReferenceCell {
  int g;
  i64 budget;
};
const std::vector<ReferenceCell>& reference_cells();

}  // namespace hlf
