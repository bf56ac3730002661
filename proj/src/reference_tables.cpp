#include "hlf/reference_tables.hpp"

namespace hlf {

namespace {

std::vector<ReferenceRow> build_rows() {
  const auto none = std::optional<i64>{};
  return {
      // g = 4, budget 12
      {"a1", 4, 6, {1, 0}, -5, -3, -19, none},
      {"a2", 4, 6, {4, 0}, -2, -2, -10, none},
      {"a3", 4, 6, {0, 3}, -3, -1, -9, none},
      {"a4", 4, 8, {2, 1}, -1, -3, -11, none},
      // g = 7, budget 20 (chi_h listed)
      {"b1", 7, 12, {0, 0, 2}, -10, -2, -26, -12},
      {"b2", 7, 12, {2, 0, 1}, -9, -3, -27, -12},
      {"b3", 7, 12, {4, 0, 0}, -8, -4, -28, -12},
      {"b4", 7, 12, {1, 0, 4}, -7, 3, -5, -4},
      {"b5", 7, 12, {0, 3, 2}, -7, 3, -5, -4},
      {"b6", 7, 12, {3, 0, 3}, -6, 2, -6, -4},
      {"b7", 7, 12, {2, 3, 1}, -6, 2, -6, -4},
      {"b8", 7, 12, {0, 0, 7}, -5, 9, 17, 4},
      {"b9", 7, 12, {5, 0, 2}, -5, 1, -7, -4},
      {"b10", 7, 12, {4, 3, 0}, -5, 1, -7, -4},
      {"b11", 7, 16, {0, 2, 1}, -5, -3, -19, -8},
      // g = 5, budget 15 (chi_h listed)
      {"c1", 5, 8, {0, 2}, -6, -2, -18, -8},
      {"c2", 5, 8, {3, 0}, -5, -3, -19, -8},
      {"c3", 5, 8, {1, 5}, -2, 2, 2, 0},
      // g = 6, budget 16
      {"d1", 6, 10, {0, 3, 0}, -7, -1, -17, none},
      {"d2", 6, 10, {3, 0, 1}, -6, -2, -18, none},
      {"d3", 6, 10, {2, 0, 3}, -5, 1, -7, none},
      {"d4", 6, 10, {1, 4, 0}, -5, 1, -7, none},
      {"d5", 6, 12, {0, 1, 0}, -7, -5, -29, none},
      {"d6", 6, 12, {1, 2, 0}, -5, -3, -19, none},
      {"d7", 6, 14, {1, 0, 0}, -5, -7, -31, none},
      // g = 8, budget 20
      {"e1", 8, 14, {1, 0, 0, 1}, -12, -4, -36, none},
      {"e2", 8, 14, {0, 2, 0, 1}, -11, -1, -25, none},
      {"e3", 8, 14, {0, 1, 3, 0}, -10, 2, -14, none},
      {"e4", 8, 16, {1, 1, 0, 0}, -10, -6, -38, none},
      {"e5", 8, 14, {0, 1, 2, 2}, -9, 5, -3, none},
      // g = 9, budget 24
      {"f1", 9, 16, {0, 0, 0, 2}, -14, -2, -34, none},
      {"f2", 9, 16, {1, 1, 1, 0}, -13, -3, -35, none},
      {"f3", 9, 16, {0, 0, 1, 3}, -12, 4, -12, none},
      {"f4", 9, 16, {5, 0, 0, 0}, -11, -5, -37, none},
      {"f5", 9, 16, {1, 1, 2, 1}, -11, 3, -13, none},
      {"f6", 9, 16, {0, 3, 2, 0}, -11, 3, -13, none},
      {"f7", 9, 16, {3, 1, 0, 2}, -10, 2, -14, none},
      {"f8", 9, 16, {3, 0, 3, 0}, -10, 2, -14, none},
      {"f9", 9, 16, {2, 3, 0, 1}, -10, 2, -14, none},
      {"f10", 9, 16, {1, 5, 0, 0}, -10, 2, -14, none},
      {"f11", 9, 16, {0, 0, 2, 4}, -10, 10, 10, none},
      {"f12", 9, 16, {5, 0, 1, 1}, -9, 1, -15, none},
      {"f13", 9, 16, {4, 2, 1, 0}, -9, 1, -15, none},
      {"f14", 9, 16, {2, 0, 0, 5}, -9, 9, 9, none},
      {"f15", 9, 16, {1, 2, 0, 4}, -9, 9, 9, none},
      {"f16", 9, 16, {1, 1, 3, 2}, -9, 9, 9, none},
      {"f17", 9, 16, {1, 0, 6, 0}, -9, 9, 9, none},
      {"f18", 9, 16, {0, 4, 0, 3}, -9, 9, 9, none},
      {"f19", 9, 16, {0, 3, 3, 1}, -9, 9, 9, none},
      {"f20", 9, 20, {0, 1, 2, 0}, -9, -3, -27, none},
      // g = 10, budget 24
      {"g1", 10, 16, {0, 1, 0, 1, 1}, -17, 1, -31, none},
      {"g2", 10, 16, {1, 2, 0, 1, 0}, -16, 0, -32, none},
      {"g3", 10, 16, {0, 1, 1, 1, 1}, -16, 4, -20, none},
      {"g4", 10, 16, {1, 2, 1, 1, 0}, -15, 3, -21, none},
      {"g5", 10, 16, {1, 0, 0, 2, 2}, -15, 7, -9, none},
      {"g6", 10, 16, {0, 2, 0, 0, 3}, -15, 7, -9, none},
      {"g7", 10, 16, {0, 1, 2, 1, 1}, -15, 7, -9, none},
      {"g8", 10, 16, {4, 0, 0, 0, 2}, -14, 2, -22, none},
      {"g9", 10, 16, {2, 1, 0, 2, 1}, -14, 6, -10, none},
      {"g10", 10, 16, {1, 3, 0, 0, 2}, -14, 6, -10, none},
      {"g11", 10, 16, {1, 2, 2, 1, 0}, -14, 6, -10, none},
      {"g12", 10, 16, {1, 0, 1, 2, 2}, -14, 10, 2, none},
      {"g13", 10, 16, {0, 2, 1, 0, 3}, -14, 10, 2, none},
      {"g14", 10, 16, {0, 2, 0, 4, 0}, -14, 10, 2, none},
      {"g15", 10, 16, {0, 0, 0, 1, 5}, -14, 14, 14, none},
      {"g16", 10, 18, {2, 0, 0, 0, 0}, -16, -8, -56, none},
      {"g17", 10, 18, {2, 0, 1, 0, 0}, -15, -5, -45, none},
      {"g18", 10, 18, {2, 0, 2, 0, 0}, -14, -2, -34, none},
      {"g19", 10, 18, {1, 0, 0, 3, 0}, -14, 2, -22, none},
      {"g20", 10, 18, {0, 2, 0, 1, 1}, -14, 2, -22, none},
      {"g21", 10, 20, {1, 0, 0, 0, 1}, -14, -6, -46, none},
      {"g22", 10, 18, {0, 0, 0, 2, 3}, -13, 9, 1, none},
  };
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = build_rows();
  return rows;
}

std::vector<ReferenceRow> reference_rows_for(int g) {
  std::vector<ReferenceRow> out;
  for (const ReferenceRow& r : reference_rows()) {
    if (r.g == g) out.push_back(r);
  }
  return out;
}

bool in_reference_tables(const FiberTypeVector& v) {
  for (const ReferenceRow& r : reference_rows()) {
    if (r.g == v.g() && r.n == v.n() && r.s == v.s()) return true;
  }
  return false;
}

const std::vector<ReferenceCell>& reference_cells() {
  static const std::vector<ReferenceCell> cells = {
      {4, 12}, {5, 15}, {6, 16}, {7, 20}, {8, 20}, {9, 24}, {10, 24}};
  return cells;
}

}  // namespace hlf
