#pragma once

#include <optional>
#include <vector>

#include "hlf/fiber_vector.hpp"

namespace hlf {

// Census query: all admissible vectors with n + s strictly below budget.
struct EnumerationQuery {
  int g = 2;
  i64 budget = 2;  // strict upper bound on n + s
  std::optional<i64> n_floor_override;
};

// Smallest n compatible with a nontrivial genus-g fibration over S^2:
// ceil((8g-3)/5).
i64 n_lower_bound(int g);

// All vectors with n >= max(1, floor), n + s < budget and congruence
// residue 0, in lexicographic (n, s1, ..., sk) order. Deterministic.
std::vector<FiberTypeVector> enumerate_vectors(const EnumerationQuery& q);

}  // namespace hlf
