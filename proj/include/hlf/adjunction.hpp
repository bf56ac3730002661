#pragma once

#include <vector>

#include "hlf/checked.hpp"

namespace hlf {

// Candidate total space (Sigma_k x S^2) # m CPbar^2 probed for a genus-gF
// fiber class. The degree argument needs base genus k >= 2.
struct RuledTarget {
  int k;
  int m;
  int gF;
  RuledTarget(int k_, int m_, int gF_);
};

// Integer homology class F = a U + b V + sum c_i E_i satisfying both
// [F]^2 = 0 (2ab = sum c_i^2) and adjunction
// (2 gF - 2 = 2ak - 2a - 2b - sum c_i).
struct FiberClassSolution {
  i64 a;
  i64 b;
  std::vector<i64> c;
};

enum class AdjunctionOutcome { NoSolution, SolutionsExist };

// One branch of the search: degree a, its square-completion constant
// T_a = 4a(2ak - 2a - 2gF + 2) + m a^2 (four times the rational constant of
// the completed-square identity), and every solution of degree a.
struct DegreeReport {
  i64 a;
  i64 T;
  std::vector<FiberClassSolution> solutions;
};

struct ExistenceVerdict {
  AdjunctionOutcome outcome;
  std::vector<DegreeReport> per_degree;  // ascending a
};

// floor((gF - 2)/(k - 1)); degree 0 means no admissible degree at all.
i64 degree_bound(const RuledTarget& t);

// T_a for 1 <= a <= degree_bound(t).
i64 completion_constant(const RuledTarget& t, i64 a);

// Exhaustive bounded search: for each degree, either T_a < 0 certifies
// nonexistence or every representation sum (2c_i + a)^2 = T_a is expanded
// and checked against both original equations. SolutionsExist only attests
// that the homological obstruction vanishes.
ExistenceVerdict decide(const RuledTarget& t);

}  // namespace hlf
