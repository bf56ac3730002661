#pragma once

#include <string>
#include <vector>

#include "hlf/checked.hpp"

namespace hlf {

// Fiber-type vector of a genus-g hyperelliptic Lefschetz fibration over S^2:
// n counts non-separating vanishing cycles, s[h-1] counts separating cycles
// of type h for h = 1..floor(g/2). Counts are validated on construction; a
// fibration must have at least one singular fiber.
class FiberTypeVector {
 public:
  FiberTypeVector(int g, i64 n, std::vector<i64> s);

  int g() const { return g_; }
  i64 n() const { return n_; }
  const std::vector<i64>& s() const { return s_; }
  i64 s_total() const;
  i64 total() const;  // n + sum of s

  bool operator==(const FiberTypeVector& o) const {
    return g_ == o.g_ && n_ == o.n_ && s_ == o.s_;
  }
  // Lexicographic by (n, s1, ..., sk); only meaningful at equal genus.
  bool operator<(const FiberTypeVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return s_ < o.s_;
  }

  // "(n; s1,...,sk)"
  std::string str() const;

 private:
  int g_;
  i64 n_;
  std::vector<i64> s_;
};

}  // namespace hlf
