#include "oracles.hpp"

#include <algorithm>

namespace oracle {

namespace {

i64 abelianization_order(int g) {
  return (g % 2 == 1) ? 4 * (2 * i64(g) + 1) : 2 * (2 * i64(g) + 1);
}

i64 residue(int g, i64 n, const std::vector<i64>& s) {
  i64 acc = n;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const i64 h = static_cast<i64>(i) + 1;
    acc += (2 * h * (4 * h + 2)) * s[i];
  }
  return acc % abelianization_order(g);
}

}  // namespace

i64 n_floor_by_counting(int g) {
  i64 n = 0;
  while (5 * n < 8 * i64(g) - 3) ++n;
  return n;
}

std::vector<Vec> enumerate_admissible(int g, i64 budget) {
  std::vector<Vec> out;
  const int k = g / 2;
  i64 floor = n_floor_by_counting(g);
  if (floor < 1) floor = 1;
  for (i64 n = floor; n < budget; ++n) {
    std::vector<i64> s(static_cast<std::size_t>(k), 0);
    while (true) {
      i64 total = n;
      for (i64 v : s) total += v;
      if (total < budget && residue(g, n, s) == 0) out.push_back({n, s});
      // odometer with sum bound budget-1-n
      int pos = k - 1;
      while (pos >= 0) {
        ++s[static_cast<std::size_t>(pos)];
        i64 ssum = 0;
        for (i64 v : s) ssum += v;
        if (n + ssum < budget) break;
        s[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Solution> adjunction_solutions(int k, int m, int gF) {
  std::vector<Solution> out;
  const i64 box = 2 * i64(gF) * i64(gF);
  for (i64 a = 1; a * (k - 1) <= i64(gF) - 2; ++a) {
    for (i64 b = -box; b <= box; ++b) {
      const i64 target = 2 * a * b;  // sum of c_i^2 must equal this
      if (target < 0) continue;
      std::vector<i64> c(static_cast<std::size_t>(m), 0);
      // DFS over non-increasing c with entries in [-box, box]
      std::vector<Solution> found;
      auto rec = [&](auto&& self, int level, i64 remaining, i64 hi) -> void {
        if (level == m) {
          if (remaining != 0) return;
          // adjunction: 2 gF - 2 = 2ak - 2a - 2b - sum c_i
          i64 csum = 0;
          for (i64 v : c) csum += v;
          if (2 * i64(gF) - 2 == 2 * a * k - 2 * a - 2 * b - csum)
            found.push_back({a, b, c});
          return;
        }
        i64 isq = 0;  // entries satisfy v^2 <= remaining
        while ((isq + 1) * (isq + 1) <= remaining) ++isq;
        for (i64 v = std::min({hi, box, isq}); v >= std::max(-box, -isq); --v) {
          c[static_cast<std::size_t>(level)] = v;
          self(self, level + 1, remaining - v * v, v);
        }
      };
      if (m == 0) {
        if (target == 0 && 2 * i64(gF) - 2 == 2 * a * k - 2 * a - 2 * b)
          found.push_back({a, b, {}});
      } else {
        rec(rec, 0, target, box);
      }
      out.insert(out.end(), found.begin(), found.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace oracle
