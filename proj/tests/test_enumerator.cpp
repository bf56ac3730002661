#include <doctest.h>

#include <algorithm>
#include <set>

#include "hlf/enumerator.hpp"
#include "hlf/errors.hpp"
#include "hlf/invariants.hpp"
#include "oracles.hpp"

using namespace hlf;

namespace {

std::set<std::vector<i64>> as_tuples(const std::vector<FiberTypeVector>& vs) {
  std::set<std::vector<i64>> out;
  for (const FiberTypeVector& v : vs) {
    std::vector<i64> t{v.n()};
    t.insert(t.end(), v.s().begin(), v.s().end());
    out.insert(t);
  }
  return out;
}

}  // namespace

TEST_CASE("n lower bound is the ceiling of (8g-3)/5") {
  CHECK(n_lower_bound(4) == 6);
  CHECK(n_lower_bound(7) == 11);
  CHECK(n_lower_bound(9) == 14);
  for (int g = 2; g <= 40; ++g) CHECK(n_lower_bound(g) == oracle::n_floor_by_counting(g));
}

TEST_CASE("genus 4, budget 12: exactly the four admissible triples") {
  auto got = as_tuples(enumerate_vectors({4, 12, std::nullopt}));
  std::set<std::vector<i64>> want = {{6, 1, 0}, {6, 4, 0}, {6, 0, 3}, {8, 2, 1}};
  CHECK(got == want);
}

TEST_CASE("genus 5, budget 15: exactly three vectors") {
  auto got = as_tuples(enumerate_vectors({5, 15, std::nullopt}));
  std::set<std::vector<i64>> want = {{8, 0, 2}, {8, 3, 0}, {8, 1, 5}};
  CHECK(got == want);
}

TEST_CASE("tiny budget yields nothing") {
  CHECK(enumerate_vectors({4, 2, std::nullopt}).empty());
}

TEST_CASE("output is lexicographic in (n, s1, ..., sk)") {
  const auto vs = enumerate_vectors({10, 24, std::nullopt});
  CHECK(std::is_sorted(vs.begin(), vs.end(),
                       [](const FiberTypeVector& a, const FiberTypeVector& b) { return a < b; }));
}

TEST_CASE("every enumerated vector is admissible with integral signature") {
  for (int g : {4, 7, 10}) {
    for (const FiberTypeVector& v : enumerate_vectors({g, 2 * i64(g) + 6, std::nullopt})) {
      CHECK(congruence_residue(v) == 0);
      CHECK_NOTHROW(signature(v));
      CHECK(v.n() >= n_lower_bound(g));
      CHECK(v.total() < 2 * i64(g) + 6);
    }
  }
}

TEST_CASE("oracle equivalence for g <= 10, budgets up to 2g+6") {
  for (int g = 2; g <= 10; ++g) {
    for (i64 budget = 2; budget <= 2 * i64(g) + 6; ++budget) {
      const auto got = enumerate_vectors({g, budget, std::nullopt});
      const auto want = oracle::enumerate_admissible(g, budget);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].n() == want[i].n);
        CHECK(got[i].s() == want[i].s);
      }
    }
  }
}

TEST_CASE("budget monotonicity") {
  for (int g : {4, 5, 6, 9}) {
    auto small = as_tuples(enumerate_vectors({g, 2 * i64(g), std::nullopt}));
    auto large = as_tuples(enumerate_vectors({g, 2 * i64(g) + 6, std::nullopt}));
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST_CASE("n floor override widens or narrows the census") {
  auto with_floor = enumerate_vectors({4, 12, std::nullopt});
  auto no_floor = enumerate_vectors({4, 12, i64(1)});
  CHECK(no_floor.size() > with_floor.size());  // picks up n < 6 vectors like (4; 4,1)
  for (const FiberTypeVector& v : no_floor) CHECK(congruence_residue(v) == 0);
  CHECK_THROWS_AS(enumerate_vectors({4, 12, i64(0)}), error);
}

TEST_CASE("bad queries are rejected") {
  CHECK_THROWS_AS(enumerate_vectors({1, 12, std::nullopt}), error);
  CHECK_THROWS_AS(enumerate_vectors({4, 1, std::nullopt}), error);
}
