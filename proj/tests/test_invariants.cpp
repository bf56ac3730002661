#include <doctest.h>

#include <limits>

#include "hlf/enumerator.hpp"
#include "hlf/errors.hpp"
#include "hlf/invariants.hpp"
#include "hlf/reference_tables.hpp"

using namespace hlf;

namespace {
FiberTypeVector vec(int g, i64 n, std::vector<i64> s) { return FiberTypeVector(g, n, std::move(s)); }
}  // namespace

TEST_CASE("modulus branches on parity") {
  CHECK(modulus(3) == 28);
  CHECK(modulus(4) == 18);
  CHECK(modulus(2) == 10);
  CHECK(modulus(5) == 44);
  CHECK(modulus(7) == 60);
  CHECK_THROWS_AS(modulus(0), error);
  CHECK_THROWS_AS(modulus(-3), error);
}

TEST_CASE("separating weights follow the even chain relation") {
  CHECK(separating_weight(1) == 12);
  CHECK(separating_weight(2) == 40);
  CHECK(separating_weight(3) == 84);
  // cross-checks against the genus-5 and genus-7 congruence coefficients
  CHECK(separating_weight(2) % 44 == 44 - 4);
  CHECK(separating_weight(3) % 60 == 24);
  CHECK_THROWS_AS(separating_weight(0), error);
}

TEST_CASE("congruence residue") {
  CHECK(congruence_residue(vec(4, 6, {1, 0})) == 0);
  CHECK(congruence_residue(vec(3, 28, {0})) == 0);  // 8g+4 at g=3
  CHECK(congruence_residue(vec(4, 2, {0, 0})) == 2);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(vec(4, 6, {1, 0})) == -5);
  CHECK(euler_characteristic(vec(7, 16, {0, 2, 1})) == -5);
  CHECK(euler_characteristic(vec(2, 1, {0})) == -3);
}

TEST_CASE("signature is exact") {
  CHECK(signature(vec(4, 6, {1, 0})) == -3);
  CHECK(signature(vec(7, 16, {0, 2, 1})) == -3);
  CHECK(signature(vec(9, 16, {0, 0, 2, 4})) == 10);
}

TEST_CASE("non-integral signature is an error, not a rounding") {
  // residue 1 mod 9, so the rational is not an integer
  CHECK_THROWS_AS(signature(vec(4, 1, {0, 0})), error);
  try {
    signature(vec(4, 1, {0, 0}));
  } catch (const error& e) {
    CHECK(e.kind() == errc::integrality);
  }
}

TEST_CASE("invariant bundle") {
  InvariantSet i = invariant_set(vec(5, 8, {0, 2}));
  CHECK(i.e == -6);
  CHECK(i.sigma == -2);
  CHECK(i.c1_sq == -18);
  CHECK(i.chi_h == Rational(-2));
  CHECK(i.residue == 0);
  CHECK(i.modulus == 44);

  InvariantSet j = invariant_set(vec(10, 18, {0, 0, 0, 2, 3}));
  CHECK(j.e == -13);
  CHECK(j.sigma == 9);
  CHECK(j.c1_sq == 1);

  InvariantSet k = invariant_set(vec(8, 14, {0, 1, 2, 2}));
  CHECK(k.e == -9);
  CHECK(k.sigma == 5);
  CHECK(k.c1_sq == -3);
}

TEST_CASE("vector validation fails loudly") {
  CHECK_THROWS_AS(vec(1, 3, {}), error);              // genus too small
  CHECK_THROWS_AS(vec(4, 3, {1}), error);             // wrong s length
  CHECK_THROWS_AS(vec(4, -1, {0, 0}), error);         // negative count
  CHECK_THROWS_AS(vec(4, 0, {0, 0}), error);          // no singular fibers
  CHECK_THROWS_AS(vec(2, 0, {0}), error);             // empty fibration rejected
  CHECK_THROWS_AS(vec(4, i64(1) << 50, {0, 0}), error);  // out of checked range
}

TEST_CASE("identities c1^2 = 2e+3sigma and 4chi_h = e+sigma on enumerated vectors") {
  for (int g = 2; g <= 9; ++g) {
    for (const FiberTypeVector& v : enumerate_vectors({g, 3 * i64(g), std::nullopt})) {
      InvariantSet i = invariant_set(v);
      CHECK(i.c1_sq == 2 * i.e + 3 * i.sigma);
      CHECK(i.chi_h * Rational(4) == Rational(i.e + i.sigma));
    }
  }
}

TEST_CASE("residue 0 forces n = 0 mod 4 (odd g) / mod 2 (even g)") {
  for (int g = 2; g <= 11; ++g) {
    for (const FiberTypeVector& v : enumerate_vectors({g, 3 * i64(g), std::nullopt})) {
      if (g % 2 == 1)
        CHECK(v.n() % 4 == 0);
      else
        CHECK(v.n() % 2 == 0);
    }
  }
}

TEST_CASE("adding a type-h cycle shifts the residue like 2h(4h+2) non-separating ones") {
  for (int g = 2; g <= 12; ++g) {
    const int k = g / 2;
    for (int h = 1; h <= k; ++h) {
      std::vector<i64> s(static_cast<std::size_t>(k), 0);
      FiberTypeVector base = vec(g, 5, s);
      s[static_cast<std::size_t>(h - 1)] = 1;
      FiberTypeVector with_sep = vec(g, 5, s);
      FiberTypeVector with_chain = vec(g, 5 + separating_weight(h),
                                       std::vector<i64>(static_cast<std::size_t>(k), 0));
      CHECK(congruence_residue(with_sep) == congruence_residue(with_chain));
    }
  }
}

TEST_CASE("e + sigma = 0 mod 4 on the reference corpus (open question elsewhere)") {
  for (const ReferenceRow& row : reference_rows()) {
    InvariantSet i = invariant_set(row.vector());
    CHECK((i.e + i.sigma) % 4 == 0);
    CHECK(i.chi_h.is_integer());
  }
}

TEST_CASE("checked arithmetic fails loudly instead of wrapping") {
  CHECK_THROWS_AS(checked_mul(i64(1) << 40, i64(1) << 40), error);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<i64>::max(), 1), error);
  CHECK_THROWS_AS(separating_weight(i64(1) << 32), error);
  try {
    checked_mul(i64(1) << 40, i64(1) << 40);
  } catch (const error& e) {
    CHECK(e.kind() == errc::resource);
  }
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(i64(3037000499) * 3037000499) == 3037000499);
}

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(-8, 4) == Rational(-2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK(Rational(-5, 4) < Rational(-1, 4));
  CHECK(Rational(-5, 4) < 0);
  CHECK_THROWS_AS(Rational(1, 0), error);
}
