#pragma once

#include <cstdint>
#include <string>

#include "hlf/errors.hpp"

namespace hlf {

// All census arithmetic runs on 64-bit integers with overflow checks.
// Overflow throws errc::resource; nothing ever wraps silently.
using i64 = std::int64_t;

// Cap on any single fiber count (and hence on budgets); keeps every weighted
// sum comfortably inside i64.
constexpr i64 kMaxCount = i64(1) << 40;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::resource, "integer overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(errc::resource, "integer overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::resource, "integer overflow in multiplication");
  return r;
}

// Floor division, exact for any sign of a; b must be positive.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// Euclidean remainder in [0, b).
inline i64 mod_floor(i64 a, i64 b) {
  i64 r = a % b;
  return r < 0 ? r + b : r;
}

inline i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Largest r >= 0 with r*r <= x; x must be non-negative. The float seed is
// corrected with division-based comparisons so nothing squares past i64.
inline i64 isqrt(i64 x) {
  if (x < 0) fail(errc::domain, "isqrt of negative value");
  if (x == 0) return 0;
  i64 r = static_cast<i64>(__builtin_sqrt(static_cast<double>(x)));
  if (r < 1) r = 1;
  while (r > 0 && r > x / r) --r;
  while (r + 1 <= x / (r + 1)) ++r;
  return r;
}

}  // namespace hlf
