#include "hlf/invariants.hpp"

#include "hlf/errors.hpp"

namespace hlf {

i64 modulus(int g) {
  if (g < 1) fail(errc::invalid_genus, "modulus needs genus >= 1, got " + std::to_string(g));
  i64 base = checked_mul(2, checked_add(checked_mul(2, g), 1));  // 2(2g+1)
  return (g % 2 == 1) ? checked_mul(2, base) : base;
}

i64 separating_weight(i64 h) {
  if (h < 1) fail(errc::invalid_type, "separating type must be >= 1, got " + std::to_string(h));
  return checked_mul(checked_mul(2, h), checked_add(checked_mul(4, h), 2));  // 2h(4h+2)
}

i64 congruence_residue(const FiberTypeVector& v) {
  const i64 m = modulus(v.g());
  i64 acc = mod_floor(v.n(), m);
  const auto& s = v.s();
  for (std::size_t i = 0; i < s.size(); ++i) {
    i64 w = separating_weight(static_cast<i64>(i) + 1);
    acc = mod_floor(checked_add(acc, checked_mul(mod_floor(w, m), mod_floor(s[i], m))), m);
  }
  return acc;
}

i64 euler_characteristic(const FiberTypeVector& v) {
  return checked_add(checked_sub(4, checked_mul(4, v.g())), v.total());
}

i64 signature_numerator(int g, i64 n, const std::vector<i64>& s) {
  // (2g+1) * sigma = -(g+1) n + sum_h (4h(g-h) - (2g+1)) s_h
  i64 acc = checked_mul(checked_sub(0, checked_add(g, 1)), n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const i64 h = static_cast<i64>(i) + 1;
    i64 coeff = checked_sub(checked_mul(checked_mul(4, h), checked_sub(g, h)),
                            checked_add(checked_mul(2, g), 1));
    acc = checked_add(acc, checked_mul(coeff, s[i]));
  }
  return acc;
}

i64 signature(const FiberTypeVector& v) {
  const i64 den = checked_add(checked_mul(2, v.g()), 1);
  const i64 num = signature_numerator(v.g(), v.n(), v.s());
  if (num % den != 0) {
    fail(errc::integrality, "signature of " + v.str() + " is not an integer: " +
                                Rational(num, den).str());
  }
  return num / den;
}

InvariantSet invariant_set(const FiberTypeVector& v) {
  InvariantSet inv;
  inv.e = euler_characteristic(v);
  inv.sigma = signature(v);
  inv.chi_h = Rational(checked_add(inv.e, inv.sigma), 4);
  inv.c1_sq = checked_add(checked_mul(2, inv.e), checked_mul(3, inv.sigma));
  inv.modulus = modulus(v.g());
  inv.residue = congruence_residue(v);
  return inv;
}

}  // namespace hlf
