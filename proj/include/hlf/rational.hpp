#pragma once

#include <string>

#include "hlf/checked.hpp"

namespace hlf {

// Exact rational over checked 64-bit integers. Always normalized: den > 0,
// gcd(num, den) = 1. Only the handful of operations the census needs.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 num, i64 den) : num_(num), den_(den) {
    if (den_ == 0) fail(errc::domain, "rational with zero denominator");
    if (den_ < 0) {
      num_ = checked_sub(0, num_);
      den_ = checked_sub(0, den_);
    }
    i64 g = gcd_i64(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  explicit Rational(i64 value) : num_(value), den_(1) {}

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
  }
  bool operator<(i64 v) const { return num_ < checked_mul(v, den_); }
  bool operator==(i64 v) const { return den_ == 1 && num_ == v; }

  // Renders "p/q", or just "p" when integral.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  i64 num_;
  i64 den_;
};

}  // namespace hlf
