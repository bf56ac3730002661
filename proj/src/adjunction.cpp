#include "hlf/adjunction.hpp"

#include <string>

#include "hlf/errors.hpp"

namespace hlf {

RuledTarget::RuledTarget(int k_, int m_, int gF_) : k(k_), m(m_), gF(gF_) {
  if (k < 2) {
    fail(errc::unsupported_base,
         "unsupported base genus " + std::to_string(k) + ": the degree argument needs k >= 2");
  }
  if (m < 0) fail(errc::domain, "blow-up count must be >= 0");
  if (gF < 2) fail(errc::invalid_genus, "fiber genus must be >= 2");
}

i64 degree_bound(const RuledTarget& t) { return floor_div(t.gF - 2, t.k - 1); }

namespace {

// 2ak - 2a - 2gF + 2; adjunction fixes sum c_i = D - 2b.
i64 adjunction_offset(const RuledTarget& t, i64 a) {
  return checked_add(checked_sub(checked_mul(checked_mul(2, a), t.k - 1), checked_mul(2, t.gF)),
                     2);
}

// Expands every non-increasing integer tuple x with x_i == a (mod 2) and
// sum x_i^2 = T, converts back through c_i = (x_i - a)/2 and keeps the
// tuples that give an integral b satisfying 2ab = sum c_i^2.
class RepresentationSearch {
 public:
  RepresentationSearch(const RuledTarget& t, i64 a, i64 T, std::vector<FiberClassSolution>& out)
      : t_(t), a_(a), D_(adjunction_offset(t, a)), out_(out) {
    x_.assign(static_cast<std::size_t>(t.m), 0);
    descend(0, T, isqrt(T) + 2);
  }

 private:
  void descend(std::size_t level, i64 remaining, i64 prev) {
    if (level == x_.size()) {
      if (remaining == 0) finish();
      return;
    }
    i64 hi = isqrt(remaining);
    if (hi > prev) hi = prev;
    if ((hi - a_) % 2 != 0) --hi;  // align parity with a
    for (i64 v = hi; v >= -isqrt(remaining); v -= 2) {
      x_[level] = v;
      descend(level + 1, remaining - v * v, v);
    }
  }

  void finish() {
    i64 c_sum = 0, c_sq = 0;
    std::vector<i64> c(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) {
      c[i] = (x_[i] - a_) / 2;
      c_sum = checked_add(c_sum, c[i]);
      c_sq = checked_add(c_sq, checked_mul(c[i], c[i]));
    }
    if (mod_floor(c_sum, 2) != 0) return;  // b would not be an integer
    const i64 b = (D_ - c_sum) / 2;
    if (checked_mul(checked_mul(2, a_), b) != c_sq) return;  // re-substitution check
    out_.push_back(FiberClassSolution{a_, b, std::move(c)});
  }

  const RuledTarget& t_;
  i64 a_;
  i64 D_;
  std::vector<i64> x_;
  std::vector<FiberClassSolution>& out_;
};

}  // namespace

i64 completion_constant(const RuledTarget& t, i64 a) {
  if (a < 1 || a > degree_bound(t)) {
    fail(errc::domain, "degree " + std::to_string(a) + " outside 1.." +
                           std::to_string(degree_bound(t)));
  }
  // T_a = 4a(2ak - 2a - 2gF + 2) + m a^2
  return checked_add(checked_mul(checked_mul(4, a), adjunction_offset(t, a)),
                     checked_mul(t.m, checked_mul(a, a)));
}

ExistenceVerdict decide(const RuledTarget& t) {
  ExistenceVerdict verdict;
  verdict.outcome = AdjunctionOutcome::NoSolution;
  const i64 bound = degree_bound(t);
  for (i64 a = 1; a <= bound; ++a) {
    DegreeReport report;
    report.a = a;
    report.T = completion_constant(t, a);
    if (report.T >= 0) {
      if (t.m == 0) {
        // Empty c: needs T_a = 0, which forces b = 0 and gF - 1 = a(k-1).
        if (report.T == 0 && adjunction_offset(t, a) == 0)
          report.solutions.push_back(FiberClassSolution{a, 0, {}});
      } else {
        RepresentationSearch(t, a, report.T, report.solutions);
      }
    }
    if (!report.solutions.empty()) verdict.outcome = AdjunctionOutcome::SolutionsExist;
    verdict.per_degree.push_back(std::move(report));
  }
  return verdict;
}

}  // namespace hlf
