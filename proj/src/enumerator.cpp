#include "hlf/enumerator.hpp"

#include "hlf/errors.hpp"
#include "hlf/invariants.hpp"

namespace hlf {

i64 n_lower_bound(int g) {
  if (g < 2) fail(errc::invalid_genus, "enumeration needs genus >= 2, got " + std::to_string(g));
  return ceil_div(checked_sub(checked_mul(8, g), 3), 5);
}

namespace {

// Depth-first walk over s1..s_{k-1} with the last coordinate solved from the
// linear congruence w_k * s_k == target (mod M), so only admissible leaves
// are ever materialized.
class Search {
 public:
  Search(int g, i64 budget, std::vector<FiberTypeVector>& out)
      : g_(g), budget_(budget), m_(modulus(g)), out_(out) {
    const int k = g / 2;
    weights_.reserve(static_cast<std::size_t>(k));
    for (i64 h = 1; h <= k; ++h) weights_.push_back(mod_floor(separating_weight(h), m_));
    s_.assign(static_cast<std::size_t>(k), 0);
  }

  void run(i64 n_floor) {
    for (i64 n = n_floor; n < budget_; ++n) {
      n_ = n;
      descend(0, checked_sub(checked_sub(budget_, 1), n), mod_floor(n, m_));
    }
  }

 private:
  void descend(std::size_t level, i64 left, i64 partial) {
    const std::size_t k = s_.size();
    if (k == 0) {
      if (partial == 0) emit();
      return;
    }
    if (level + 1 == k) {
      solve_last(left, partial);
      return;
    }
    for (i64 v = 0; v <= left; ++v) {
      s_[level] = v;
      descend(level + 1, left - v,
              mod_floor(checked_add(partial, checked_mul(weights_[level], v)), m_));
    }
    s_[level] = 0;
  }

  // w * s == -partial (mod m), 0 <= s <= left.
  void solve_last(i64 left, i64 partial) {
    const std::size_t last = s_.size() - 1;
    const i64 w = weights_[last];
    const i64 target = mod_floor(-partial, m_);
    const i64 g = gcd_i64(w, m_);
    if (target % g != 0) return;
    const i64 step = m_ / g;
    // smallest non-negative solution by scanning one period
    i64 s0 = -1;
    for (i64 s = 0; s < step; ++s) {
      if (mod_floor(checked_mul(w, s), m_) == target) {
        s0 = s;
        break;
      }
    }
    if (s0 < 0) return;
    for (i64 s = s0; s <= left; s += step) {
      s_[last] = s;
      emit();
    }
    s_[last] = 0;
  }

  void emit() { out_.emplace_back(g_, n_, s_); }

  int g_;
  i64 budget_;
  i64 m_;
  i64 n_ = 0;
  std::vector<i64> weights_;
  std::vector<i64> s_;
  std::vector<FiberTypeVector>& out_;
};

}  // namespace

std::vector<FiberTypeVector> enumerate_vectors(const EnumerationQuery& q) {
  if (q.g < 2) fail(errc::invalid_genus, "enumeration needs genus >= 2");
  if (q.budget < 2) fail(errc::domain, "budget must be >= 2");
  if (q.budget > kMaxCount)
    fail(errc::resource, "budget " + std::to_string(q.budget) + " exceeds the checked range");
  if (q.n_floor_override && *q.n_floor_override < 1)
    fail(errc::domain, "n floor override must be >= 1");

  i64 floor = q.n_floor_override ? *q.n_floor_override : n_lower_bound(q.g);
  if (floor < 1) floor = 1;

  std::vector<FiberTypeVector> out;
  Search(q.g, q.budget, out).run(floor);
  return out;  // construction order is already lexicographic
}

}  // namespace hlf
