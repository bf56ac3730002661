#include "hlf/fiber_vector.hpp"

#include <sstream>

#include "hlf/errors.hpp"

namespace hlf {

FiberTypeVector::FiberTypeVector(int g, i64 n, std::vector<i64> s)
    : g_(g), n_(n), s_(std::move(s)) {
  if (g_ < 2) fail(errc::invalid_genus, "fiber genus must be >= 2, got " + std::to_string(g_));
  if (n_ < 0) fail(errc::invalid_vector, "negative non-separating count");
  if (n_ > kMaxCount) fail(errc::resource, "non-separating count exceeds checked range");
  const std::size_t want = static_cast<std::size_t>(g_ / 2);
  if (s_.size() != want) {
    fail(errc::invalid_vector, "separating counts must have length floor(g/2) = " +
                                   std::to_string(want) + ", got " + std::to_string(s_.size()));
  }
  for (i64 c : s_) {
    if (c < 0) fail(errc::invalid_vector, "negative separating count");
    if (c > kMaxCount) fail(errc::resource, "separating count exceeds checked range");
  }
  if (total() < 1) fail(errc::invalid_vector, "fibration must have at least one singular fiber");
}

i64 FiberTypeVector::s_total() const {
  i64 t = 0;
  for (i64 c : s_) t = checked_add(t, c);
  return t;
}

i64 FiberTypeVector::total() const { return checked_add(n_, s_total()); }

std::string FiberTypeVector::str() const {
  std::ostringstream os;
  os << "(" << n_ << ";";
  for (std::size_t i = 0; i < s_.size(); ++i) os << (i ? "," : " ") << s_[i];
  os << ")";
  return os.str();
}

}  // namespace hlf
