#include "hlf/census.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "hlf/enumerator.hpp"
#include "hlf/errors.hpp"

namespace hlf {

std::string to_string(UpperBoundSource s) {
  switch (s) {
    case UpperBoundSource::Even2g4: return "EVEN_2G4";
    case UpperBoundSource::Odd5g3: return "ODD_5G3";
    case UpperBoundSource::Hyperelliptic8g4: return "HYPERELLIPTIC_8G4";
  }
  return "?";
}

std::string to_string(BoundQualifier q) {
  return q == BoundQualifier::ProvenAtLeast ? "PROVEN_AT_LEAST" : "CONDITIONAL";
}

i64 default_budget(int g) {
  return (g % 2 == 0) ? 2 * static_cast<i64>(g) + 4 : 2 * static_cast<i64>(g) + 6;
}

std::optional<UpperBound> known_upper_bound(int g, ProfileKind kind) {
  if (g % 2 == 0) return UpperBound{2 * static_cast<i64>(g) + 4, UpperBoundSource::Even2g4};
  if (kind == ProfileKind::Complex) return std::nullopt;
  const i64 word = 5 * static_cast<i64>(g) - 3;          // length-(5g-3) factorization
  const i64 relation = 8 * static_cast<i64>(g) + 4;      // hyperelliptic relation
  if (word <= relation) return UpperBound{word, UpperBoundSource::Odd5g3};
  return UpperBound{relation, UpperBoundSource::Hyperelliptic8g4};
}

std::string render_conclusion(int g, ProfileKind kind, const LowerBound& lower,
                              const std::optional<UpperBound>& upper) {
  const std::string name =
      (kind == ProfileKind::Complex ? "M_" : "N_") + std::to_string(g);
  if (!upper) return name + " ≥ " + std::to_string(lower.value);
  const i64 lo = std::min(lower.value, upper->value);
  const i64 hi = upper->value;
  if (lo == hi) return name + " = " + std::to_string(hi);
  if (hi == lo + 1)
    return name + " ∈ {" + std::to_string(lo) + ", " + std::to_string(hi) + "}";
  return name + " ∈ {" + std::to_string(lo) + ", …, " + std::to_string(hi) + "}";
}

CensusResult run_census(int g, i64 budget, const Profile& p, unsigned threads) {
  p.validate();
  CensusResult result;
  result.g = g;
  result.budget = budget;
  result.kind = p.kind;

  const std::vector<FiberTypeVector> vectors = enumerate_vectors({g, budget, std::nullopt});
  std::vector<std::optional<Verdict>> slots(vectors.size());

  const std::size_t count = vectors.size();
  unsigned workers = threads;
  if (workers < 1) workers = 1;
  if (workers > count && count > 0) workers = static_cast<unsigned>(count);

  if (workers <= 1 || count == 0) {
    for (std::size_t i = 0; i < count; ++i) slots[i] = evaluate(vectors[i], p);
  } else {
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          for (std::size_t i = w; i < count; i += workers) slots[i] = evaluate(vectors[i], p);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  result.candidates.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    result.candidates.push_back(std::move(*slots[i]));
    if (result.candidates.back().status == VerdictStatus::Survives)
      result.survivor_index.push_back(i);
  }

  if (result.survivor_index.empty()) {
    result.lower = {budget, BoundQualifier::ProvenAtLeast};
  } else {
    i64 best = result.candidates[result.survivor_index.front()].vector.total();
    for (std::size_t i : result.survivor_index)
      best = std::min(best, result.candidates[i].vector.total());
    result.lower = {best, BoundQualifier::Conditional};
  }
  result.upper = known_upper_bound(g, p.kind);
  result.conclusion = render_conclusion(g, p.kind, result.lower, result.upper);
  return result;
}

BoundsReport make_bounds_report(int g, const Profile& p, std::optional<i64> budget,
                                unsigned threads) {
  const i64 b = budget ? *budget : default_budget(g);
  CensusResult census = run_census(g, b, p, threads);
  return BoundsReport{g, p.kind, b, census.lower, census.upper, census.conclusion};
}

}  // namespace hlf
