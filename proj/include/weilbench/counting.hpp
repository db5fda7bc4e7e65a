#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weilbench/mpoly.hpp"
#include "weilbench/rng.hpp"

namespace weilbench {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

// Polynomials F_1..F_s over one field in the same n variables.
struct PolySystem {
  FieldPtr ctx;
  std::size_t nvars = 0;
  std::vector<MPoly> polys;

  PolySystem() = default;
  explicit PolySystem(std::vector<MPoly> ps);
  int max_degree() const;
  PolySystem embed_into(const FieldPtr& to) const;
};

struct CountOptions {
  std::uint64_t budget = kDefaultBudget;  // maximum point evaluations / fibers
  unsigned threads = 1;
};

using Point = std::vector<Elem>;

// Exhaustive count of common zeros in F_q^n, lexicographic order with early exit.
std::uint64_t count_points(const PolySystem& sys, const CountOptions& opt = {});
// Hypersurface count by fibers along the variable of highest degree (lowest
// index on ties); a seeded 1% of fibers is recounted by direct evaluation.
std::uint64_t count_hypersurface_fast(const MPoly& f, const CountOptions& opt = {},
                                      std::uint64_t audit_seed = 0);
std::uint64_t count_over_extension(const PolySystem& sys, unsigned t, const CountOptions& opt = {});

// Common zeros of sys with coordinates in L (a field containing the system's).
// Uses the last variable as fiber variable. When L^(n-1) exceeds full_limit the
// fibers are sampled with rng until max_points points are found.
std::vector<Point> variety_points(const PolySystem& sys, const FieldPtr& L, std::uint64_t full_limit,
                                  std::size_t max_points, Rng& rng, std::uint64_t budget = kDefaultBudget);

enum class PointLemma {
  DegreeTimesQr,       // N <= delta q^r
  CoprimePairSquared,  // N <= delta^2 q^(n-2) for two polynomials without common factor
  NonAbsIrreducible,   // N <= delta^2 q^(r-1) / 4
};

struct LemmaReport {
  PointLemma lemma;
  std::uint64_t count = 0;
  mpq_class bound;
  bool holds = false;
};

// Counts sys exhaustively and compares against the lemma's ceiling; throws
// BoundViolation when it fails.
LemmaReport assert_lemma_bounds(const PolySystem& sys, int r, int delta, PointLemma lemma,
                                const CountOptions& opt = {});

}  // namespace weilbench
