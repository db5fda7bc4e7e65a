#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "weilbench/mpoly.hpp"
#include "weilbench/series.hpp"

namespace weilbench {

enum class SolutionField { BaseK, RootFieldKi };
enum class FactorStatus { FoundFactors, NoFactorUpToD };

struct FactorReport {
  FactorStatus status = FactorStatus::NoFactorUpToD;
  // Normalized factors; in RootFieldKi mode each lives over its root field.
  std::vector<MPoly> factors;
  int max_degree = 0;
  std::size_t systems_tried = 0;
  std::size_t systems_solved = 0;
};

// (X, Y) -> (m[0] X + m[1] Y + s[0], m[2] X + m[3] Y + s[1]) over `field`.
struct AffineChange {
  FieldPtr field;
  std::array<Elem, 4> m{};
  std::array<Elem, 2> s{};
  bool is_identity() const;
};

struct Normalized {
  MPoly g;  // unit * f(T(X, Y)), monic in X, passes check_precondition
  AffineChange change;
  unsigned enlargements = 0;  // number of quadratic field enlargements used
};

// Number of random affine changes tried per field before enlarging it.
inline constexpr unsigned kNormalizeAttempts = 16;
// Successive quadratic enlargements allowed before giving up.
inline constexpr unsigned kMaxEnlargements = 3;

// True iff f(X, 0) is squarefree of degree deg f. Throws NotMonicInX unless the
// leading coefficient of f in X is a nonzero constant.
bool check_precondition(const MPoly& f);
// Seeded search for an invertible affine change making f satisfy the
// precondition; throws NormalizationFailed (immediately for non-squarefree f).
Normalized normalize_for_lifting(const MPoly& f, std::uint64_t seed = 0);
// Maps a factor of the normalized polynomial back to a factor of f.
MPoly undo_change(const MPoly& p, const AffineChange& T);

// Factors of degree <= D found from the power-series roots of f. Requires
// 1 <= D <= deg f - 1 and the lifting precondition; throws PreconditionViolated
// otherwise.
FactorReport factor_search(const MPoly& f, int D, SolutionField mode);

// Same search for arbitrary nonzero bivariate f: works on the radical after
// normalization and maps the factors back. D >= deg f lists every factor.
FactorReport find_factors(const MPoly& f, int D, SolutionField mode, std::uint64_t seed = 0);
// Distinct F_q-irreducible factors, normalized and sorted.
std::vector<MPoly> factorize_over_base(const MPoly& f, std::uint64_t seed = 0);
bool is_absolutely_irreducible(const MPoly& f, std::uint64_t seed = 0);
// Degrees of the distinct absolutely irreducible factors of f, ascending.
std::vector<int> absolute_factor_degrees(const MPoly& f, std::uint64_t seed = 0);
// Number of distinct F_q-irreducible factors of f that stay irreducible over
// the algebraic closure.
int count_abs_irr_fq_factors(const MPoly& f, std::uint64_t seed = 0);

}  // namespace weilbench
