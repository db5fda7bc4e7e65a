#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weilbench/counting.hpp"
#include "weilbench/mpoly.hpp"

namespace weilbench {

// Linear projection Y = lambda X + gamma of an r-dimensional V in A^n onto
// the hypersurface W = {h = 0} of A^(r+1).
struct Projection {
  std::size_t r = 0;
  std::vector<std::vector<Elem>> lambda;  // (r+1) x n
  std::vector<Elem> gamma;                // r+1
  MPoly h;                                // monic in Y_(r+1)
  MPoly h0;                               // dh / dY_(r+1)
  std::vector<MPoly> v;                   // v_i(pi(x)) = x_i h0(pi(x)) on V
  int attempts = 0;
  std::map<std::string, int> failures;  // rejection reason -> draws

  Point apply(const Field& L, const Point& x) const;  // pi(x) with x over L
};

struct ProjectOptions {
  std::uint64_t budget = kDefaultBudget;
  int retries = 20;
};

// Solves "h vanishes on pi(V(F_(q^t)))" for h of degree <= delta, adding
// points in batches and growing t while q^(t n) fits the budget. The answer
// is accepted once the solution space has dimension 1 at two consecutive
// checkpoints. Throws NoSolution or NotStabilized.
MPoly fit_image(const PolySystem& V, const std::vector<std::vector<Elem>>& lambda, const std::vector<Elem>& gamma,
                int delta, const ProjectOptions& opt = {});

// Random (lambda, gamma) with h monic of degree delta in Y_(r+1) and
// separable. Needs q > 2 (r+1) delta^2 unless r = n - 1, where the identity
// projection is returned. Throws RegularityViolated or RetriesExhausted.
Projection draw_projection(const PolySystem& V, std::size_t r, int delta, std::uint64_t seed,
                           const ProjectOptions& opt = {});

// Fits v_1..v_n of degree <= deg h. Throws FitFailed.
std::vector<MPoly> fit_sections(const PolySystem& V, const Projection& P, const ProjectOptions& opt = {});

struct BirationalReport {
  std::uint64_t V_points = 0, V_off = 0;  // V(F_q), (V \ V1)(F_q)
  std::uint64_t W_points = 0, W_off = 0;  // W(F_q), (W \ W1)(F_q)
  mpq_class ceiling;                      // delta (delta - 1) q^(r-1)
  bool injective = false, surjective = false, on_W = false;
  bool pass() const;
};

// Exact counts on both sides of pi : V \ V1 -> W \ W1. Throws
// BirationalityFailed on a count, injectivity or surjectivity mismatch and
// BoundViolation when a discriminant locus exceeds delta (delta - 1) q^(r-1).
BirationalReport birational_check(const PolySystem& V, const Projection& P, int delta, const ProjectOptions& opt = {});

// x = (v_1(y), ..., v_n(y)) / h0(y). Throws OnDiscriminant when h0(y) = 0 and
// FitFailed when the sections are missing.
Point inverse_section(const Projection& P, const Point& y);

}  // namespace weilbench
