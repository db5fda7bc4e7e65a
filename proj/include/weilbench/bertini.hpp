#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weilbench/counting.hpp"
#include "weilbench/mpoly.hpp"
#include "weilbench/rng.hpp"

namespace weilbench {

// Classification of one plane: j = |nu - 1| unless f vanishes on the plane.
// The vanishing class is kept apart from j because q - 1 can coincide with a
// regular class index (q = 2 gives q - 1 = 1).
struct PiClass {
  bool vanishing = false;
  int j = 0;
  int nu = 0;
};

PiClass classify_parametrization(const MPoly& f, const PlaneParam& L, std::uint64_t seed = 0);

struct PiHistogram {
  enum class Unit { Parametrizations, Planes };
  Unit unit = Unit::Parametrizations;
  std::map<int, std::uint64_t> counts;  // j -> count
  std::uint64_t vanishing = 0;          // the class written Pi_{q-1}
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> nu;  // raw nu distribution, nonvanishing only

  void add(const PiClass& c);
  void merge(const PiHistogram& o);
  bool consistent() const;  // sum of counts + vanishing == total
};

struct CeilingCheck {
  std::string name;
  mpq_class observed;
  std::string ceiling;  // exact, or rounded up to 12 significant digits
  bool pass = false;
};

struct SweepReport {
  std::uint64_t q = 0;
  std::size_t n = 0;
  int delta = 0;
  PiHistogram histogram;         // nondegenerate parametrizations
  std::uint64_t degenerate = 0;  // tuples with eta = 0
  std::uint64_t not_abs_irreducible = 0;     // over all q^(3n-2) tuples
  std::map<int, std::uint64_t> closure_factor_le_D;  // D -> tuples, over all tuples
  std::vector<CeilingCheck> ceilings;
  bool divisible = false;  // every class count is a multiple of q^3 (q - 1)
  bool pass() const;
};

struct SweepOptions {
  std::uint64_t budget = kDefaultBudget;  // maximum tuples
  unsigned threads = 1;
  int max_degree = 0;  // largest D checked; 0 means deg f - 1
  std::uint64_t seed = 0;
};

// Every tuple (nu, omega, eta) of F_q^n x F_q^(n-1) x F_q^(n-1). Throws
// BoundViolation when a ceiling fails and NotDivisible when a class count is
// not a multiple of q^3 (q - 1).
SweepReport exhaustive_sweep(const MPoly& f, const SweepOptions& opt = {});

struct RatioEstimate {
  double value = 0;
  double lo = 0, hi = 0;  // 95% interval
  double ceiling = 0;
  bool within = false;  // report only
};

struct SampleReport {
  std::uint64_t samples = 0;
  PiHistogram histogram;
  RatioEstimate b_ratio;  // sum_j j #Pi_j / A
  RatioEstimate c_ratio;  // #Pi_{q-1} / A
};

SampleReport sampled_sweep(const MPoly& f, std::uint64_t samples, std::uint64_t seed);

struct AccountingReport {
  mpz_class A, B, C, D, E, MT;
  PiHistogram planes;
  std::vector<CeilingCheck> checks;         // asserted
  std::vector<CeilingCheck> report_only;    // need q larger than desk scale
  bool pass() const;
};

// Converts an exhaustive parametrization histogram to planes and checks the
// ratio chain B/A, C/A, D/A, A/E plus the class-tail ceilings. Throws
// NotDivisible or BoundViolation (when enforce is set).
AccountingReport plane_accounting(std::uint64_t q, std::size_t n, int delta, const PiHistogram& hist,
                                  bool enforce = true);

}  // namespace weilbench
