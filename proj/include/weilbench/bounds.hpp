#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace weilbench {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

enum class Rounding { Up, Down };

// Closed interval [lo, hi] with outward-rounded MPFR endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval exact(const mpz_class& v, mpfr_prec_t prec = kDefaultPrecision);
  static Interval exact(const mpq_class& v, mpfr_prec_t prec = kDefaultPrecision);
  static Interval exact(long v, mpfr_prec_t prec = kDefaultPrecision) { return exact(mpz_class(v), prec); }

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_srcptr endpoint(Rounding r) const { return r == Rounding::Up ? hi_ : lo_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  // x^(a/b) for x > 0.
  Interval pow_rational(long a, unsigned long b) const;
  // x^e for x > 0 and integer e >= 0.
  Interval pow_z(const mpz_class& e) const;
  static Interval max(const Interval& a, const Interval& b);

  bool contains(const mpq_class& v) const;
  // Decimal rendering of the chosen endpoint, rounded in the same direction.
  std::string str(Rounding r, int digits = 12) const;
  double to_double(Rounding r) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

struct BoundValue {
  std::string formula;
  Rounding dir = Rounding::Up;
  Interval value;
  std::optional<mpq_class> exact;  // present when the formula is rational
  std::map<std::string, std::string> inputs;
  bool applicable = true;  // hypotheses on q, p, delta hold (checked conservatively)
  bool trivial = false;    // an upper deviation >= q^r or a lower bound <= 0

  mpfr_srcptr directed() const { return value.endpoint(dir); }
  std::string str(int digits = 12) const { return value.str(dir, digits); }
  double to_double() const { return value.to_double(dir); }
  // Exact comparison of an integer against the directed endpoint.
  bool upper_holds(const mpz_class& x) const;  // x <= value
  bool lower_holds(const mpz_class& x) const;  // x >= value
};

// Degeneracy data of a hypersurface or variety: number of absolutely irreducible
// components of top dimension defined over F_q (sigma) and their degree sum (Delta).
struct Profile {
  long delta = 1;
  long Delta = 0;
  long sigma = 0;
};

// |N - q| for absolutely irreducible plane curves.
BoundValue weil_curve(long q, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue ghorpade_lachaud(long q, long n, long r, long s, long d, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue ghorpade_lachaud_hyper(long q, long n, long delta, mpfr_prec_t bits = kDefaultPrecision);
// Lower bound for N (RoundDown).
BoundValue schmidt74_lower(long q, long n, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue schmidt76(long q, long n, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue huang_wong(long q, long n, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue cm_hypersurface(long q, long n, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue cm_hypersurface_regular(long q, long n, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue cm_hyper_general(long q, long n, const Profile& pr, mpfr_prec_t bits = kDefaultPrecision);
BoundValue cm_variety(long q, long n, long r, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue cm_variety_regular(long q, long n, long r, long delta, mpfr_prec_t bits = kDefaultPrecision);
BoundValue cm_variety_general(long q, long r, const Profile& pr, mpfr_prec_t bits = kDefaultPrecision);
// Hypersurface, hypersurface with q > 27 delta^4, variety, variety with
// q > 25 delta^4; all need p > 2 delta^2.
std::vector<BoundValue> gao_variants(long q, long n, long r, long delta, long p, mpfr_prec_t bits = kDefaultPrecision);

struct ExistenceThresholds {
  Interval hypersurface;  // 2 delta^4
  Interval variety;       // max(2 (r+1) delta^2, 2 delta^4)
  Interval q0;            // 13 delta^(10/3)
  Interval q1;            // 9 delta^(13/3)
};
ExistenceThresholds existence_thresholds(long delta, long r, mpfr_prec_t bits = kDefaultPrecision);

// Certified comparison "q > threshold": true only when q exceeds the upper endpoint.
bool exceeds(long q, const Interval& threshold);

struct DegreeBounds {
  // Degrees of the polynomials whose nonvanishing certifies a plane section.
  mpz_class xi;    // absolutely irreducible
  mpz_class psiD;  // without closure factor of degree <= D, before adding
  mpz_class xiD;   // the 2 delta^2 of the separability condition
};
DegreeBounds bertini_degree_bounds(long delta, long D);
// Ceilings over the whole tuple space F_q^(3n-2).
mpz_class kaltofen_ceiling(long q, long n, long delta);
mpz_class kaltofen_ceiling_D(long q, long n, long delta, long D);

struct PlaneStats {
  mpz_class A;   // planes with a parametrization X1 = X + nu1, Xi = nu_i + omega_i X + eta_i Y
  mpz_class MT;  // all affine planes of A^n
  mpz_class E;   // planes through a fixed point
  mpz_class D;   // MT - A
};
PlaneStats plane_statistics(long q, long n);

struct PiClassBounds {
  mpq_class tail;                   // bound on sum_{k >= j} #Pi_k
  Interval sum_j_pi;                // bound on sum_j j #Pi_j, delta > 1
  std::optional<mpq_class> delta2;  // sharper value when delta = 2
  mpq_class schmidt_lemma6;         // 4 delta E q^(n-3)
};
PiClassBounds pi_class_bounds(long delta, long q, long n, long j, mpfr_prec_t bits = kDefaultPrecision);

// Catalog lookup used by the command-line driver.
std::vector<std::string> formula_ids();
BoundValue evaluate_formula(const std::string& id, long q, long n, long r, long delta, long p,
                            mpfr_prec_t bits = kDefaultPrecision);

}  // namespace weilbench
