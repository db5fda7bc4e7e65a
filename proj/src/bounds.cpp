#include "weilbench/bounds.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "weilbench/errors.hpp"

namespace weilbench {

namespace {

void ensure_range() {
  static thread_local bool done = false;
  if (!done) {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    done = true;
  }
}

mpz_class zpow(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

// Exact q^k for any integer k, as a rational.
mpq_class qpow_exact(long q, long k) {
  if (k >= 0) return mpq_class(zpow(q, static_cast<unsigned long>(k)));
  mpq_class r(mpz_class(1), zpow(q, static_cast<unsigned long>(-k)));
  r.canonicalize();
  return r;
}

struct Builder {
  mpfr_prec_t bits;
  Interval I(long v) const { return Interval::exact(v, bits); }
  Interval Q(const mpq_class& v) const { return Interval::exact(v, bits); }
  // q^(a/b)
  Interval qp(long q, long a, unsigned long b) const { return I(q).pow_rational(a, b); }
};

std::string str_long(long v) { return std::to_string(v); }

BoundValue make(const std::string& id, Rounding dir, Interval v, std::map<std::string, std::string> inputs) {
  BoundValue b;
  b.formula = id;
  b.dir = dir;
  b.value = std::move(v);
  b.inputs = std::move(inputs);
  return b;
}

// Upper deviation bounds are trivial when they reach q^n, the ambient count.
void mark_trivial_upper(BoundValue& b, long q, long n) {
  const mpq_class qr = qpow_exact(q, n);
  b.trivial = !b.upper_holds(0) || mpfr_cmp_q(b.directed(), qr.get_mpq_t()) >= 0;
}

void require_positive(long q, long delta) {
  if (q < 2) fail(Errc::InvalidArgument, "q must be at least 2");
  if (delta < 1) fail(Errc::InvalidArgument, "degree must be positive");
}

long p_of(long q) {
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return d;
  return q;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  ensure_range();
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o) {}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  prec_ = o.prec_;
  mpfr_set_prec(lo_, prec_);
  mpfr_set_prec(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const mpz_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::exact(const mpq_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

namespace {

template <typename Op>
Interval corners(const Interval& a, const Interval& b, Op op) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (mpfr_srcptr x : {a.lo(), a.hi()}) {
    for (mpfr_srcptr y : {b.lo(), b.hi()}) {
      op(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo())) mpfr_set(const_cast<mpfr_ptr>(r.lo()), t, MPFR_RNDD);
      op(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi())) mpfr_set(const_cast<mpfr_ptr>(r.hi()), t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  return corners(a, b, [](mpfr_ptr t, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_mul(t, x, y, rnd); });
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) fail(Errc::DivisionByZero, "interval divisor contains zero");
  return corners(a, b, [](mpfr_ptr t, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_div(t, x, y, rnd); });
}

Interval Interval::pow_rational(long a, unsigned long b) const {
  if (mpfr_sgn(lo_) <= 0) fail(Errc::InvalidArgument, "rational power needs a positive base");
  if (b == 0) fail(Errc::InvalidArgument, "zero root index");
  Interval r(prec_);
  const unsigned long ua = static_cast<unsigned long>(a < 0 ? -a : a);
  // x -> x^(|a|/b) is increasing; for a < 0 take reciprocals with the opposite endpoint.
  auto up_pow = [&](mpfr_ptr out, mpfr_srcptr x, mpfr_rnd_t rnd) {
    mpfr_pow_ui(out, x, ua, rnd);
    mpfr_rootn_ui(out, out, b, rnd);
  };
  if (a >= 0) {
    up_pow(r.lo_, lo_, MPFR_RNDD);
    up_pow(r.hi_, hi_, MPFR_RNDU);
  } else {
    mpfr_t t;
    mpfr_init2(t, prec_);
    up_pow(t, hi_, MPFR_RNDU);
    mpfr_ui_div(r.lo_, 1, t, MPFR_RNDD);
    up_pow(t, lo_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, t, MPFR_RNDU);
    mpfr_clear(t);
  }
  return r;
}

Interval Interval::pow_z(const mpz_class& e) const {
  if (mpfr_sgn(lo_) <= 0) fail(Errc::InvalidArgument, "power needs a positive base");
  if (e < 0) fail(Errc::InvalidArgument, "negative exponent");
  Interval r(prec_);
  mpfr_pow_z(r.lo_, lo_, e.get_mpz_t(), MPFR_RNDD);
  mpfr_pow_z(r.hi_, hi_, e.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

std::string Interval::str(Rounding r, int digits) const {
  char buf[128];
  if (r == Rounding::Up) mpfr_snprintf(buf, sizeof buf, "%.*RUe", digits - 1, hi_);
  else mpfr_snprintf(buf, sizeof buf, "%.*RDe", digits - 1, lo_);
  return buf;
}

double Interval::to_double(Rounding r) const {
  return r == Rounding::Up ? mpfr_get_d(hi_, MPFR_RNDU) : mpfr_get_d(lo_, MPFR_RNDD);
}

bool BoundValue::upper_holds(const mpz_class& x) const { return mpfr_cmp_z(directed(), x.get_mpz_t()) >= 0; }
bool BoundValue::lower_holds(const mpz_class& x) const { return mpfr_cmp_z(directed(), x.get_mpz_t()) <= 0; }

bool exceeds(long q, const Interval& threshold) { return mpfr_cmp_si(threshold.hi(), q) < 0; }

BoundValue weil_curve(long q, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 1, 2) + B.I(delta + 1);
  BoundValue b = make("weil_curve", Rounding::Up, std::move(v), {{"q", str_long(q)}, {"delta", str_long(delta)}});
  mark_trivial_upper(b, q, 2);
  return b;
}

BoundValue ghorpade_lachaud(long q, long n, long r, long s, long d, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  const mpz_class second = 6 * zpow(2, static_cast<unsigned long>(s)) * zpow(s * d + 3, static_cast<unsigned long>(n + 1));
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * r - 1, 2) + Interval::exact(second, bits) * B.qp(q, r - 1, 1);
  BoundValue b = make("ghorpade_lachaud", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"r", str_long(r)}, {"s", str_long(s)},
                       {"d", str_long(d)}, {"delta", str_long(delta)}});
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue ghorpade_lachaud_hyper(long q, long n, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  const mpz_class second = 12 * zpow(delta + 3, static_cast<unsigned long>(n + 1));
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * n - 3, 2) + Interval::exact(second, bits) * B.qp(q, n - 2, 1);
  BoundValue b = make("ghorpade_lachaud_hyper", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"delta", str_long(delta)}});
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue schmidt74_lower(long q, long n, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  Interval v = B.qp(q, n - 1, 1) - B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * n - 3, 2) -
               B.I(5 * delta * delta + delta + 1) * B.qp(q, n - 2, 1);
  BoundValue b = make("schmidt74_lower", Rounding::Down, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"delta", str_long(delta)}});
  // needs q > c n^3 delta^5 log^3 delta for an unspecified constant c
  b.applicable = false;
  b.trivial = mpfr_sgn(b.directed()) <= 0;
  return b;
}

BoundValue schmidt76(long q, long n, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  const long theta = (delta + 1) * delta / 2;
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), 2, static_cast<unsigned long>(theta));
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * n - 3, 2) +
               B.I(6 * delta * delta) * B.I(theta).pow_z(e) * B.qp(q, n - 2, 1);
  BoundValue b = make("schmidt76", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"delta", str_long(delta)}});
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue huang_wong(long q, long n, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  const mpz_class d(delta);
  const mpz_class c2 = d * d + 2 * d * d * d * d * d;
  const mpz_class c3 = 2 * d * d * d * d * d * d * d;
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * n - 3, 2) + Interval::exact(c2, bits) * B.qp(q, n - 2, 1) +
               Interval::exact(c3, bits) * B.qp(q, 2 * n - 5, 2);
  BoundValue b = make("huang_wong", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"delta", str_long(delta)}});
  // same unspecified regularity constant as the lower bound above
  b.applicable = false;
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue cm_hypersurface(long q, long n, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * n - 3, 2) +
               B.I(5) * B.I(delta).pow_rational(13, 3) * B.qp(q, n - 2, 1);
  BoundValue b = make("cm_hypersurface", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"delta", str_long(delta)}});
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue cm_hypersurface_regular(long q, long n, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * n - 3, 2) +
               B.I(5 * delta * delta + delta + 1) * B.qp(q, n - 2, 1);
  BoundValue b = make("cm_hypersurface_regular", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"delta", str_long(delta)}});
  b.applicable = exceeds(q, B.I(15) * B.I(delta).pow_rational(13, 3));
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue cm_hyper_general(long q, long n, const Profile& pr, mpfr_prec_t bits) {
  require_positive(q, pr.delta);
  Builder B{bits};
  const long sgn = pr.sigma > 0 ? 1 : (pr.sigma < 0 ? -1 : 0);
  Interval first = B.I(sgn * (pr.Delta - 1) * (pr.Delta - 2)) * B.qp(q, 2 * n - 3, 2);
  Interval big = pr.Delta > 0 ? B.I(5) * B.I(pr.Delta).pow_rational(13, 3) : B.I(0);
  Interval v = first + (big + B.Q(mpq_class(pr.delta * pr.delta, 4))) * B.qp(q, n - 2, 1);
  BoundValue b = make("cm_hyper_general", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"delta", str_long(pr.delta)},
                       {"Delta", str_long(pr.Delta)}, {"sigma", str_long(pr.sigma)}});
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue cm_variety(long q, long n, long r, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * r - 1, 2) +
               B.I(5) * B.I(delta).pow_rational(13, 3) * B.qp(q, r - 1, 1);
  BoundValue b = make("cm_variety", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"r", str_long(r)}, {"delta", str_long(delta)}});
  b.applicable = q > 2 * (r + 1) * delta * delta;
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue cm_variety_regular(long q, long n, long r, long delta, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  Interval v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * r - 1, 2) + B.I(7 * delta * delta) * B.qp(q, r - 1, 1);
  BoundValue b = make("cm_variety_regular", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"n", str_long(n)}, {"r", str_long(r)}, {"delta", str_long(delta)}});
  b.applicable = q > 2 * (r + 1) * delta * delta && exceeds(q, B.I(15) * B.I(delta).pow_rational(13, 3));
  mark_trivial_upper(b, q, n);
  return b;
}

BoundValue cm_variety_general(long q, long r, const Profile& pr, mpfr_prec_t bits) {
  require_positive(q, pr.delta);
  Builder B{bits};
  const long sgn = pr.sigma > 0 ? 1 : (pr.sigma < 0 ? -1 : 0);
  Interval first = B.I(sgn * (pr.Delta - 1) * (pr.Delta - 2)) * B.qp(q, 2 * r - 1, 2);
  Interval big = pr.Delta > 0 ? B.I(5) * B.I(pr.Delta).pow_rational(13, 3) : B.I(0);
  Interval v = first + (big + B.I(pr.delta * pr.delta)) * B.qp(q, r - 1, 1);
  BoundValue b = make("cm_variety_general", Rounding::Up, std::move(v),
                      {{"q", str_long(q)}, {"r", str_long(r)}, {"delta", str_long(pr.delta)},
                       {"Delta", str_long(pr.Delta)}, {"sigma", str_long(pr.sigma)}});
  b.applicable = q > 2 * (r + 1) * pr.delta * pr.delta;
  // the ambient dimension is not an input here; q^(r+1) stands in for q^n
  mark_trivial_upper(b, q, r + 1);
  return b;
}

std::vector<BoundValue> gao_variants(long q, long n, long r, long delta, long p, mpfr_prec_t bits) {
  require_positive(q, delta);
  Builder B{bits};
  const mpz_class d(delta);
  const mpz_class d4 = d * d * d * d;
  const bool p_ok = p > 2 * delta * delta;
  const std::map<std::string, std::string> in = {
      {"q", str_long(q)}, {"n", str_long(n)}, {"r", str_long(r)}, {"delta", str_long(delta)}, {"p", str_long(p)}};
  const Interval lead_h = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * n - 3, 2);
  const Interval lead_v = B.I((delta - 1) * (delta - 2)) * B.qp(q, 2 * r - 1, 2);
  std::vector<BoundValue> out;
  out.push_back(make("gao_hypersurface", Rounding::Up, lead_h + Interval::exact(mpz_class(3 * d4), bits) * B.qp(q, n - 2, 1), in));
  out.back().applicable = p_ok;
  mark_trivial_upper(out.back(), q, n);
  out.push_back(make("gao_hypersurface_regular", Rounding::Up,
                     lead_h + B.I(5 * delta * delta + delta + 1) * B.qp(q, n - 2, 1), in));
  out.back().applicable = p_ok && mpz_class(q) > 27 * d4;
  mark_trivial_upper(out.back(), q, n);
  out.push_back(make("gao_variety", Rounding::Up, lead_v + Interval::exact(mpz_class(4 * d4), bits) * B.qp(q, r - 1, 1), in));
  out.back().applicable = p_ok && q > 2 * (r + 1) * delta * delta;
  mark_trivial_upper(out.back(), q, n);
  out.push_back(make("gao_variety_regular", Rounding::Up, lead_v + B.I(7 * delta * delta) * B.qp(q, r - 1, 1), in));
  out.back().applicable = p_ok && q > 2 * (r + 1) * delta * delta && mpz_class(q) > 25 * d4;
  mark_trivial_upper(out.back(), q, n);
  return out;
}

ExistenceThresholds existence_thresholds(long delta, long r, mpfr_prec_t bits) {
  if (delta < 1) fail(Errc::InvalidArgument, "degree must be positive");
  Builder B{bits};
  const Interval hyp = B.I(2 * delta * delta * delta * delta);
  return {hyp, Interval::max(B.I(2 * (r + 1) * delta * delta), hyp), B.I(13) * B.I(delta).pow_rational(10, 3),
          B.I(9) * B.I(delta).pow_rational(13, 3)};
}

DegreeBounds bertini_degree_bounds(long delta, long D) {
  if (delta < 2 || D < 1 || D > delta - 1)
    fail(Errc::DOutOfRange, "need 1 <= D <= delta - 1, got delta = " + std::to_string(delta) + ", D = " + std::to_string(D));
  const mpq_class d(delta), x(D);
  auto integral = [](const mpq_class& v, const char* what) {
    if (v.get_den() != 1) fail(Errc::NonIntegerSanity, std::string(what) + " is not an integer");
    return v.get_num();
  };
  const mpq_class xi = mpq_class(3, 2) * d * d * d * d - 2 * d * d * d + mpq_class(5, 2) * d * d;
  const mpq_class psi = x * d * d * (x + 1) * (x + 2) - (x * x + 3 * x) * (x * x + 3 * x + 2) * d / 8;
  const mpq_class xid = x * x * x * d * d - x * x * x * x * d / 8 - mpq_class(3, 4) * x * x * x * d +
                        3 * x * x * d * d - mpq_class(11, 8) * x * x * d + 2 * x * d * d - mpq_class(3, 4) * x * d +
                        2 * d * d;
  return {integral(xi, "xi degree"), integral(psi, "psi degree"), integral(xid, "xi_D degree")};
}

mpz_class kaltofen_ceiling(long q, long n, long delta) {
  const mpq_class d(delta);
  const mpq_class xi = mpq_class(3, 2) * d * d * d * d - 2 * d * d * d + mpq_class(5, 2) * d * d;
  if (xi.get_den() != 1) fail(Errc::NonIntegerSanity, "xi degree is not an integer");
  return xi.get_num() * zpow(q, static_cast<unsigned long>(3 * n - 3));
}

mpz_class kaltofen_ceiling_D(long q, long n, long delta, long D) {
  return bertini_degree_bounds(delta, D).xiD * zpow(q, static_cast<unsigned long>(3 * n - 3));
}

PlaneStats plane_statistics(long q, long n) {
  if (q < 2 || n < 2) fail(Errc::InvalidArgument, "need q >= 2 and n >= 2");
  const mpz_class Q(q);
  const mpz_class qn = zpow(q, static_cast<unsigned long>(n));
  const mpz_class qn1 = zpow(q, static_cast<unsigned long>(n - 1));
  auto exact_div = [](const mpz_class& a, const mpz_class& b, const char* what) {
    if (a % b != 0) fail(Errc::NonIntegerSanity, std::string(what) + " is not an integer");
    return mpz_class(a / b);
  };
  PlaneStats s;
  s.A = exact_div(zpow(q, static_cast<unsigned long>(2 * n - 1)) * (qn1 - 1), Q * Q * Q * (Q - 1), "A");
  const mpz_class flag = (Q * Q - 1) * (Q * Q - Q);
  s.MT = exact_div(qn * (qn - 1) * (qn - Q), Q * Q * flag, "M_T");
  s.E = exact_div((qn - 1) * (qn - Q), flag, "E");
  s.D = s.MT - s.A;
  const mpz_class d_closed = exact_div(qn * (qn1 - 1) * (qn1 - Q), Q * Q * flag, "D");
  if (d_closed != s.D) fail(Errc::NonIntegerSanity, "plane counts are inconsistent");
  return s;
}

PiClassBounds pi_class_bounds(long delta, long q, long n, long j, mpfr_prec_t bits) {
  if (delta < 2) fail(Errc::InvalidArgument, "needs delta >= 2");
  if (j < 1 || j > delta - 1) fail(Errc::DOutOfRange, "class index must lie in 1..delta-1");
  if (n < 2 || q < 2) fail(Errc::InvalidArgument, "need q >= 2 and n >= 2");
  const mpq_class d(delta), J(j);
  const mpq_class coeff = d * d * d * d * d * (1 / (J * J * J) - 1 / (8 * J * J * J * J)) +
                          3 * d * d * d * d * (1 / (J * J) - 1 / (4 * J * J * J)) +
                          d * d * d * (2 / J - mpq_class(11, 8) / (J * J)) - mpq_class(3, 4) * d * d / J + 2 * d * d;
  mpq_class scale(zpow(q, static_cast<unsigned long>(3 * n - 6)), mpz_class(q - 1));
  scale.canonicalize();
  PiClassBounds out;
  out.tail = coeff * scale;
  Builder B{bits};
  out.sum_j_pi = (B.I(2) * B.I(delta).pow_rational(13, 3) + B.I(3) * B.I(delta).pow_rational(11, 3)) * B.Q(scale);
  if (delta == 2) {
    const mpq_class xi = mpq_class(3, 2) * d * d * d * d - 2 * d * d * d + mpq_class(5, 2) * d * d;
    out.delta2 = xi * scale;
  }
  const PlaneStats st = plane_statistics(q, n);
  out.schmidt_lemma6 = mpq_class(4 * delta) * mpq_class(st.E) * qpow_exact(q, n - 3);
  return out;
}

std::vector<std::string> formula_ids() {
  return {"weil_curve",       "ghorpade_lachaud_hyper", "schmidt74_lower",     "schmidt76",
          "huang_wong",       "cm_hypersurface",        "cm_hypersurface_regular", "cm_variety",
          "cm_variety_regular", "gao_hypersurface",     "gao_hypersurface_regular", "gao_variety",
          "gao_variety_regular"};
}

BoundValue evaluate_formula(const std::string& id, long q, long n, long r, long delta, long p, mpfr_prec_t bits) {
  if (p <= 0) p = p_of(q);
  if (id == "weil_curve") return weil_curve(q, delta, bits);
  if (id == "ghorpade_lachaud_hyper") return ghorpade_lachaud_hyper(q, n, delta, bits);
  if (id == "schmidt74_lower") return schmidt74_lower(q, n, delta, bits);
  if (id == "schmidt76") return schmidt76(q, n, delta, bits);
  if (id == "huang_wong") return huang_wong(q, n, delta, bits);
  if (id == "cm_hypersurface") return cm_hypersurface(q, n, delta, bits);
  if (id == "cm_hypersurface_regular") return cm_hypersurface_regular(q, n, delta, bits);
  if (id == "cm_variety") return cm_variety(q, n, r, delta, bits);
  if (id == "cm_variety_regular") return cm_variety_regular(q, n, r, delta, bits);
  const auto gao = gao_variants(q, n, r, delta, p, bits);
  for (const auto& b : gao)
    if (b.formula == id) return b;
  fail(Errc::InvalidArgument, "unknown formula '" + id + "'");
}

}  // namespace weilbench
