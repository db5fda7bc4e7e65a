#include "doctest.h"

#include <cmath>

#include "weilbench/bounds.hpp"
#include "weilbench/errors.hpp"

using namespace weilbench;

namespace {

bool near(const BoundValue& b, double x, double rel = 1e-12) {
  const double v = b.to_double();
  return std::abs(v - x) <= rel * std::max(1.0, std::abs(x));
}

mpz_class ipow(long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

}  // namespace

TEST_CASE("interval basics") {
  const Interval a = Interval::exact(mpq_class(1, 3));
  CHECK(a.contains(mpq_class(1, 3)));
  CHECK(mpfr_cmp(a.lo(), a.hi()) < 0);
  const Interval s = Interval::exact(25L).pow_rational(1, 2);
  CHECK(s.contains(mpq_class(5)));
  CHECK(mpfr_cmp_ui(s.lo(), 5) == 0);
  const Interval r2 = Interval::exact(2L).pow_rational(1, 2);
  CHECK(mpfr_cmp_d(r2.lo(), 1.41421356) > 0);
  CHECK(mpfr_cmp_d(r2.hi(), 1.41421357) < 0);
  const Interval inv = Interval::exact(4L).pow_rational(-1, 2);
  CHECK(inv.contains(mpq_class(1, 2)));
  CHECK_THROWS_AS(Interval::exact(1L) / Interval::exact(0L), Error);
}

TEST_CASE("Weil bound") {
  CHECK(near(weil_curve(7, 1), 2));
  CHECK(near(weil_curve(7, 2), 3));
  const BoundValue w = weil_curve(25, 3);
  CHECK(w.value.contains(mpq_class(14)));
  CHECK(w.upper_holds(14));
  CHECK_FALSE(w.upper_holds(15));
  CHECK(w.str() == "1.40000000000e+01");
}

TEST_CASE("Ghorpade-Lachaud") {
  CHECK(ghorpade_lachaud_hyper(9, 2, 1).value.contains(mpq_class(768)));
  // s = 1, d = delta, r = n - 1 reproduces the hypersurface form
  for (long q : {5L, 9L, 13L})
    for (long delta : {1L, 2L, 4L}) {
      const BoundValue a = ghorpade_lachaud(q, 3, 2, 1, delta, delta);
      const BoundValue b = ghorpade_lachaud_hyper(q, 3, delta);
      CHECK(mpfr_equal_p(a.value.hi(), b.value.hi()));
    }
  CHECK(near(ghorpade_lachaud(7, 3, 2, 1, 2, 2), 6.0 * 2 * std::pow(5.0, 4) * 7));
}

TEST_CASE("Schmidt bounds") {
  // delta = 1: q^(n-1) - 7 q^(n-2)
  CHECK(near(schmidt74_lower(11, 3, 1), 11.0 * 11 - 7 * 11));
  CHECK(schmidt74_lower(11, 3, 1).dir == Rounding::Down);
  const BoundValue lo = schmidt74_lower(9, 2, 2);
  CHECK(lo.value.contains(mpq_class(-14)));
  CHECK(lo.trivial);
  CHECK_FALSE(lo.applicable);
  // theta = 3, 3^8 = 6561, 6 * 4 * 6561 = 157464
  CHECK(schmidt76(7, 2, 2).value.contains(mpq_class(157464)));
  CHECK(schmidt76(7, 3, 2).value.contains(mpq_class(157464 * 7)));
  // delta = 4: theta = 10, 10^1024 needs the extended exponent range
  const BoundValue big = schmidt76(5, 3, 4);
  CHECK(mpfr_number_p(big.value.hi()));
  CHECK(mpfr_get_exp(big.value.lo()) > 3400);
}

TEST_CASE("Huang-Wong") {
  // delta = 1: 3 q^(n-2) + 2 q^(n-5/2)
  CHECK(near(huang_wong(9, 3, 1), 3.0 * 9 + 2.0 * 3));
  CHECK(near(huang_wong(9, 2, 2), 68 + 256.0 / 3));
  CHECK(huang_wong(4, 2, 2).value.contains(mpq_class(196)));
  CHECK_FALSE(huang_wong(4, 2, 2).applicable);
}

TEST_CASE("main hypersurface estimates") {
  CHECK(cm_hypersurface(7, 3, 1).value.contains(mpq_class(35)));
  CHECK(near(cm_hypersurface(7, 2, 2), 5 * std::pow(2.0, 13.0 / 3)));
  CHECK(cm_hypersurface(7, 2, 2).str(6) == "1.00794e+02");
  CHECK(near(cm_hypersurface(9, 2, 3), 6 + 5 * std::pow(3.0, 13.0 / 3)));

  CHECK(near(cm_hypersurface_regular(16, 3, 1), 7.0 * 16));
  CHECK(cm_hypersurface_regular(16, 3, 1).applicable);
  CHECK_FALSE(cm_hypersurface_regular(15, 3, 1).applicable);
  CHECK(cm_hypersurface_regular(512, 2, 2).applicable);
  CHECK_FALSE(cm_hypersurface_regular(256, 2, 2).applicable);
  CHECK_FALSE(cm_hypersurface_regular(302, 2, 2).applicable);
  CHECK(cm_hypersurface_regular(307, 2, 2).applicable);
}

TEST_CASE("decomposition profiles") {
  CHECK(cm_hyper_general(7, 3, {4, 0, 0}).value.contains(mpq_class(4 * 7)));
  const BoundValue one = cm_hyper_general(7, 3, {2, 2, 1});
  const BoundValue base = cm_hypersurface(7, 3, 2);
  CHECK(near(one, base.to_double() + 7.0));
  CHECK(near(cm_hyper_general(7, 3, {2, 2, 2}), (5 * std::pow(2.0, 13.0 / 3) + 1) * 7));
  CHECK(cm_variety_general(7, 2, {4, 0, 0}).value.contains(mpq_class(16 * 7)));
  CHECK(cm_variety_general(7, 3, {1, 1, 1}).value.contains(mpq_class(6 * 49)));
  CHECK(near(cm_variety_general(11, 2, {3, 3, 1}), cm_variety(11, 3, 2, 3).to_double() + 9.0 * 11));
}

TEST_CASE("variety estimates") {
  const BoundValue v = cm_variety(37, 3, 1, 3);
  CHECK(v.applicable);
  CHECK(near(v, 2 * std::sqrt(37.0) + 5 * std::pow(3.0, 13.0 / 3)));
  CHECK_FALSE(cm_variety(36, 3, 1, 3).applicable);
  CHECK(cm_variety(5, 3, 2, 1).value.contains(mpq_class(25)));
  CHECK(cm_variety(7, 3, 2, 1).applicable);
  CHECK_FALSE(cm_variety(6, 3, 2, 1).applicable);
  CHECK(cm_variety_regular(5, 3, 2, 1).value.contains(mpq_class(35)));
  CHECK_FALSE(cm_variety_regular(302, 2, 1, 2).applicable);
  CHECK(cm_variety_regular(307, 2, 1, 2).applicable);
  CHECK(cm_variety_regular(307, 2, 1, 2).value.contains(mpq_class(28)));
}

TEST_CASE("Gao variants") {
  const auto g = gao_variants(11, 2, 1, 2, 11);
  REQUIRE(g.size() == 4);
  CHECK(g[0].applicable);
  CHECK(g[0].value.contains(mpq_class(48)));
  CHECK_FALSE(g[1].applicable);
  CHECK(gao_variants(433, 2, 1, 2, 433)[1].applicable);
  CHECK_FALSE(gao_variants(432, 2, 1, 2, 432)[1].applicable);
  CHECK_FALSE(gao_variants(17, 2, 1, 3, 17)[0].applicable);
  CHECK(gao_variants(401, 2, 1, 2, 401)[3].applicable);
  CHECK_FALSE(gao_variants(400, 2, 1, 2, 400)[3].applicable);
}

TEST_CASE("existence thresholds") {
  CHECK(existence_thresholds(1, 1).hypersurface.contains(mpq_class(2)));
  const auto t3 = existence_thresholds(3, 1);
  CHECK(t3.hypersurface.contains(mpq_class(162)));
  CHECK(exceeds(163, t3.hypersurface));
  CHECK_FALSE(exceeds(162, t3.hypersurface));
  CHECK(existence_thresholds(2, 1).variety.contains(mpq_class(32)));
  CHECK(std::abs(existence_thresholds(2, 1).q0.to_double(Rounding::Up) - 13 * std::pow(2.0, 10.0 / 3)) < 1e-9);
}

TEST_CASE("degree bounds") {
  const DegreeBounds d = bertini_degree_bounds(2, 1);
  CHECK(d.xi == 18);
  CHECK(d.psiD == 18);
  CHECK(d.xiD == 26);
  CHECK_THROWS_AS(bertini_degree_bounds(2, 2), Error);
  CHECK_THROWS_AS(bertini_degree_bounds(3, 0), Error);
  for (long delta = 2; delta <= 30; ++delta)
    for (long D = 1; D < delta; ++D) {
      const DegreeBounds b = bertini_degree_bounds(delta, D);
      // independent forms: the factored psi polynomial and psi + 2 delta^2
      const mpq_class dd(delta), x(D);
      const mpq_class psi = x * dd * dd * (x + 1) * (x + 2) - x * (x + 1) * (x + 2) * (x + 3) * dd / 8;
      CHECK(mpq_class(b.psiD) == psi);
      CHECK(b.xiD == b.psiD + 2 * delta * delta);
      CHECK(2 * b.xi == 3 * ipow(delta, 4) - 4 * ipow(delta, 3) + 5 * ipow(delta, 2));
    }
  CHECK(kaltofen_ceiling(3, 3, 2) == 18 * ipow(3, 6));
  CHECK(kaltofen_ceiling_D(3, 3, 2, 1) == 26 * ipow(3, 6));
}

TEST_CASE("plane statistics") {
  const PlaneStats s = plane_statistics(2, 3);
  CHECK(s.A == 12);
  CHECK(s.MT == 14);
  CHECK(s.E == 7);
  CHECK(s.D == 2);
  CHECK(plane_statistics(3, 3).MT == 39);
  const PlaneStats t = plane_statistics(3, 2);
  CHECK(t.MT == 1);
  CHECK(t.A == 1);
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L, 16L})
    for (long n = 2; n <= 6; ++n) {
      const PlaneStats p = plane_statistics(q, n);
      CHECK(p.A <= p.E * ipow(q, static_cast<unsigned long>(n - 2)));
      CHECK(p.A + p.D == p.MT);
      // D / A <= 4 / (3 q^2)
      CHECK(3 * q * q * p.D <= 4 * p.A);
    }
}

TEST_CASE("class bounds") {
  const PiClassBounds b = pi_class_bounds(2, 3, 3, 1);
  CHECK(b.tail == mpq_class(74 * 27) / 2);
  REQUIRE(b.delta2.has_value());
  CHECK(*b.delta2 == mpq_class(18 * 27) / 2);
  const PlaneStats s = plane_statistics(3, 3);
  CHECK(b.schmidt_lemma6 == mpq_class(8 * s.E));
  for (long delta = 2; delta <= 12; ++delta)
    for (long j = 1; j < delta; ++j) {
      // the tail coefficient is the Xi_D polynomial evaluated at D = delta / j
      const mpq_class dd(delta), x(mpq_class(delta, j));
      const mpq_class xid = x * x * x * dd * dd - x * x * x * x * dd / 8 - mpq_class(3, 4) * x * x * x * dd +
                            3 * x * x * dd * dd - mpq_class(11, 8) * x * x * dd + 2 * x * dd * dd -
                            mpq_class(3, 4) * x * dd + 2 * dd * dd;
      CHECK(pi_class_bounds(delta, 2, 2, j).tail == xid);
    }
  const PiClassBounds c = pi_class_bounds(3, 5, 2, 1);
  CHECK(near(BoundValue{"", Rounding::Up, c.sum_j_pi, {}, {}, true, false},
             (2 * std::pow(3.0, 13.0 / 3) + 3 * std::pow(3.0, 11.0 / 3)) / 4));
}

TEST_CASE("formula catalog") {
  for (const auto& id : formula_ids()) {
    const BoundValue b = evaluate_formula(id, 13, 3, 2, 3, 0);
    CHECK(b.formula == id);
  }
  CHECK_THROWS_AS(evaluate_formula("nope", 5, 2, 1, 2, 0), Error);
}

TEST_CASE("directed rounding survives refinement") {
  int tuples = 0;
  for (long q : {2L, 3L, 5L, 7L, 9L, 11L, 13L, 16L, 25L, 49L})
    for (long n = 2; n <= 6; ++n)
      for (long delta = 1; delta <= 10; ++delta)
        for (const auto& id : formula_ids()) {
          const long r = n - 1;
          const BoundValue lo = evaluate_formula(id, q, n, r, delta, 0, 128);
          const BoundValue hi = evaluate_formula(id, q, n, r, delta, 0, 512);
          if (lo.dir == Rounding::Up) CHECK(mpfr_cmp(lo.directed(), hi.directed()) >= 0);
          else CHECK(mpfr_cmp(lo.directed(), hi.directed()) <= 0);
          ++tuples;
        }
  CHECK(tuples >= 1000);
}
