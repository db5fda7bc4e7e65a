#include "doctest.h"

#include "weilbench/counting.hpp"
#include "weilbench/errors.hpp"
#include "weilbench/rng.hpp"

using namespace weilbench;

namespace {

PolySystem S(std::initializer_list<std::string> ps, const FieldPtr& F, std::size_t n) {
  std::vector<MPoly> v;
  for (const auto& s : ps) v.push_back(parse_poly(s, F, n));
  return PolySystem(v);
}

MPoly random_poly(const FieldPtr& F, std::size_t n, int deg, Rng& rng) {
  MPoly f(F, n);
  for (int it = 0; it < 6; ++it) {
    Exponents e(n, 0);
    int left = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(deg + 1)));
    for (std::size_t i = 0; i < n && left > 0; ++i) {
      const int k = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(left + 1)));
      e[i] = static_cast<std::uint32_t>(k);
      left -= k;
    }
    f = f + MPoly::constant(F, n, F->element(uniform_below(rng, F->size()))) * [&] {
      MPoly m(F, n);
      m.add_term(e, F->one());
      return m;
    }();
  }
  return f;
}

}  // namespace

TEST_CASE("count examples") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    auto F = make_prime_field(p);
    CHECK(count_points(S({"X*Y-1"}, F, 2)) == p - 1);
    CHECK(count_points(S({"X1", "X1-1"}, F, 2)) == 0);
    CHECK(count_hypersurface_fast(parse_poly("X", F, 2)) == p);
  }
  auto F3 = make_prime_field(3);
  CHECK(count_points(S({"X^2+Y^2"}, F3, 2)) == 1);
  auto F5 = make_prime_field(5);
  CHECK(count_hypersurface_fast(parse_poly("Y^2-X^3-X", F5, 2)) == 3);
  CHECK(count_points(S({"Y^2-X^3-X"}, F5, 2)) == 3);
  const MPoly sph = parse_poly("X1^2+X2^2+X3^2", F3, 3);
  CHECK(count_hypersurface_fast(sph) == count_points(PolySystem({sph})));
}

TEST_CASE("extension counts") {
  auto F3 = make_prime_field(3);
  CHECK(count_over_extension(S({"X^2+1"}, F3, 1), 2) == 2);
  CHECK(count_over_extension(S({"X^2+1"}, F3, 1), 1) == count_points(S({"X^2+1"}, F3, 1)));
  auto F5 = make_prime_field(5);
  CHECK(count_over_extension(S({"X^5-X"}, F5, 1), 1) == 5);
}

TEST_CASE("budget") {
  auto F7 = make_prime_field(7);
  CountOptions opt;
  opt.budget = 100;
  try {
    count_points(S({"X1+X2+X3"}, F7, 3), opt);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("fast path, threads, monotonicity and products") {
  Rng rng(17);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto F = make_prime_field(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int it = 0; it < 8; ++it) {
        const MPoly f = random_poly(F, n, 3, rng), g = random_poly(F, n, 3, rng);
        const std::uint64_t nf = count_points(PolySystem({f}));
        if (f.total_degree() >= 1) CHECK(count_hypersurface_fast(f, {}, it) == nf);
        CountOptions par;
        par.threads = 3;
        CHECK(count_points(PolySystem({f}), par) == nf);
        const std::uint64_t ng = count_points(PolySystem({g}));
        CHECK(count_points(PolySystem({f, g})) <= nf);
        const std::uint64_t nfg = count_points(PolySystem({f * g}));
        CHECK(nfg <= nf + ng);
        CHECK(nfg >= std::max(nf, ng));
      }
    }
  }
}

TEST_CASE("point-count lemmas") {
  auto F5 = make_prime_field(5);
  auto r1 = assert_lemma_bounds(S({"X1"}, F5, 2), 1, 1, PointLemma::DegreeTimesQr);
  CHECK(r1.holds);
  CHECK(r1.count == 5);
  auto r2 = assert_lemma_bounds(S({"X1*X2-1"}, F5, 2), 1, 2, PointLemma::DegreeTimesQr);
  CHECK(r2.count == 4);
  auto F3 = make_prime_field(3);
  auto r3 = assert_lemma_bounds(S({"X1^2+X2-X3", "X2^2+X1*X3+1"}, F3, 3), 1, 2, PointLemma::CoprimePairSquared);
  CHECK(r3.holds);
  CHECK(r3.bound == 12);
  // a deliberately false claim must be reported as a violation
  try {
    assert_lemma_bounds(S({"X1*X2"}, F5, 2), 1, 1, PointLemma::NonAbsIrreducible);
    FAIL("expected BoundViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundViolation);
  }
}

TEST_CASE("variety points") {
  auto F5 = make_prime_field(5);
  const PolySystem tc = S({"X2-X1^2", "X3-X1^3"}, F5, 3);
  Rng rng(1);
  const auto pts = variety_points(tc, F5, 1000, 1000, rng);
  CHECK(pts.size() == 5);
  auto F25 = make_extension(F5, 2);
  const auto pts25 = variety_points(tc, F25, 1000, 1000, rng);
  CHECK(pts25.size() == 25);
  for (const auto& x : pts25) CHECK(F25->mul(x[0], x[0]) == x[1]);
  // sampling mode returns distinct points on V
  const auto some = variety_points(tc, F25, 10, 8, rng);
  CHECK(some.size() == 8);
}
