#include "doctest.h"

#include <algorithm>
#include <functional>

#include "weilbench/bivariate.hpp"
#include "weilbench/errors.hpp"
#include "weilbench/mpoly.hpp"
#include "weilbench/rng.hpp"
#include "weilbench/series.hpp"
#include "weilbench/upoly.hpp"

using namespace weilbench;

namespace {

MPoly P(const std::string& s, const FieldPtr& F, std::size_t n = 2) { return parse_poly(s, F, n); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

MPoly random_poly(const FieldPtr& F, std::size_t n, int deg, Rng& rng) {
  MPoly f(F, n);
  std::vector<std::uint32_t> e(n, 0);
  // all exponent vectors of total degree <= deg
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      f.add_term(e, F->element(uniform_below(rng, F->size())));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = static_cast<std::uint32_t>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, deg);
  return f;
}

}  // namespace

TEST_CASE("ring operations and exact division") {
  auto F5 = make_prime_field(5);
  CHECK((P("X+Y", F5) * P("X-Y", F5)) == P("X^2+4*Y^2", F5));
  CHECK(exact_divide(P("X^2-Y^2", F5), P("X-Y", F5)) == P("X+Y", F5));
  CHECK(code_of([&] { exact_divide(P("X^2+1", F5), P("X", F5)); }) == Errc::NotDivisible);
  CHECK(P("0", F5).total_degree() == kDegreeZeroPoly);
  CHECK(kDegreeZeroPoly < -1000000);
}

TEST_CASE("parsing") {
  auto F5 = make_prime_field(5);
  const MPoly f = P("X1^2*X2 + 3*X3 - 1", F5, 3);
  CHECK(f.total_degree() == 3);
  CHECK(f.terms().size() == 3);
  CHECK(code_of([&] { P("X4", F5, 3); }) == Errc::ParseError);
  CHECK(code_of([&] { P("X^", F5); }) == Errc::ParseError);
  CHECK(P("7*X", F5) == P("2*X", F5));
  CHECK(P("(X+1)^2", F5) == P("X^2+2*X+1", F5));
  // printing is parseable
  Rng rng(3);
  for (int it = 0; it < 50; ++it) {
    const MPoly g = random_poly(F5, 3, 3, rng);
    CHECK(P(g.to_string(), F5, 3) == g);
  }
  auto F9 = make_extension(make_prime_field(3), 2);
  const MPoly h = P("z1*X + (1+z1)*Y^2", F9);
  CHECK(P(h.to_string(), F9) == h);
}

TEST_CASE("evaluation") {
  auto F5 = make_prime_field(5);
  const std::vector<Elem> pt{Elem{2}, Elem{3}};
  CHECK(P("X*Y-1", F5).eval(pt).code == 0);
  CHECK(P("0", F5).eval(pt).code == 0);
  auto F3 = make_prime_field(3);
  CHECK(P("X^2+Y^2", F3).eval(std::vector<Elem>{Elem{1}, Elem{1}}).code == 2);
  CHECK(code_of([&] { P("X", F5).eval(std::vector<Elem>{Elem{1}}); }) == Errc::ArityMismatch);
}

TEST_CASE("affine substitution") {
  auto F5 = make_prime_field(5);
  const MPoly f = P("X+Y", F5);
  // X1 = T, X2 = T + 1
  const MPoly g = affine_substitute(f, {{Elem{1}}, {Elem{1}}}, {Elem{0}, Elem{1}}, 1);
  CHECK(g == P("2*X+1", F5, 1));
  const MPoly id = affine_substitute(f, {{Elem{1}, Elem{0}}, {Elem{0}, Elem{1}}}, {Elem{0}, Elem{0}}, 2);
  CHECK(id == f);
  const MPoly sq = affine_substitute(P("X^2", F5, 1), {{Elem{3}}}, {Elem{0}}, 1);
  CHECK(sq == P("4*X^2", F5, 1));
  CHECK(code_of([&] { affine_substitute(f, {{Elem{1}}}, {Elem{0}}, 1); }) == Errc::DimensionMismatch);
}

TEST_CASE("plane restriction examples") {
  auto F5 = make_prime_field(5);
  PlaneParam L{{Elem{0}, Elem{0}, Elem{0}}, {Elem{0}, Elem{0}}, {Elem{0}, Elem{1}}};
  CHECK(restrict_to_plane(P("X3", F5, 3), L) == P("Y", F5));
  PlaneParam L2{{Elem{0}, Elem{0}}, {Elem{1}}, {Elem{1}}};
  CHECK(restrict_to_plane(P("X^2+Y^2", F5), L2) == P("2*X^2+2*X*Y+Y^2", F5));
  PlaneParam L3{{Elem{1}, Elem{0}, Elem{0}}, {Elem{1}, Elem{1}}, {Elem{1}, Elem{1}}};
  CHECK(restrict_to_plane(P("X1+X2+X3", F5, 3), L3) == P("3*X+2*Y+1", F5));
  PlaneParam bad{{Elem{0}, Elem{0}, Elem{0}}, {Elem{0}, Elem{0}}, {Elem{0}, Elem{0}}};
  CHECK(code_of([&] { restrict_to_plane(P("X1", F5, 3), bad); }) == Errc::DegenerateEta);
  CHECK(code_of([&] { restrict_to_plane(P("X1", F5, 2), L); }) == Errc::DimensionMismatch);
}

TEST_CASE("plane restriction commutes with evaluation") {
  Rng rng(11);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto F = make_prime_field(p);
    for (std::size_t n = 2; n <= 3; ++n) {
      for (int it = 0; it < 6; ++it) {
        const MPoly f = random_poly(F, n, 1 + static_cast<int>(uniform_below(rng, 3)), rng);
        for (int pl = 0; pl < 8; ++pl) {
          PlaneParam L;
          for (std::size_t i = 0; i < n; ++i) L.nu.push_back(F->element(uniform_below(rng, p)));
          for (std::size_t i = 1; i < n; ++i) {
            L.omega.push_back(F->element(uniform_below(rng, p)));
            L.eta.push_back(F->element(uniform_below(rng, p)));
          }
          if (std::all_of(L.eta.begin(), L.eta.end(), [](Elem e) { return e.code == 0; })) L.eta[0] = F->one();
          const MPoly fl = restrict_to_plane(f, L);
          CHECK(fl.total_degree() <= f.total_degree());
          for (std::uint64_t x = 0; x < p; ++x)
            for (std::uint64_t y = 0; y < p; ++y) {
              const Elem X = F->element(x), Y = F->element(y);
              std::vector<Elem> pt{F->add(X, L.nu[0])};
              for (std::size_t i = 1; i < n; ++i)
                pt.push_back(F->add(F->add(F->mul(L.omega[i - 1], X), F->mul(L.eta[i - 1], Y)), L.nu[i]));
              CHECK(fl.eval(std::vector<Elem>{X, Y}) == f.eval(pt));
            }
        }
      }
    }
  }
}

TEST_CASE("resultant examples") {
  auto F5 = make_prime_field(5);
  CHECK(resultant(P("X^2+1", F5, 1), P("X-2", F5, 1), 0).is_zero());
  // det [[1, -a], [1, -b]] = a - b
  CHECK(resultant(P("X-1", F5, 1), P("X-3", F5, 1), 0) == P("3", F5, 1));
  CHECK(resultant(P("X^2-Y", F5), P("X", F5), 0) == P("-Y", F5));
  CHECK(code_of([&] { resultant(P("Y", F5), P("Y+1", F5), 0); }) == Errc::BothConstantInVar);

  // disc(X^2 - c) = det [[1,0,-c],[2,0,0],[0,2,0]] = -4c, which is c over F_5
  const MPoly d = discriminant(P("X^2-Y", F5), 0);
  CHECK(d == P("Y", F5));
  CHECK(discriminant(P("X^2", F5, 1), 0).is_zero());
  auto F7 = make_prime_field(7);
  CHECK_FALSE(discriminant(P("(X-1)*(X-2)", F7, 1), 0).is_zero());
}

TEST_CASE("resultant multiplicativity") {
  Rng rng(21);
  for (std::uint64_t p : {3u, 5u, 7u}) {
    auto F = make_prime_field(p);
    for (int it = 0; it < 20; ++it) {
      const MPoly f = random_poly(F, 2, 2, rng), g = random_poly(F, 2, 2, rng), h = random_poly(F, 2, 2, rng);
      if (f.degree_in(0) < 1 || g.degree_in(0) < 1 || h.degree_in(0) < 1) continue;
      CHECK(resultant(f * g, h, 0) == resultant(f, h, 0) * resultant(g, h, 0));
    }
  }
}

TEST_CASE("univariate tools") {
  auto F5 = make_prime_field(5);
  const UPoly g = up::gcd(*F5, up::from_codes({4, 0, 1}), up::from_codes({4, 1}));
  CHECK(g == up::from_codes({4, 1}));
  auto F3 = make_prime_field(3);
  CHECK(up::roots(*F3, up::from_codes({1, 0, 1})).empty());
  auto F9 = make_extension(F3, 2);
  CHECK(up::roots(*F9, up::from_codes({1, 0, 1})).size() == 2);
  CHECK(up::count_distinct_roots(*F9, up::from_codes({1, 0, 1})) == 2);
  // factors of X^2 (X + 1): distinct irreducible factors X and X + 1
  const auto fs = up::factor_squarefree(*F5, up::from_codes({0, 1, 1}));
  CHECK(fs.size() == 2);
  CHECK(up::is_squarefree(*F5, up::from_codes({0, 1, 1})));
  CHECK_FALSE(up::is_squarefree(*F5, up::from_codes({0, 0, 1, 1})));
}

TEST_CASE("radical and bivariate gcd") {
  auto F3 = make_prime_field(3);
  CHECK(radical(P("(X-Y)^2*(X+Y)", F3)) == P("(X-Y)*(X+Y)", F3).normalized());
  CHECK(radical(P("X^3+Y^3", F3)) == P("X+Y", F3).normalized());
  CHECK(bivariate_gcd(P("X^2-Y^2", F3), P("X*Y-Y^2", F3)) == P("X-Y", F3).normalized());
  CHECK(is_squarefree_bivariate(P("X^2+Y^2", F3)));
  CHECK_FALSE(is_squarefree_bivariate(P("(X+Y+1)^2*X", F3)));
  CHECK(code_of([&] { radical(P("0", F3)); }) == Errc::ZeroPolynomial);
}

TEST_CASE("truncated series") {
  auto F5 = make_prime_field(5);
  TruncSeries a(F5, {F5->one(), F5->neg(F5->one())}, 3);
  const TruncSeries r = a.reciprocal();
  for (int k = 0; k <= 3; ++k) CHECK(r[k] == F5->one());
  TruncSeries two(F5, {F5->from_int(2)}, 0);
  CHECK(two.reciprocal()[0].code == 3);
  TruncSeries u(F5, {F5->one(), F5->one()}, 1), v(F5, {F5->one(), F5->neg(F5->one())}, 1);
  const TruncSeries w = u * v;
  CHECK(w[0] == F5->one());
  CHECK(w[1].code == 0);
  TruncSeries z(F5, {F5->zero(), F5->one()}, 2);
  CHECK(code_of([&] { z.reciprocal(); }) == Errc::NonUnitConstantTerm);

  Rng rng(8);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto F = make_prime_field(p);
    for (int it = 0; it < 70; ++it) {
      const unsigned order = static_cast<unsigned>(uniform_below(rng, 33));
      std::vector<Elem> c(order + 1);
      for (auto& e : c) e = F->element(uniform_below(rng, p));
      if (c[0].code == 0) c[0] = F->one();
      TruncSeries s(F, c, order);
      const TruncSeries prod = s * s.reciprocal();
      CHECK(prod[0] == F->one());
      for (unsigned k = 1; k <= order; ++k) CHECK(prod[k].code == 0);
    }
  }
}

TEST_CASE("Newton lifting") {
  auto F5 = make_prime_field(5);
  const MPoly f = P("X^2-1-Y", F5);
  const TruncSeries a = newton_lift(f, F5, F5->one(), 1);
  CHECK(a[0] == F5->one());
  CHECK(a[1].code == 3);
  const TruncSeries lin = newton_lift(P("X-Y", F5), F5, F5->zero(), 5);
  CHECK(lin[1] == F5->one());
  for (int k = 2; k <= 5; ++k) CHECK(lin[k].code == 0);
  CHECK(code_of([&] { newton_lift(f, F5, F5->from_int(2), 3); }) == Errc::BadInitialPoint);
  // f(alpha, Y) vanishes to the requested order
  const TruncSeries deep = newton_lift(f, F5, F5->from_int(4), 20);
  const TruncSeries val = compose(to_bipoly(f), deep);
  for (int k = 0; k <= 20; ++k) CHECK(val[k].code == 0);
}
