#include "doctest.h"

#include <cmath>
#include <set>

#include "weilbench/errors.hpp"
#include "weilbench/gf.hpp"
#include "weilbench/rng.hpp"
#include "weilbench/upoly.hpp"

using namespace weilbench;

namespace {

bool has_root(const FieldPtr& F, const UPoly& f) {
  for (std::uint64_t i = 0; i < F->size(); ++i)
    if (up::eval(*F, f, F->element(i)).code == 0) return true;
  return false;
}

std::vector<FieldPtr> small_fields() {
  auto f2 = make_prime_field(2), f3 = make_prime_field(3);
  return {f2, f3, make_prime_field(5), make_prime_field(7), make_extension(f2, 2), make_extension(f2, 3),
          make_extension(f3, 2), make_extension(make_extension(f2, 2), 2), make_extension(f2, 6),
          make_extension(make_prime_field(5), 2)};
}

}  // namespace

TEST_CASE("prime field construction") {
  CHECK(make_prime_field(5)->size() == 5);
  CHECK(make_prime_field(2)->size() == 2);
  CHECK_THROWS_AS(make_prime_field(6), Error);
  CHECK_THROWS_AS(make_prime_field(1), Error);
  try {
    make_prime_field(6);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
  CHECK(make_prime_field(5) == make_prime_field(5));
}

TEST_CASE("extensions and moduli") {
  auto f3 = make_prime_field(3);
  auto f9 = make_extension(f3, 2);
  CHECK(f9->size() == 9);
  CHECK(f9->spec() == "3^2");
  CHECK(make_extension(make_prime_field(5), 1) == make_prime_field(5));
  CHECK(make_extension(f3, 2, 7) == make_extension(f3, 2, 7));

  // x^2 + 1 has no root in F_3, so it is a valid modulus
  const UPoly x2p1 = up::from_codes({1, 0, 1});
  CHECK_FALSE(has_root(f3, x2p1));
  auto f9i = make_extension(f3, x2p1);
  CHECK(f9i->size() == 9);

  auto f2 = make_prime_field(2);
  const UPoly x3x1 = up::from_codes({1, 1, 0, 1});
  CHECK_FALSE(has_root(f2, x3x1));
  CHECK(make_extension(f2, x3x1)->size() == 8);
  CHECK_THROWS_AS(make_extension(f3, up::from_codes({2, 0, 1})), Error);  // x^2 - 1 splits

  for (const auto& F : small_fields()) {
    if (F->is_prime()) continue;
    CHECK(up::is_irreducible(*F->base(), F->modulus()));
    CHECK(F->size() == static_cast<std::uint64_t>(std::pow(F->characteristic(), F->absolute_degree()) + 0.5));
  }
}

TEST_CASE("arithmetic examples") {
  auto f5 = make_prime_field(5);
  CHECK(f5->mul(Elem{3}, Elem{4}).code == 2);
  CHECK_THROWS_AS(f5->inv(Elem{0}), Error);

  auto f3 = make_prime_field(3);
  auto f9 = make_extension(f3, up::from_codes({1, 0, 1}));
  const Elem one_plus_i = f9->from_coeffs(std::vector<Elem>{Elem{1}, Elem{1}});
  const Elem one_minus_i = f9->from_coeffs(std::vector<Elem>{Elem{1}, Elem{2}});
  CHECK(f9->mul(one_plus_i, one_minus_i) == f9->from_int(2));
  const Elem i = f9->from_coeffs(std::vector<Elem>{Elem{0}, Elem{1}});
  CHECK(f9->mul(i, i) == f9->from_int(-1));

  GFElem a(f5, 3), b(f5, 4);
  CHECK((a * b) == GFElem(f5, 2));
  CHECK_THROWS_AS(a + GFElem(f3, 1), Error);
}

TEST_CASE("embedding") {
  auto f3 = make_prime_field(3);
  auto f9 = make_extension(f3, 2);
  CHECK(embed(Elem{2}, f3, f9) == f9->from_int(2));
  auto f5 = make_prime_field(5);
  auto f25 = make_extension(f5, 2);
  CHECK(embed(Elem{0}, f5, f25).code == 0);
  CHECK_THROWS_AS(embed(Elem{4}, f9, f3), Error);

  auto f81 = make_extension(f9, 2);
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b) {
      const Elem x{a}, y{b};
      CHECK(embed(f9->add(x, y), f9, f81) == f81->add(embed(x, f9, f81), embed(y, f9, f81)));
      CHECK(embed(f9->mul(x, y), f9, f81) == f81->mul(embed(x, f9, f81), embed(y, f9, f81)));
    }
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) {
      CHECK(embed(f3->mul(Elem{a}, Elem{b}), f3, f81) == f81->mul(embed(Elem{a}, f3, f81), embed(Elem{b}, f3, f81)));
    }
}

TEST_CASE("enumeration") {
  auto f2 = make_prime_field(2);
  auto e2 = enumerate_elements(f2);
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].is_zero());
  CHECK(e2[1] == GFElem(f2, 1));
  auto e3 = enumerate_elements(make_prime_field(3));
  CHECK(e3.size() == 3);
  auto f4 = make_extension(f2, 2);
  std::set<std::uint32_t> seen;
  for (const auto& x : enumerate_elements(f4)) seen.insert(x.raw().code);
  CHECK(seen.size() == 4);
  auto e4 = enumerate_elements(f4);
  CHECK(e4[0].is_zero());
  CHECK(e4[1] == GFElem(f4, 1));
}

TEST_CASE("Frobenius fixed points and inverses") {
  for (const auto& F : small_fields()) {
    if (F->size() > 64) continue;
    CAPTURE(F->spec());
    const std::uint64_t q = F->size();
    for (std::uint64_t i = 0; i < q; ++i) {
      const Elem a = F->element(i);
      CHECK(F->pow(a, q) == a);
      CHECK(F->add(a, F->neg(a)).code == 0);
      if (a.code != 0) {
        CHECK(F->pow(a, q - 1) == F->one());
        CHECK(F->mul(a, F->inv(a)) == F->one());
      }
      CHECK(F->pow(F->pth_root(a), F->characteristic()) == a);
    }
  }
}

TEST_CASE("field axioms on exhaustive triples") {
  for (const auto& F : small_fields()) {
    if (F->size() > 9) continue;
    CAPTURE(F->spec());
    const std::uint64_t q = F->size();
    for (std::uint64_t i = 0; i < q; ++i)
      for (std::uint64_t j = 0; j < q; ++j) {
        const Elem a = F->element(i), b = F->element(j);
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (std::uint64_t k = 0; k < q; ++k) {
          const Elem c = F->element(k);
          CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
  }
}

TEST_CASE("large field uses the slow multiplication path") {
  auto f163 = make_prime_field(163);
  auto big = make_extension(f163, 3);
  CHECK(big->size() == 163ULL * 163 * 163);
  Rng rng(5);
  for (int it = 0; it < 50; ++it) {
    const Elem a = big->element(1 + uniform_below(rng, big->size() - 1));
    CHECK(big->mul(a, big->inv(a)) == big->one());
    CHECK(big->frobenius(big->frobenius(big->frobenius(a))) == a);
  }
}

TEST_CASE("field spec parsing") {
  CHECK(parse_field_spec("3^2")->size() == 9);
  CHECK(parse_field_spec("7")->size() == 7);
  CHECK_THROWS_AS(parse_field_spec("6^1"), Error);
  CHECK_THROWS_AS(parse_field_spec("x"), Error);
}
