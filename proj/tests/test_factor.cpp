#include "doctest.h"

#include "oracles.hpp"
#include "weilbench/errors.hpp"
#include "weilbench/factor.hpp"
#include "weilbench/rng.hpp"

using namespace weilbench;

namespace {

MPoly P(const std::string& s, const FieldPtr& F) { return parse_poly(s, F, 2); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

// Random f = X^delta + (other monomials of degree <= delta).
MPoly random_monic(const FieldPtr& F, int delta, Rng& rng) {
  MPoly f(F, 2);
  for (int i = 0; i <= delta; ++i)
    for (int j = 0; i + j <= delta; ++j)
      if (!(i == delta && j == 0))
        f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, F->element(uniform_below(rng, F->size())));
  f.add_term({static_cast<std::uint32_t>(delta), 0}, F->one());
  return f;
}

}  // namespace

TEST_CASE("precondition") {
  auto F5 = make_prime_field(5);
  CHECK_FALSE(check_precondition(P("X^2-Y", F5)));
  CHECK(check_precondition(P("X^2-1-Y", F5)));
  CHECK(check_precondition(P("X+Y", F5)));
  CHECK(code_of([&] { check_precondition(P("X*Y+1", F5)); }) == Errc::NotMonicInX);
}

TEST_CASE("normalization") {
  auto F5 = make_prime_field(5);
  const Normalized id = normalize_for_lifting(P("X^2-1-Y", F5));
  CHECK(id.change.is_identity());
  CHECK(id.enlargements == 0);
  const Normalized n = normalize_for_lifting(P("X^2-Y", F5), 1);
  CHECK(check_precondition(n.g));
  CHECK_FALSE(n.change.is_identity());
  CHECK(undo_change(n.g, n.change) == P("X^2-Y", F5).normalized());
  auto F2 = make_prime_field(2);
  CHECK(code_of([&] { normalize_for_lifting(P("(X+Y)^2", F2)); }) == Errc::NormalizationFailed);
  // three lines over F_2: the change may live in an enlarged field
  const Normalized e = normalize_for_lifting(P("X*Y*(X+Y+1)", F2), 3);
  CHECK(check_precondition(e.g));
  CHECK(undo_change(e.g, e.change) == P("X*Y*(X+Y+1)", F2).embed_into(e.g.ctx()).normalized());
}

TEST_CASE("search examples") {
  auto F5 = make_prime_field(5);
  const FactorReport r = factor_search(P("X^2+X-Y^2-Y", F5), 1, SolutionField::BaseK);
  CHECK(r.status == FactorStatus::FoundFactors);
  CHECK(oracle::strings_of(r.factors) == oracle::strings_of({P("X-Y", F5), P("X+Y+1", F5)}));

  auto F3 = make_prime_field(3);
  // X^2 + Y^2 violates the precondition at Y = 0; shift Y first
  const MPoly g = P("X^2+(Y+1)^2", F3);
  CHECK(factor_search(g, 1, SolutionField::BaseK).status == FactorStatus::NoFactorUpToD);
  const FactorReport c = factor_search(g, 1, SolutionField::RootFieldKi);
  REQUIRE(c.factors.size() == 2);
  CHECK(c.factors[0].ctx()->size() == 9);
  for (const auto& fac : c.factors) CHECK_NOTHROW(exact_divide(g.embed_into(fac.ctx()), fac));

  const Normalized n = normalize_for_lifting(P("X^2-Y", F5), 2);
  CHECK(factor_search(n.g, 1, SolutionField::BaseK).status == FactorStatus::NoFactorUpToD);

  CHECK(code_of([&] { factor_search(P("X^2-Y", F5), 1, SolutionField::BaseK); }) == Errc::PreconditionViolated);
  CHECK(code_of([&] { factor_search(P("X^2-1-Y", F5), 2, SolutionField::BaseK); }) == Errc::DOutOfRange);
}

TEST_CASE("absolute irreducibility examples") {
  auto F3 = make_prime_field(3), F5 = make_prime_field(5);
  CHECK_FALSE(is_absolutely_irreducible(P("X^2+Y^2", F3)));
  CHECK(is_absolutely_irreducible(P("X^2-Y^3", F5)));
  CHECK(is_absolutely_irreducible(P("Y-X^2", F5)));
  CHECK_FALSE(is_absolutely_irreducible(P("(X+Y)^2", F5)));
  CHECK(absolute_factor_degrees(P("X^2+Y^2", F3)) == std::vector<int>{1, 1});
  CHECK(absolute_factor_degrees(P("(X^2-Y^3)*(X+Y)", F5)) == std::vector<int>{1, 3});
}

TEST_CASE("nu counts") {
  auto F3 = make_prime_field(3), F5 = make_prime_field(5);
  CHECK(count_abs_irr_fq_factors(P("X*Y", F5)) == 2);
  CHECK(count_abs_irr_fq_factors(P("X^2+Y^2", F3)) == 0);
  CHECK(count_abs_irr_fq_factors(P("X^2+Y^2", F5)) == 2);
  CHECK(count_abs_irr_fq_factors(P("(X-Y)^2*(X+Y)", F3)) == 2);
  CHECK(code_of([&] { count_abs_irr_fq_factors(P("0", F3)); }) == Errc::ZeroPolynomial);
  CHECK(count_abs_irr_fq_factors(P("2", F3)) == 0);
}

TEST_CASE("factor_search agrees with trial division") {
  Rng rng(101);
  int checked = 0;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto F = make_prime_field(p);
    for (int it = 0; it < 60; ++it) {
      const int delta = 2 + static_cast<int>(uniform_below(rng, 3));
      MPoly f = random_monic(F, delta, rng);
      if (!check_precondition(f)) continue;
      const int D = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(delta - 1)));
      CAPTURE(f.to_string());
      CAPTURE(D);
      const FactorReport r = factor_search(f, D, SolutionField::BaseK);
      std::vector<MPoly> expect;
      for (auto& g : oracle::trial_factorization(f))
        if (g.total_degree() <= D) expect.push_back(g);
      CHECK(oracle::strings_of(r.factors) == oracle::strings_of(expect));
      CHECK((r.systems_solved > 0) == !expect.empty());
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("absolute irreducibility agrees with the line oracle") {
  Rng rng(7);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto F = make_prime_field(p);
    for (int it = 0; it < 80; ++it) {
      MPoly f(F, 2);
      const int delta = 1 + static_cast<int>(uniform_below(rng, 3));
      for (int i = 0; i <= delta; ++i)
        for (int j = 0; i + j <= delta; ++j)
          f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, F->element(uniform_below(rng, p)));
      if (f.total_degree() < 1) continue;
      CAPTURE(f.to_string());
      CHECK(is_absolutely_irreducible(f, 5) == oracle::abs_irreducible_small(f));
    }
  }
}

TEST_CASE("nu is invariant under affine changes") {
  Rng rng(13);
  for (std::uint64_t p : {3u, 5u}) {
    auto F = make_prime_field(p);
    for (int it = 0; it < 15; ++it) {
      MPoly f(F, 2);
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
          if (uniform_below(rng, 2) == 0)
            f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, F->element(uniform_below(rng, p)));
      if (f.total_degree() < 1) continue;
      const int nu = count_abs_irr_fq_factors(f);
      Elem a, b, c, d;
      do {
        a = F->element(uniform_below(rng, p));
        b = F->element(uniform_below(rng, p));
        c = F->element(uniform_below(rng, p));
        d = F->element(uniform_below(rng, p));
      } while (F->sub(F->mul(a, d), F->mul(b, c)).code == 0);
      const MPoly g = affine_substitute(f, {{a, b}, {c, d}}, {F->element(uniform_below(rng, p)), F->element(uniform_below(rng, p))}, 2);
      CAPTURE(f.to_string());
      CHECK(count_abs_irr_fq_factors(g) == nu);
    }
  }
}
