#include "doctest.h"

#include <limits>

#include "weilbench/errors.hpp"
#include "weilbench/project.hpp"

using namespace weilbench;

namespace {

PolySystem S(std::initializer_list<std::string> ps, const FieldPtr& F, std::size_t n) {
  std::vector<MPoly> v;
  for (const auto& s : ps) v.push_back(parse_poly(s, F, n));
  return PolySystem(v);
}

std::vector<std::vector<Elem>> mat(const FieldPtr& F, std::vector<std::vector<std::uint64_t>> m) {
  std::vector<std::vector<Elem>> out;
  for (auto& row : m) {
    out.emplace_back();
    for (auto v : row) out.back().push_back(F->element(v));
  }
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("fit_image examples") {
  auto F5 = make_prime_field(5);
  const PolySystem graph = S({"X2-X1^2"}, F5, 2);
  CHECK(fit_image(graph, mat(F5, {{1, 0}, {0, 1}}), {F5->zero(), F5->zero()}, 2) == parse_poly("Y-X^2", F5, 2));

  auto F37 = make_prime_field(37);
  const PolySystem tc = S({"X2-X1^2", "X3-X1^3"}, F37, 3);
  const auto pr = mat(F37, {{1, 0, 0}, {0, 0, 1}});
  const std::vector<Elem> zero2{F37->zero(), F37->zero()};
  CHECK(fit_image(tc, pr, zero2, 3) == parse_poly("Y-X^3", F37, 2));
  CHECK(code_of([&] { fit_image(tc, pr, zero2, 1); }) == Errc::NoSolution);
  // degree 4 leaves h times every linear form
  CHECK(code_of([&] { fit_image(tc, pr, zero2, 4); }) == Errc::NotStabilized);
}

TEST_CASE("tautological projection of a hypersurface") {
  auto F5 = make_prime_field(5);
  const PolySystem V = S({"X3-X1*X2"}, F5, 3);
  const Projection P = draw_projection(V, 2, 2, 1);
  CHECK(P.h == V.polys[0]);
  const BirationalReport rep = birational_check(V, P, 2);
  CHECK(rep.V_off == rep.W_off);
  CHECK(rep.V_points == 25);
  CHECK(rep.pass());

  const PolySystem G = S({"X2-X1^2"}, F5, 2);
  const Projection Q = draw_projection(G, 1, 2, 1);
  for (std::uint64_t a = 0; a < 5; ++a) {
    const Elem x = F5->element(a);
    const Point y{x, F5->mul(x, x)};
    CHECK(inverse_section(Q, y) == y);
  }
}

TEST_CASE("regularity threshold") {
  auto F5 = make_prime_field(5);
  CHECK(code_of([&] { draw_projection(S({"X2-X1^2", "X3-X1^3"}, F5, 3), 1, 3, 0); }) == Errc::RegularityViolated);
}

TEST_CASE("twisted cubic over F_37") {
  auto F37 = make_prime_field(37);
  const PolySystem tc = S({"X2-X1^2", "X3-X1^3"}, F37, 3);
  int accepted = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    CAPTURE(seed);
    const Projection P = draw_projection(tc, 1, 3, seed);
    ++accepted;
    CHECK(P.h.degree_in(1) == 3);
    CHECK(P.h.total_degree() <= 3);
    const BirationalReport rep = birational_check(tc, P, 3);
    CHECK(rep.V_points == 37);
    CHECK(rep.V_off == rep.W_off);
    CHECK(rep.pass());
    // inverse section against the brute-force fiber
    Rng rng(seed);
    for (std::uint64_t a = 0; a < 37; ++a) {
      const Elem t = F37->element(a);
      const Point x{t, F37->mul(t, t), F37->pow(t, 3)};
      const Point y = P.apply(*F37, x);
      if (P.h0.eval(y).code == 0) {
        CHECK(code_of([&] { inverse_section(P, y); }) == Errc::OnDiscriminant);
        continue;
      }
      CHECK(inverse_section(P, y) == x);
    }
  }
  CHECK(accepted == 6);
}

TEST_CASE("corrupted image is rejected") {
  auto F37 = make_prime_field(37);
  const PolySystem tc = S({"X2-X1^2", "X3-X1^3"}, F37, 3);
  Projection P = draw_projection(tc, 1, 3, 3);
  P.h = P.h + parse_poly("X", F37, 2);
  CHECK(code_of([&] { birational_check(tc, P, 3); }) == Errc::BirationalityFailed);
  Projection bare = P;
  bare.v.clear();
  CHECK(code_of([&] { inverse_section(bare, {F37->one(), F37->one()}); }) == Errc::FitFailed);
}
