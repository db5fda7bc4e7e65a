#include "doctest.h"

#include "weilbench/campaign.hpp"
#include "weilbench/errors.hpp"
#include "weilbench/factor.hpp"

using namespace weilbench;

TEST_CASE("generator certification") {
  auto F3 = make_prime_field(3), F5 = make_prime_field(5);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const MPoly f = gen_abs_irreducible(F5, 2, 1, s);
    CHECK(f.total_degree() == 1);
  }
  // X^2 + Y^2 splits over F_9
  const MPoly bad = parse_poly("X^2+Y^2", F3, 2);
  CHECK_FALSE(certify_abs_irreducible(bad, 0));
  for (std::uint64_t s = 0; s < 200; ++s) {
    const MPoly f = gen_abs_irreducible(F3, 2, 2, s);
    CHECK(f.normalized() != bad);
    CHECK(is_absolutely_irreducible(f));
  }
  CHECK(certify_abs_irreducible(parse_poly("X1^2+X2^2+X3", F5, 3), 1));
  // a product never certifies, whatever planes are tried
  CHECK_FALSE(certify_abs_irreducible(parse_poly("(X1+X2)*(X3-1)", F5, 3), 2, 64));
}

TEST_CASE("linear campaign has zero deviation") {
  CampaignConfig c;
  c.fields = {"5", "7"};
  c.nvars = 3;
  c.instances = 6;
  c.seed = 9;
  c.formulas = {"cm_hypersurface"};
  const CampaignReport r = run_campaign(c);
  REQUIRE(r.rows.size() == 6);
  for (const auto& row : r.rows) {
    CHECK(row.deviation == "0");
    CHECK(row.N == row.q * row.q);
    CHECK(row.pass);
  }
  CHECK(r.violations == 0);
}

TEST_CASE("campaign determinism and replay") {
  CampaignConfig c;
  c.fields = {"5", "7", "3^2"};
  c.nvars = 2;
  c.delta_min = 2;
  c.delta_max = 3;
  c.instances = 9;
  c.seed = 4;
  const CampaignReport a = run_campaign(c);
  c.threads = 3;
  const CampaignReport b = run_campaign(c);
  CHECK(report_json(a, false) == report_json(b, false));
  CHECK(report_csv(a) == report_csv(b));
  CHECK(a.violations == 0);
  for (const auto& in : a.instances) {
    const Instance back = instance_from_json(instance_json(in));
    const auto rows = evaluate_instance(back);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].N == a.rows[in.index].N);
    CHECK(rows[0].bound == a.rows[in.index].bound);
  }
  CHECK_THROWS_AS(instance_from_json("{\"index\": 1}"), Error);
}
