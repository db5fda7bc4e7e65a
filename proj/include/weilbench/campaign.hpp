#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilbench/counting.hpp"
#include "weilbench/mpoly.hpp"

namespace weilbench {

// Uniform coefficients on every monomial of degree <= delta, degree-delta part nonzero.
MPoly random_poly(const FieldPtr& F, std::size_t n, int delta, Rng& rng);

// n = 2: the bivariate test. n >= 3: some absolutely irreducible plane
// restriction of full degree, found among `planes` seeded random planes.
bool certify_abs_irreducible(const MPoly& f, std::uint64_t seed, int planes = 16);

// Throws GenerationExhausted after max_tries rejected candidates.
MPoly gen_abs_irreducible(const FieldPtr& F, std::size_t n, int delta, std::uint64_t seed, int max_tries = 2000);

struct CampaignConfig {
  std::vector<std::string> fields;  // field specs, used round robin
  std::size_t nvars = 2;
  int delta_min = 1, delta_max = 1;
  std::size_t instances = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> formulas;  // empty: weil_curve for n = 2, the hypersurface theorems otherwise
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

struct Instance {
  std::size_t index = 0;
  std::string field;
  std::size_t nvars = 2;
  int delta = 1;
  std::string poly;
  std::vector<std::string> formulas;
};

struct CampaignRow {
  std::size_t instance = 0;
  std::uint64_t q = 0;
  std::size_t n = 0;
  int delta = 0;
  std::string poly;
  std::uint64_t N = 0;
  std::string deviation;  // |N - q^(n-1)|
  std::string formula;
  std::string bound;     // directed endpoint, 12 significant digits
  std::string rounding;  // RoundUp or RoundDown
  bool applicable = false;
  double margin = 0;  // bound - deviation (upper) or N - bound (lower)
  bool pass = false;
};

struct CampaignReport {
  std::vector<Instance> instances;
  std::vector<CampaignRow> rows;
  std::uint64_t violations = 0;  // applicable rows that fail
  double tightest_ratio = 0;     // max deviation / bound over applicable upper rows
  double seconds = 0;            // wall time, kept out of the deterministic part
};

std::vector<std::string> default_formulas(std::size_t nvars);

// The instance stream depends only on the config (never on threads).
std::vector<Instance> campaign_instances(const CampaignConfig& c);
std::vector<CampaignRow> evaluate_instance(const Instance& inst, std::uint64_t budget = kDefaultBudget);
CampaignReport run_campaign(const CampaignConfig& c);

std::string report_csv(const CampaignReport& r);
// Deterministic JSON; timing is reported only when with_timing is set.
std::string report_json(const CampaignReport& r, bool with_timing);
std::string instance_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

}  // namespace weilbench
