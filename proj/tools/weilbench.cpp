#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "weilbench/bertini.hpp"
#include "weilbench/bounds.hpp"
#include "weilbench/campaign.hpp"
#include "weilbench/counting.hpp"
#include "weilbench/errors.hpp"
#include "weilbench/factor.hpp"
#include "weilbench/project.hpp"

using namespace weilbench;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 2, kExitInput = 3, kExitBudget = 4;

struct Global {
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  std::string out;
  std::string format = "json";
};

struct Input {
  std::string field;
  std::size_t nvars = 2;
  std::vector<std::string> polys;
};

void add_input(CLI::App* sc, Input& in, bool many) {
  sc->add_option("--field", in.field, "field spec, p or p^k")->required();
  sc->add_option("--nvars", in.nvars, "number of variables")->default_val(2);
  if (many)
    sc->add_option("--poly", in.polys, "polynomial (repeat for a system)")->required();
  else
    sc->add_option("--poly", in.polys, "polynomial")->required()->expected(1);
}

std::vector<MPoly> parse_input(const Input& in, FieldPtr& F) {
  F = parse_field_spec(in.field);
  std::vector<MPoly> out;
  for (const auto& s : in.polys) out.push_back(parse_poly(s, F, in.nvars));
  return out;
}

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) fail(Errc::InvalidArgument, "cannot write " + g.out);
  f << text;
}

void emit_json(const Global& g, const json& j) { emit(g, j.dump(2) + "\n"); }

json checks_json(const std::vector<CeilingCheck>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"observed", c.observed.get_str()}, {"ceiling", c.ceiling}, {"pass", c.pass}});
  return a;
}

json histogram_json(const PiHistogram& h) {
  json counts = json::object(), nu = json::object();
  for (const auto& [j, c] : h.counts) counts[std::to_string(j)] = c;
  for (const auto& [v, c] : h.nu) nu[std::to_string(v)] = c;
  return {{"unit", h.unit == PiHistogram::Unit::Planes ? "planes" : "parametrizations"},
          {"counts", counts},
          {"vanishing", h.vanishing},
          {"total", h.total},
          {"nu", nu}};
}

json bound_json(const BoundValue& b) {
  json in = json::object();
  for (const auto& [k, v] : b.inputs) in[k] = v;
  return {{"formula", b.formula},  {"value", b.str()},         {"rounding", b.dir == Rounding::Up ? "RoundUp" : "RoundDown"},
          {"exact", b.exact ? json(b.exact->get_str()) : json(nullptr)},
          {"inputs", in},          {"applicable", b.applicable}, {"trivial", b.trivial}};
}

std::vector<std::string> elems(const Field& F, const std::vector<Elem>& v) {
  std::vector<std::string> out;
  for (Elem e : v) out.push_back(F.format(e));
  return out;
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::BudgetExceeded: return kExitBudget;
    case Errc::BoundViolation:
    case Errc::BirationalityFailed:
    case Errc::NotDivisible: return kExitViolation;
    case Errc::InternalVerifyFailed: return 1;
    default: return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts, factor detection and bound verification over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  if (const char* env = std::getenv("WEILBENCH_BUDGET")) {
    try {
      g.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: WEILBENCH_BUDGET is not a number\n";
      return kExitInput;
    }
  }
  app.add_option("--seed", g.seed, "random seed")->default_val(0);
  app.add_option("--budget", g.budget, "evaluation budget");
  app.add_option("--threads", g.threads, "worker threads")->default_val(1);
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  Input cnt;
  unsigned ext = 1;
  auto* c_count = app.add_subcommand("count", "number of common zeros in F_(q^t)^n");
  add_input(c_count, cnt, true);
  c_count->add_option("--extension", ext, "count over F_(q^t)")->default_val(1);

  Input fac;
  int fac_D = 0;
  std::string fac_mode = "base";
  auto* c_factor = app.add_subcommand("factor", "factors of degree <= D of a bivariate polynomial");
  add_input(c_factor, fac, false);
  c_factor->add_option("--max-degree", fac_D, "largest factor degree D (default deg f - 1)");
  c_factor->add_option("--mode", fac_mode, "base or root")->check(CLI::IsMember({"base", "root"}));

  long bq = 0, bn = 2, br = -1, bdelta = 1, bp = 0;
  std::string bformula;
  bool btable = false;
  auto* c_bounds = app.add_subcommand("bounds", "evaluate the bound catalog");
  c_bounds->add_option("--q", bq, "field size")->required();
  c_bounds->add_option("--n", bn, "ambient dimension")->default_val(2);
  c_bounds->add_option("--r", br, "dimension (default n - 1)");
  c_bounds->add_option("--delta", bdelta, "degree")->default_val(1);
  c_bounds->add_option("--p", bp, "characteristic (default: smallest prime factor of q)");
  c_bounds->add_option("--formula", bformula, "one formula id");
  c_bounds->add_flag("--table", btable, "every formula");

  Input ber;
  bool ber_exh = false;
  std::uint64_t ber_samples = 0;
  int ber_D = 0;
  auto* c_bertini = app.add_subcommand("bertini", "classify plane sections");
  add_input(c_bertini, ber, false);
  auto* o_exh = c_bertini->add_flag("--exhaustive", ber_exh, "every tuple of F_q^(3n-2)");
  auto* o_smp = c_bertini->add_option("--samples", ber_samples, "number of sampled parametrizations");
  o_exh->excludes(o_smp);
  c_bertini->add_option("--max-degree", ber_D, "largest D for the closure-factor ceilings");

  Input prj;
  std::size_t prj_r = 1;
  int prj_delta = 1;
  bool prj_check = false;
  auto* c_project = app.add_subcommand("project", "project a variety onto a hypersurface");
  add_input(c_project, prj, true);
  c_project->add_option("--dim", prj_r, "dimension r of V")->required();
  c_project->add_option("--degree", prj_delta, "degree of V")->required();
  c_project->add_flag("--check", prj_check, "run the birationality check");

  CampaignConfig cc;
  std::string replay;
  auto* c_campaign = app.add_subcommand("campaign", "bound-verification suite over random instances");
  c_campaign->add_option("--field", cc.fields, "field spec (repeatable)");
  c_campaign->add_option("--nvars", cc.nvars, "number of variables")->default_val(2);
  c_campaign->add_option("--delta-min", cc.delta_min, "smallest degree")->default_val(1);
  c_campaign->add_option("--delta-max", cc.delta_max, "largest degree")->default_val(1);
  c_campaign->add_option("--instances", cc.instances, "number of instances")->default_val(1);
  c_campaign->add_option("--formula", cc.formulas, "formula id to assert (repeatable)");
  c_campaign->add_option("--replay", replay, "re-evaluate one serialized instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*c_count) {
      FieldPtr F;
      const PolySystem S(parse_input(cnt, F));
      CountOptions co{g.budget, g.threads};
      const std::uint64_t N = ext == 1 ? count_points(S, co) : count_over_extension(S, ext, co);
      emit_json(g, {{"field", F->spec()}, {"extension", ext}, {"nvars", cnt.nvars}, {"N", N}});
      return 0;
    }
    if (*c_factor) {
      FieldPtr F;
      const MPoly f = parse_input(fac, F).front();
      if (fac.nvars != 2) fail(Errc::InvalidArgument, "factor needs a bivariate polynomial");
      const int D = fac_D > 0 ? fac_D : std::max(1, f.total_degree() - 1);
      const FactorReport r =
          find_factors(f, D, fac_mode == "root" ? SolutionField::RootFieldKi : SolutionField::BaseK, g.seed);
      json fs = json::array();
      for (const auto& h : r.factors) fs.push_back({{"factor", h.to_string()}, {"field", h.ctx()->spec()}});
      emit_json(g, {{"poly", f.to_string()},
                    {"max_degree", D},
                    {"found", r.status == FactorStatus::FoundFactors},
                    {"factors", fs},
                    {"absolutely_irreducible", is_absolutely_irreducible(f, g.seed)},
                    {"nu", count_abs_irr_fq_factors(f, g.seed)},
                    {"systems_tried", r.systems_tried},
                    {"systems_solved", r.systems_solved}});
      return 0;
    }
    if (*c_bounds) {
      const long r = br >= 0 ? br : bn - 1;
      std::vector<std::string> ids;
      if (btable || bformula.empty())
        ids = formula_ids();
      else
        ids = {bformula};
      std::vector<BoundValue> vals;
      for (const auto& id : ids) {
        try {
          vals.push_back(evaluate_formula(id, bq, bn, r, bdelta, bp));
        } catch (const Error& e) {
          if (ids.size() == 1) throw;  // table mode skips formulas whose inputs do not apply
        }
      }
      if (g.format == "csv") {
        std::ostringstream os;
        os << "formula,value,rounding,applicable,trivial\n";
        for (const auto& b : vals)
          os << b.formula << ',' << b.str() << ',' << (b.dir == Rounding::Up ? "RoundUp" : "RoundDown") << ','
             << b.applicable << ',' << b.trivial << '\n';
        emit(g, os.str());
      } else {
        json a = json::array();
        for (const auto& b : vals) a.push_back(bound_json(b));
        emit_json(g, a);
      }
      return 0;
    }
    if (*c_bertini) {
      FieldPtr F;
      const MPoly f = parse_input(ber, F).front();
      if (!ber_exh && ber_samples == 0) fail(Errc::InvalidArgument, "choose --exhaustive or --samples N");
      if (ber_exh) {
        SweepOptions so;
        so.budget = g.budget;
        so.threads = g.threads;
        so.max_degree = ber_D;
        so.seed = g.seed;
        const SweepReport r = exhaustive_sweep(f, so);
        const AccountingReport acc = plane_accounting(r.q, r.n, r.delta, r.histogram);
        json le = json::object();
        for (const auto& [D, c] : r.closure_factor_le_D) le[std::to_string(D)] = c;
        emit_json(g, {{"poly", f.to_string()},
                      {"q", r.q},
                      {"n", r.n},
                      {"delta", r.delta},
                      {"histogram", histogram_json(r.histogram)},
                      {"degenerate", r.degenerate},
                      {"not_absolutely_irreducible", r.not_abs_irreducible},
                      {"closure_factor_le_D", le},
                      {"ceilings", checks_json(r.ceilings)},
                      {"planes", histogram_json(acc.planes)},
                      {"A", acc.A.get_str()},
                      {"B", acc.B.get_str()},
                      {"C", acc.C.get_str()},
                      {"D", acc.D.get_str()},
                      {"E", acc.E.get_str()},
                      {"accounting", checks_json(acc.checks)},
                      {"report_only", checks_json(acc.report_only)},
                      {"pass", r.pass() && acc.pass()}});
      } else {
        const SampleReport s = sampled_sweep(f, ber_samples, g.seed);
        auto ratio = [](const RatioEstimate& e) {
          return json{{"value", e.value}, {"lo", e.lo}, {"hi", e.hi}, {"ceiling", e.ceiling}, {"within", e.within}};
        };
        emit_json(g, {{"poly", f.to_string()},
                      {"samples", s.samples},
                      {"seed", g.seed},
                      {"histogram", histogram_json(s.histogram)},
                      {"B_over_A", ratio(s.b_ratio)},
                      {"C_over_A", ratio(s.c_ratio)}});
      }
      return 0;
    }
    if (*c_project) {
      FieldPtr F;
      const PolySystem V(parse_input(prj, F));
      ProjectOptions po;
      po.budget = g.budget;
      const Projection P = draw_projection(V, prj_r, prj_delta, g.seed, po);
      json lam = json::array(), v = json::array(), fails = json::object();
      for (const auto& row : P.lambda) lam.push_back(elems(*F, row));
      for (const auto& vi : P.v) v.push_back(vi.to_string());
      for (const auto& [k, c] : P.failures) fails[k] = c;
      json j = {{"lambda", lam}, {"gamma", elems(*F, P.gamma)}, {"h", P.h.to_string()}, {"h0", P.h0.to_string()},
                {"v", v},        {"attempts", P.attempts},        {"rejections", fails}};
      if (prj_check) {
        const BirationalReport b = birational_check(V, P, prj_delta, po);
        j["check"] = {{"V_points", b.V_points}, {"V_off_discriminant", b.V_off}, {"W_points", b.W_points},
                      {"W_off_discriminant", b.W_off}, {"ceiling", b.ceiling.get_str()}, {"pass", b.pass()}};
      }
      emit_json(g, j);
      return 0;
    }
    if (*c_campaign) {
      if (!replay.empty()) {
        std::ifstream in(replay);
        if (!in) fail(Errc::InvalidArgument, "cannot read " + replay);
        std::stringstream ss;
        ss << in.rdbuf();
        CampaignReport r;
        r.instances.push_back(instance_from_json(ss.str()));
        r.rows = evaluate_instance(r.instances.front(), g.budget);
        for (const auto& row : r.rows) r.violations += row.applicable && !row.pass;
        emit(g, g.format == "csv" ? report_csv(r) : report_json(r, false));
        return r.violations ? kExitViolation : 0;
      }
      cc.seed = g.seed;
      cc.budget = g.budget;
      cc.threads = g.threads;
      const CampaignReport r = run_campaign(cc);
      emit(g, g.format == "csv" ? report_csv(r) : report_json(r, true));
      if (r.violations) {
        for (const auto& row : r.rows)
          if (row.applicable && !row.pass) std::cerr << instance_json(r.instances[row.instance]);
        return kExitViolation;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return 0;
}
