#include "weilbench/campaign.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "weilbench/bounds.hpp"
#include "weilbench/errors.hpp"
#include "weilbench/factor.hpp"

namespace weilbench {

using nlohmann::json;

MPoly random_poly(const FieldPtr& F, std::size_t n, int delta, Rng& rng) {
  const std::uint64_t q = F->size();
  for (;;) {
    MPoly f(F, n);
    bool top = false;
    Exponents e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == n) {
        const Elem c = F->element(uniform_below(rng, q));
        f.add_term(e, c);
        top = top || (left == 0 && c.code != 0);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[i] = static_cast<std::uint32_t>(k);
        rec(i + 1, left - k);
      }
      e[i] = 0;
    };
    rec(0, delta);
    if (top) return f;
  }
}

bool certify_abs_irreducible(const MPoly& f, std::uint64_t seed, int planes) {
  const int delta = f.total_degree();
  if (delta < 1) return false;
  if (f.nvars() == 1) return delta == 1;
  if (f.nvars() == 2) return is_absolutely_irreducible(f, seed);
  // a factorization of f restricts to one of f_L with the same degree split
  const FieldPtr& F = f.ctx();
  const std::uint64_t q = F->size();
  Rng rng(mix_seed(seed, 0x63657274ULL));
  for (int k = 0; k < planes; ++k) {
    PlaneParam L;
    for (std::size_t i = 0; i < f.nvars(); ++i) L.nu.push_back(F->element(uniform_below(rng, q)));
    bool zero = true;
    for (std::size_t i = 1; i < f.nvars(); ++i) {
      L.omega.push_back(F->element(uniform_below(rng, q)));
      L.eta.push_back(F->element(uniform_below(rng, q)));
      zero = zero && L.eta.back().code == 0;
    }
    if (zero) continue;
    const MPoly g = restrict_to_plane(f, L);
    if (g.total_degree() == delta && is_absolutely_irreducible(g, seed)) return true;
  }
  return false;
}

MPoly gen_abs_irreducible(const FieldPtr& F, std::size_t n, int delta, std::uint64_t seed, int max_tries) {
  if (delta < 1 || n < 2) fail(Errc::InvalidArgument, "generation needs delta >= 1 and n >= 2");
  Rng rng(mix_seed(seed, 0x67656eULL));
  for (int t = 0; t < max_tries; ++t) {
    MPoly f = random_poly(F, n, delta, rng);
    if (certify_abs_irreducible(f, mix_seed(seed, static_cast<std::uint64_t>(t)))) return f;
  }
  fail(Errc::GenerationExhausted, "no certified polynomial in " + std::to_string(max_tries) + " tries (seed " +
                                      std::to_string(seed) + ")");
}

std::vector<std::string> default_formulas(std::size_t nvars) {
  if (nvars == 2) return {"weil_curve"};
  return {"cm_hypersurface", "cm_hypersurface_regular"};
}

std::vector<Instance> campaign_instances(const CampaignConfig& c) {
  if (c.fields.empty()) fail(Errc::InvalidArgument, "campaign needs at least one field");
  if (c.delta_min < 1 || c.delta_max < c.delta_min) fail(Errc::InvalidArgument, "bad degree range");
  const std::size_t nd = static_cast<std::size_t>(c.delta_max - c.delta_min + 1);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < c.instances; ++i) {
    Instance in;
    in.index = i;
    in.field = c.fields[i % c.fields.size()];
    in.nvars = c.nvars;
    in.delta = c.delta_min + static_cast<int>((i / c.fields.size()) % nd);
    in.formulas = c.formulas.empty() ? default_formulas(c.nvars) : c.formulas;
    out.push_back(std::move(in));
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void generate(Instance& in, std::uint64_t seed) {
  const FieldPtr F = parse_field_spec(in.field);
  in.poly = gen_abs_irreducible(F, in.nvars, in.delta, mix_seed(seed, in.index)).to_string();
}

}  // namespace

std::vector<CampaignRow> evaluate_instance(const Instance& in, std::uint64_t budget) {
  const FieldPtr F = parse_field_spec(in.field);
  const MPoly f = parse_poly(in.poly, F, in.nvars);
  const std::uint64_t q = F->size();
  CountOptions co;
  co.budget = budget;
  const std::uint64_t N = count_hypersurface_fast(f, co, in.index);
  mpz_class qr;
  mpz_ui_pow_ui(qr.get_mpz_t(), q, in.nvars - 1);
  mpz_class dev = mpz_class(std::to_string(N)) - qr;
  dev = abs(dev);
  const long n = static_cast<long>(in.nvars);
  std::vector<CampaignRow> rows;
  for (const auto& id : in.formulas) {
    const BoundValue b = evaluate_formula(id, static_cast<long>(q), n, n - 1, in.delta, 0);
    CampaignRow row;
    row.instance = in.index;
    row.q = q;
    row.n = in.nvars;
    row.delta = in.delta;
    row.poly = in.poly;
    row.N = N;
    row.deviation = dev.get_str();
    row.formula = id;
    row.bound = b.str();
    row.rounding = b.dir == Rounding::Up ? "RoundUp" : "RoundDown";
    row.applicable = b.applicable;
    if (b.dir == Rounding::Up) {
      row.pass = b.upper_holds(dev);
      row.margin = b.to_double() - dev.get_d();
    } else {
      row.pass = b.lower_holds(mpz_class(std::to_string(N)));
      row.margin = static_cast<double>(N) - b.to_double();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CampaignReport run_campaign(const CampaignConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.instances = campaign_instances(c);
  const std::size_t total = rep.instances.size();
  std::vector<std::vector<CampaignRow>> rows(total);
  const unsigned nthreads = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(c.threads, total)));
  std::vector<std::exception_ptr> errs(nthreads);
  auto work = [&](unsigned tid) {
    try {
      for (std::size_t i = tid; i < total; i += nthreads) {
        generate(rep.instances[i], c.seed);
        rows[i] = evaluate_instance(rep.instances[i], c.budget);
      }
    } catch (...) {
      errs[tid] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  for (auto& rs : rows)
    for (auto& r : rs) {
      if (r.applicable && !r.pass) ++rep.violations;
      if (r.applicable && r.rounding == "RoundUp") {
        const double b = std::stod(r.bound);
        if (b > 0) rep.tightest_ratio = std::max(rep.tightest_ratio, std::stod(r.deviation) / b);
      }
      rep.rows.push_back(std::move(r));
    }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string report_csv(const CampaignReport& r) {
  std::ostringstream os;
  os << "instance,q,n,delta,poly,N,deviation,formula,bound,rounding,applicable,margin,pass\n";
  for (const auto& x : r.rows)
    os << x.instance << ',' << x.q << ',' << x.n << ',' << x.delta << ",\"" << x.poly << "\"," << x.N << ','
       << x.deviation << ',' << x.formula << ',' << x.bound << ',' << x.rounding << ',' << (x.applicable ? 1 : 0)
       << ',' << format_double(x.margin) << ',' << (x.pass ? 1 : 0) << '\n';
  return os.str();
}

namespace {

json instance_obj(const Instance& in) {
  return {{"index", in.index}, {"field", in.field}, {"nvars", in.nvars},
          {"delta", in.delta}, {"poly", in.poly},   {"formulas", in.formulas}};
}

}  // namespace

std::string report_json(const CampaignReport& r, bool with_timing) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"instance", x.instance},
                    {"q", x.q},
                    {"n", x.n},
                    {"delta", x.delta},
                    {"poly", x.poly},
                    {"N", x.N},
                    {"deviation", x.deviation},
                    {"formula", x.formula},
                    {"bound", x.bound},
                    {"rounding", x.rounding},
                    {"applicable", x.applicable},
                    {"margin", format_double(x.margin)},
                    {"pass", x.pass}});
  json j = {{"rows", rows},
            {"summary", {{"violations", r.violations}, {"tightest_ratio", format_double(r.tightest_ratio)}}}};
  if (with_timing) j["timing"] = {{"seconds", r.seconds}};
  return j.dump(2) + "\n";
}

std::string instance_json(const Instance& in) { return instance_obj(in).dump(2) + "\n"; }

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    Instance in;
    in.index = j.at("index").get<std::size_t>();
    in.field = j.at("field").get<std::string>();
    in.nvars = j.at("nvars").get<std::size_t>();
    in.delta = j.at("delta").get<int>();
    in.poly = j.at("poly").get<std::string>();
    in.formulas = j.at("formulas").get<std::vector<std::string>>();
    return in;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("bad instance JSON: ") + e.what());
  }
}

}  // namespace weilbench
