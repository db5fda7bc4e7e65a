#include "weilbench/bertini.hpp"

#include <cmath>
#include <exception>
#include <thread>
#include <unordered_map>

#include "weilbench/bounds.hpp"
#include "weilbench/errors.hpp"
#include "weilbench/factor.hpp"

namespace weilbench {

namespace {

mpz_class zpow(std::uint64_t b, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

// chi(X, Y) = f(X + nu1, omega_i X + eta_i Y + nu_i); eta = 0 is allowed here.
MPoly chi(const MPoly& f, const PlaneParam& L) {
  const Field& F = *f.ctx();
  const std::size_t n = f.nvars();
  std::vector<std::vector<Elem>> A(n, std::vector<Elem>(2, F.zero()));
  A[0][0] = F.one();
  for (std::size_t i = 1; i < n; ++i) {
    A[i][0] = L.omega[i - 1];
    A[i][1] = L.eta[i - 1];
  }
  return affine_substitute(f, A, L.nu, 2);
}

struct ChiFacts {
  PiClass cls;
  bool abs_irreducible = false;
  int min_closure_degree = 0;  // 0: no nonconstant factor; -1: chi vanishes
};

ChiFacts analyze(const MPoly& g, std::uint64_t seed) {
  ChiFacts r;
  if (g.is_zero()) {
    r.cls.vanishing = true;
    r.min_closure_degree = -1;
    return r;
  }
  if (g.total_degree() < 1) {
    r.cls.j = 1;  // a nonzero constant has no factor: nu = 0
    return r;
  }
  const std::vector<int> degs = absolute_factor_degrees(g, seed);
  r.min_closure_degree = degs.front();
  r.abs_irreducible = is_absolutely_irreducible(g, seed);
  r.cls.nu = count_abs_irr_fq_factors(g, seed);
  r.cls.j = std::abs(r.cls.nu - 1);
  return r;
}

void decode(std::uint64_t idx, const Field& F, std::size_t n, PlaneParam& L) {
  const std::uint64_t q = F.size();
  L.nu.resize(n);
  L.omega.resize(n - 1);
  L.eta.resize(n - 1);
  for (std::size_t i = 0; i < n; ++i, idx /= q) L.nu[i] = F.element(idx % q);
  for (std::size_t i = 0; i + 1 < n; ++i, idx /= q) L.omega[i] = F.element(idx % q);
  for (std::size_t i = 0; i + 1 < n; ++i, idx /= q) L.eta[i] = F.element(idx % q);
}

bool eta_zero(const PlaneParam& L) {
  for (Elem e : L.eta)
    if (e.code != 0) return false;
  return true;
}

template <typename Work>
void run_blocks(unsigned nthreads, Work work) {
  if (nthreads <= 1) {
    work(0u);
    return;
  }
  std::vector<std::exception_ptr> errs(nthreads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      try {
        work(t);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

std::string str_q(const mpq_class& v) { return v.get_str(); }

CeilingCheck check_le(std::string name, const mpq_class& observed, const mpq_class& ceiling) {
  return {std::move(name), observed, str_q(ceiling), observed <= ceiling};
}

CeilingCheck check_le(std::string name, const mpq_class& observed, const Interval& ceiling) {
  const bool ok = mpfr_cmp_q(ceiling.hi(), observed.get_mpq_t()) >= 0;
  return {std::move(name), observed, ceiling.str(Rounding::Up), ok};
}

}  // namespace

void PiHistogram::add(const PiClass& c) {
  ++total;
  if (c.vanishing) {
    ++vanishing;
    return;
  }
  ++counts[c.j];
  ++nu[c.nu];
}

void PiHistogram::merge(const PiHistogram& o) {
  total += o.total;
  vanishing += o.vanishing;
  for (const auto& [j, c] : o.counts) counts[j] += c;
  for (const auto& [v, c] : o.nu) nu[v] += c;
}

bool PiHistogram::consistent() const {
  std::uint64_t s = vanishing;
  for (const auto& [j, c] : counts) s += c;
  return s == total;
}

PiClass classify_parametrization(const MPoly& f, const PlaneParam& L, std::uint64_t seed) {
  const MPoly fl = restrict_to_plane(f, L);
  PiClass c;
  if (fl.is_zero()) {
    c.vanishing = true;
    return c;
  }
  c.nu = count_abs_irr_fq_factors(fl, seed);
  c.j = std::abs(c.nu - 1);
  return c;
}

bool SweepReport::pass() const {
  if (!divisible || !histogram.consistent()) return false;
  for (const auto& c : ceilings)
    if (!c.pass) return false;
  return true;
}

SweepReport exhaustive_sweep(const MPoly& f, const SweepOptions& opt) {
  const FieldPtr& K = f.ctx();
  const std::size_t n = f.nvars();
  if (n < 2) fail(Errc::InvalidArgument, "plane sections need at least two variables");
  const int delta = f.total_degree();
  if (delta < 1) fail(Errc::InvalidArgument, "f must have positive degree");
  const std::uint64_t q = K->size();
  const mpz_class tuples_z = zpow(q, 3 * n - 2);
  if (tuples_z > mpz_class(std::to_string(opt.budget)))
    fail(Errc::BudgetExceeded, "sweep needs " + tuples_z.get_str() + " tuples, budget is " + std::to_string(opt.budget));
  const std::uint64_t tuples = tuples_z.get_ui();
  const int maxD = opt.max_degree > 0 ? std::min(opt.max_degree, delta - 1) : delta - 1;

  struct Partial {
    PiHistogram hist;
    std::uint64_t degenerate = 0, bad = 0;
    std::map<int, std::uint64_t> le_D;
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(opt.threads, 64));
  std::vector<Partial> parts(nthreads);
  run_blocks(nthreads, [&](unsigned tid) {
    Partial& P = parts[tid];
    std::unordered_map<std::string, ChiFacts> memo;
    PlaneParam L;
    const std::uint64_t lo = tuples * tid / nthreads, hi = tuples * (tid + 1) / nthreads;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      decode(idx, *K, n, L);
      const MPoly g = chi(f, L);
      const std::string key = g.to_string();
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, analyze(g, opt.seed)).first;
      const ChiFacts& fc = it->second;
      if (eta_zero(L)) ++P.degenerate;
      else P.hist.add(fc.cls);
      if (!fc.abs_irreducible) ++P.bad;
      for (int D = 1; D <= maxD; ++D)
        if (fc.min_closure_degree == -1 || (fc.min_closure_degree > 0 && fc.min_closure_degree <= D)) ++P.le_D[D];
    }
  });

  SweepReport rep;
  rep.q = q;
  rep.n = n;
  rep.delta = delta;
  for (const auto& P : parts) {
    rep.histogram.merge(P.hist);
    rep.degenerate += P.degenerate;
    rep.not_abs_irreducible += P.bad;
    for (const auto& [D, c] : P.le_D) rep.closure_factor_le_D[D] += c;
  }
  for (int D = 1; D <= maxD; ++D) rep.closure_factor_le_D.emplace(D, 0);

  const std::uint64_t orbit = q * q * q * (q - 1);
  rep.divisible = rep.histogram.vanishing % orbit == 0;
  for (const auto& [j, c] : rep.histogram.counts) rep.divisible = rep.divisible && c % orbit == 0;

  rep.ceilings.push_back(check_le("not absolutely irreducible", mpq_class(mpz_class(std::to_string(rep.not_abs_irreducible))),
                                  mpq_class(kaltofen_ceiling(static_cast<long>(q), static_cast<long>(n), delta))));
  for (const auto& [D, c] : rep.closure_factor_le_D)
    rep.ceilings.push_back(check_le("closure factor of degree <= " + std::to_string(D),
                                    mpq_class(mpz_class(std::to_string(c))),
                                    mpq_class(kaltofen_ceiling_D(static_cast<long>(q), static_cast<long>(n), delta, D))));

  if (!rep.divisible) fail(Errc::NotDivisible, "a class count is not a multiple of q^3 (q - 1)");
  for (const auto& c : rep.ceilings)
    if (!c.pass) fail(Errc::BoundViolation, c.name + ": observed " + c.observed.get_str() + " exceeds " + c.ceiling);
  return rep;
}

SampleReport sampled_sweep(const MPoly& f, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) fail(Errc::InvalidArgument, "need at least one sample");
  const FieldPtr& K = f.ctx();
  const std::size_t n = f.nvars();
  if (n < 2) fail(Errc::InvalidArgument, "plane sections need at least two variables");
  const int delta = std::max(f.total_degree(), 1);
  const std::uint64_t q = K->size();
  std::uint64_t eta_space = 1;
  for (std::size_t i = 1; i < n; ++i) eta_space *= q;
  Rng rng(mix_seed(seed, 0x62657274ULL));
  SampleReport rep;
  rep.samples = samples;
  double sum_j = 0, sum_j2 = 0;
  std::unordered_map<std::string, PiClass> memo;
  for (std::uint64_t s = 0; s < samples; ++s) {
    PlaneParam L;
    for (std::size_t i = 0; i < n; ++i) L.nu.push_back(K->element(uniform_below(rng, q)));
    for (std::size_t i = 1; i < n; ++i) L.omega.push_back(K->element(uniform_below(rng, q)));
    // nonzero eta drawn directly as an index in [1, q^(n-1))
    std::uint64_t e = 1 + uniform_below(rng, eta_space - 1);
    for (std::size_t i = 1; i < n; ++i, e /= q) L.eta.push_back(K->element(e % q));
    const MPoly g = restrict_to_plane(f, L);
    const std::string key = g.to_string();
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, analyze(g, seed).cls).first;
    const PiClass& c = it->second;
    rep.histogram.add(c);
    const double w = c.vanishing ? 0.0 : static_cast<double>(c.j);
    sum_j += w;
    sum_j2 += w * w;
  }
  const double N = static_cast<double>(samples);
  const double mean = sum_j / N;
  const double var = std::max(0.0, sum_j2 / N - mean * mean);
  const double half = 1.96 * std::sqrt(var / N);
  rep.b_ratio.value = mean;
  rep.b_ratio.lo = std::max(0.0, mean - half);
  rep.b_ratio.hi = mean + half;
  const double qd = static_cast<double>(q);
  rep.b_ratio.ceiling = (2 * std::pow(delta, 13.0 / 3) + 3 * std::pow(delta, 11.0 / 3)) * std::pow(qd, static_cast<double>(n) - 2) /
                        (std::pow(qd, static_cast<double>(n) - 1) - 1);
  rep.b_ratio.within = rep.b_ratio.lo <= rep.b_ratio.ceiling;

  // Wilson interval for the vanishing proportion
  const double ph = static_cast<double>(rep.histogram.vanishing) / N;
  const double z = 1.96, z2 = z * z;
  const double center = (ph + z2 / (2 * N)) / (1 + z2 / N);
  const double rad = z * std::sqrt(ph * (1 - ph) / N + z2 / (4 * N * N)) / (1 + z2 / N);
  rep.c_ratio.value = ph;
  rep.c_ratio.lo = std::max(0.0, center - rad);
  rep.c_ratio.hi = std::min(1.0, center + rad);
  rep.c_ratio.ceiling = static_cast<double>(delta) * delta / (qd * qd);
  rep.c_ratio.within = rep.c_ratio.lo <= rep.c_ratio.ceiling;
  return rep;
}

bool AccountingReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

AccountingReport plane_accounting(std::uint64_t q, std::size_t n, int delta, const PiHistogram& hist, bool enforce) {
  if (hist.unit != PiHistogram::Unit::Parametrizations)
    fail(Errc::InvalidArgument, "accounting expects a parametrization histogram");
  const std::uint64_t orbit = q * q * q * (q - 1);
  auto to_planes = [&](std::uint64_t c) {
    if (c % orbit != 0)
      fail(Errc::NotDivisible, std::to_string(c) + " parametrizations is not a multiple of q^3 (q - 1)");
    return c / orbit;
  };
  AccountingReport rep;
  rep.planes.unit = PiHistogram::Unit::Planes;
  rep.planes.total = to_planes(hist.total);
  rep.planes.vanishing = to_planes(hist.vanishing);
  for (const auto& [j, c] : hist.counts) rep.planes.counts[j] = to_planes(c);
  for (const auto& [v, c] : hist.nu) rep.planes.nu[v] = to_planes(c);

  const long ql = static_cast<long>(q), nl = static_cast<long>(n);
  const PlaneStats st = plane_statistics(ql, nl);
  rep.A = st.A;
  rep.MT = st.MT;
  rep.E = st.E;
  rep.D = st.D;
  rep.B = 0;
  for (const auto& [j, c] : rep.planes.counts) rep.B += mpz_class(std::to_string(c)) * j;
  rep.C = mpz_class(std::to_string(rep.planes.vanishing));
  const mpq_class A(rep.A), B(rep.B), C(rep.C);

  rep.checks.push_back({"planes classified = A", mpq_class(mpz_class(std::to_string(rep.planes.total))), rep.A.get_str(),
                        mpz_class(std::to_string(rep.planes.total)) == rep.A});
  const mpz_class qn2 = zpow(q, n - 2), qn1 = zpow(q, n - 1);
  const Interval coef = Interval::exact(2L) * Interval::exact(static_cast<long>(delta)).pow_rational(13, 3) +
                        Interval::exact(3L) * Interval::exact(static_cast<long>(delta)).pow_rational(11, 3);
  rep.checks.push_back(check_le("B/A", B / A, coef * Interval::exact(mpq_class(qn2, qn1 - 1))));
  rep.checks.push_back(check_le("C/A", C / A, mpq_class(delta * delta, static_cast<long>(q * q))));
  rep.checks.push_back(check_le("D/A", mpq_class(rep.D) / A, mpq_class(4, static_cast<long>(3 * q * q))));
  rep.checks.push_back(check_le("A/E", A / mpq_class(rep.E), mpq_class(qn2)));

  if (delta >= 2) {
    for (int j = 1; j < delta; ++j) {
      std::uint64_t tail = 0;
      for (const auto& [k, c] : rep.planes.counts)
        if (k >= j) tail += c;
      const PiClassBounds pb = pi_class_bounds(delta, ql, nl, j);
      rep.checks.push_back(check_le("class tail from j = " + std::to_string(j), mpq_class(mpz_class(std::to_string(tail))), pb.tail));
    }
    const PiClassBounds pb = pi_class_bounds(delta, ql, nl, 1);
    rep.checks.push_back(check_le("sum j #Pi_j", B, pb.sum_j_pi));
    if (pb.delta2) rep.checks.push_back(check_le("#Pi_1 for delta = 2", B, *pb.delta2));
    // Schmidt's estimate counts the vanishing class with weight q - 1 and
    // needs q above the regularity threshold of the main theorem.
    const mpq_class weighted = B + C * static_cast<long>(q - 1);
    CeilingCheck s = check_le("sum j #Pi_j with vanishing planes", weighted, pb.schmidt_lemma6);
    s.name += exceeds(ql, Interval::exact(15L) * Interval::exact(static_cast<long>(delta)).pow_rational(13, 3))
                  ? " (q above threshold)"
                  : " (q below threshold)";
    rep.report_only.push_back(s);
  }
  (void)C;
  if (enforce)
    for (const auto& c : rep.checks)
      if (!c.pass) fail(Errc::BoundViolation, c.name + ": observed " + c.observed.get_str() + " exceeds " + c.ceiling);
  return rep;
}

}  // namespace weilbench
