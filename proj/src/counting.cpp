#include "weilbench/counting.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "weilbench/errors.hpp"
#include "weilbench/upoly.hpp"

namespace weilbench {

namespace {

// Flat term list for fast repeated evaluation.
struct Compiled {
  std::size_t n = 0;
  int maxdeg = 0;
  std::vector<Elem> coef;
  std::vector<std::uint32_t> exps;  // n per term
};

Compiled compile(const MPoly& f) {
  Compiled c;
  c.n = f.nvars();
  c.maxdeg = std::max(f.total_degree(), 0);
  for (const auto& [e, a] : f.terms()) {
    c.coef.push_back(a);
    c.exps.insert(c.exps.end(), e.begin(), e.end());
  }
  return c;
}

// Powers x^k for k <= maxdeg of each coordinate; pw is n * (maxdeg + 1).
void fill_powers(const Field& F, const Point& x, int maxdeg, std::vector<Elem>& pw) {
  const std::size_t w = static_cast<std::size_t>(maxdeg) + 1;
  pw.resize(x.size() * w);
  for (std::size_t i = 0; i < x.size(); ++i) {
    pw[i * w] = F.one();
    for (std::size_t k = 1; k < w; ++k) pw[i * w + k] = F.mul(pw[i * w + k - 1], x[i]);
  }
}

Elem eval_with_powers(const Field& F, const Compiled& c, const std::vector<Elem>& pw, int maxdeg) {
  const std::size_t w = static_cast<std::size_t>(maxdeg) + 1;
  Elem acc{0};
  for (std::size_t t = 0; t < c.coef.size(); ++t) {
    Elem v = c.coef[t];
    const std::uint32_t* e = &c.exps[t * c.n];
    for (std::size_t i = 0; i < c.n && v.code; ++i)
      if (e[i]) v = F.mul(v, pw[i * w + e[i]]);
    acc = F.add(acc, v);
  }
  return acc;
}

std::uint64_t checked_power(std::uint64_t q, std::size_t k, std::uint64_t budget, const char* what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > budget / q) fail(Errc::BudgetExceeded, std::string(what) + " exceeds the budget of " + std::to_string(budget));
    r *= q;
  }
  if (r > budget) fail(Errc::BudgetExceeded, std::string(what) + " exceeds the budget of " + std::to_string(budget));
  return r;
}

// Decodes a lexicographic index into coordinates (first coordinate most significant).
void index_to_point(std::uint64_t idx, std::uint64_t q, Point& x) {
  for (std::size_t i = x.size(); i-- > 0;) {
    x[i] = Elem{static_cast<std::uint32_t>(idx % q)};
    idx /= q;
  }
}

}  // namespace

PolySystem::PolySystem(std::vector<MPoly> ps) : polys(std::move(ps)) {
  if (polys.empty()) fail(Errc::InvalidArgument, "empty polynomial system");
  ctx = polys[0].ctx();
  nvars = polys[0].nvars();
  for (const auto& p : polys) {
    require_same(ctx, p.ctx());
    if (p.nvars() != nvars) fail(Errc::ArityMismatch, "system polynomials have different arity");
  }
}

int PolySystem::max_degree() const {
  int d = 0;
  for (const auto& p : polys) d = std::max(d, p.total_degree());
  return d;
}

PolySystem PolySystem::embed_into(const FieldPtr& to) const {
  std::vector<MPoly> ps;
  for (const auto& p : polys) ps.push_back(p.embed_into(to));
  return PolySystem(std::move(ps));
}

std::uint64_t count_points(const PolySystem& sys, const CountOptions& opt) {
  const Field& F = *sys.ctx;
  const std::uint64_t q = F.size();
  const std::uint64_t total = checked_power(q, sys.nvars, opt.budget, "exhaustive count");
  std::vector<Compiled> comp;
  for (const auto& p : sys.polys) comp.push_back(compile(p));
  const int maxdeg = std::max(sys.max_degree(), 0);
  const unsigned nthreads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 1024))));
  std::vector<std::uint64_t> partial(nthreads, 0);
  auto work = [&](unsigned tid) {
    const std::uint64_t lo = total * tid / nthreads, hi = total * (tid + 1) / nthreads;
    Point x(sys.nvars);
    std::vector<Elem> pw;
    std::uint64_t cnt = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      index_to_point(idx, q, x);
      fill_powers(F, x, maxdeg, pw);
      bool zero = true;
      for (const auto& c : comp) {
        if (eval_with_powers(F, c, pw, maxdeg).code != 0) {
          zero = false;
          break;
        }
      }
      cnt += zero;
    }
    partial[tid] = cnt;
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::uint64_t sum = 0;
  for (auto v : partial) sum += v;
  return sum;
}

std::uint64_t count_hypersurface_fast(const MPoly& f, const CountOptions& opt, std::uint64_t audit_seed) {
  const Field& F = *f.ctx();
  const std::uint64_t q = F.size();
  const std::size_t n = f.nvars();
  if (f.is_zero()) return checked_power(q, n, UINT64_MAX, "zero polynomial count");
  std::size_t v = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (f.degree_in(i) > f.degree_in(v)) v = i;
  const int dv = f.degree_in(v);
  const std::uint64_t fibers = checked_power(q, n - 1, opt.budget, "fiber count");
  // c_k(other variables) with X_v^k stripped out
  std::vector<Compiled> coeff;
  for (int k = 0; k <= dv; ++k) {
    MPoly ck(f.ctx(), n - 1);
    for (const auto& [e, a] : f.terms()) {
      if (e[v] != static_cast<std::uint32_t>(k)) continue;
      Exponents r;
      for (std::size_t i = 0; i < n; ++i)
        if (i != v) r.push_back(e[i]);
      ck.add_term(r, a);
    }
    coeff.push_back(compile(ck));
  }
  const Compiled full = compile(f);
  const int maxdeg = std::max(f.total_degree(), 0);
  std::unordered_set<std::uint64_t> audit;
  {
    Rng rng(mix_seed(audit_seed, 0x61756469ULL));
    const std::uint64_t want = std::max<std::uint64_t>(1, fibers / 100);
    while (audit.size() < want) audit.insert(uniform_below(rng, fibers));
  }
  const unsigned nthreads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::min<std::uint64_t>(fibers, 1024))));
  std::vector<std::uint64_t> partial(nthreads, 0);
  std::vector<int> audit_failed(nthreads, 0);
  auto work = [&](unsigned tid) {
    const std::uint64_t lo = fibers * tid / nthreads, hi = fibers * (tid + 1) / nthreads;
    Point y(n - 1), x(n);
    std::vector<Elem> pw, pwx;
    std::uint64_t cnt = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      index_to_point(idx, q, y);
      fill_powers(F, y, maxdeg, pw);
      UPoly g(dv + 1);
      for (int k = 0; k <= dv; ++k) g[k] = eval_with_powers(F, coeff[k], pw, maxdeg);
      up::trim(g);
      const std::uint64_t roots = up::count_distinct_roots(F, g);
      cnt += roots;
      if (audit.count(idx)) {
        std::uint64_t direct = 0;
        for (std::size_t i = 0, j = 0; i < n; ++i)
          if (i != v) x[i] = y[j++];
        for (std::uint64_t a = 0; a < q; ++a) {
          x[v] = Elem{static_cast<std::uint32_t>(a)};
          fill_powers(F, x, maxdeg, pwx);
          direct += eval_with_powers(F, full, pwx, maxdeg).code == 0;
        }
        if (direct != roots) audit_failed[tid] = 1;
      }
    }
    partial[tid] = cnt;
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (int a : audit_failed)
    if (a) fail(Errc::InternalVerifyFailed, "fiber count disagrees with direct evaluation");
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

std::uint64_t count_over_extension(const PolySystem& sys, unsigned t, const CountOptions& opt) {
  return count_points(sys.embed_into(make_extension(sys.ctx, t, 0)), opt);
}

std::vector<Point> variety_points(const PolySystem& sys, const FieldPtr& L, std::uint64_t full_limit,
                                  std::size_t max_points, Rng& rng, std::uint64_t budget) {
  const PolySystem S = sys.embed_into(L);
  const Field& F = *L;
  const std::uint64_t Q = F.size();
  const std::size_t n = S.nvars;
  const std::size_t last = n - 1;
  std::vector<std::vector<Compiled>> coeff(S.polys.size());
  int maxdeg = std::max(S.max_degree(), 0);
  for (std::size_t s = 0; s < S.polys.size(); ++s) {
    const MPoly& f = S.polys[s];
    const int dv = std::max(f.degree_in(last), 0);
    for (int k = 0; k <= dv; ++k) {
      MPoly ck(L, n - 1);
      for (const auto& [e, a] : f.terms()) {
        if (e[last] != static_cast<std::uint32_t>(k)) continue;
        ck.add_term(Exponents(e.begin(), e.end() - 1), a);
      }
      coeff[s].push_back(compile(ck));
    }
  }
  std::vector<Point> out;
  Point y(n - 1);
  std::vector<Elem> pw;
  auto visit = [&](const Point& yy) {
    fill_powers(F, yy, maxdeg, pw);
    UPoly g;
    for (std::size_t s = 0; s < coeff.size(); ++s) {
      UPoly u(coeff[s].size());
      for (std::size_t k = 0; k < coeff[s].size(); ++k) u[k] = eval_with_powers(F, coeff[s][k], pw, maxdeg);
      up::trim(u);
      g = up::gcd(F, g, u);
      if (up::deg(g) == 0) return;
    }
    Point x(yy);
    x.push_back(Elem{0});
    if (g.empty()) {
      for (std::uint64_t a = 0; a < Q; ++a) {
        x[last] = Elem{static_cast<std::uint32_t>(a)};
        out.push_back(x);
      }
      return;
    }
    for (Elem r : up::roots(F, g)) {
      x[last] = r;
      out.push_back(x);
    }
  };
  long double fibers_ld = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) fibers_ld *= static_cast<long double>(Q);
  if (fibers_ld <= static_cast<long double>(full_limit)) {
    const std::uint64_t fibers = static_cast<std::uint64_t>(fibers_ld);
    if (fibers > budget) fail(Errc::BudgetExceeded, "fiber enumeration exceeds the budget");
    for (std::uint64_t idx = 0; idx < fibers; ++idx) {
      index_to_point(idx, Q, y);
      visit(y);
    }
    return out;
  }
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t tries = 0; tries < budget && out.size() < max_points; ++tries) {
    for (auto& c : y) c = Elem{static_cast<std::uint32_t>(uniform_below(rng, Q))};
    std::uint64_t key = 0;
    for (auto c : y) key = key * Q + c.code;
    if (!seen.insert(key).second) continue;
    visit(y);
  }
  return out;
}

LemmaReport assert_lemma_bounds(const PolySystem& sys, int r, int delta, PointLemma lemma, const CountOptions& opt) {
  LemmaReport rep;
  rep.lemma = lemma;
  rep.count = count_points(sys, opt);
  const mpz_class q(static_cast<unsigned long>(sys.ctx->size()));
  auto qpow = [&](long k) {
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    return v;
  };
  const mpz_class d(delta);
  const long n = static_cast<long>(sys.nvars);
  switch (lemma) {
    case PointLemma::DegreeTimesQr:
      rep.bound = mpq_class(d * qpow(r));
      break;
    case PointLemma::CoprimePairSquared:
      if (n < 2) fail(Errc::InvalidArgument, "needs at least two variables");
      rep.bound = mpq_class(d * d * qpow(n - 2));
      break;
    case PointLemma::NonAbsIrreducible:
      if (r < 1) fail(Errc::InvalidArgument, "needs dimension at least 1");
      rep.bound = mpq_class(d * d * qpow(r - 1), 4);
      rep.bound.canonicalize();
      break;
  }
  rep.holds = mpq_class(mpz_class(static_cast<unsigned long>(rep.count))) <= rep.bound;
  if (!rep.holds)
    fail(Errc::BoundViolation, "point count " + std::to_string(rep.count) + " exceeds " + rep.bound.get_str());
  return rep;
}

}  // namespace weilbench
